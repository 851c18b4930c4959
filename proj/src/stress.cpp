/*
Copyright 2026 The inkscore Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "inkscore/stress.hpp"

#include <cmath>

namespace inkscore {
namespace {

inline double plogp(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

double shannon_entropy(const SentimentScores& s) {
    return -(plogp(s.negative) + plogp(s.neutral) + plogp(s.positive));
}

double stress_index(const SentimentScores& s, const StressWeights& w, bool* clamped) {
    const double raw =
        w.w_neg * s.negative + w.w_entropy * shannon_entropy(s) + w.w_posdef * (1.0 - s.positive);
    const double out = raw < 0.0 ? 0.0 : (raw > 1.0 ? 1.0 : raw);
    if (clamped) *clamped = (out != raw);
    return out;
}

StressClass classify_stress(double stress, double threshold) {
    return stress > threshold ? StressClass::high : StressClass::low;
}

const char* stress_class_name(StressClass c) {
    return c == StressClass::high ? "high" : "low";
}

PageStressRecord build_record(const std::string& label, const SentimentScores& s,
                              const StressWeights& w) {
    PageStressRecord rec;
    rec.student = label;
    rec.sentiment = s;
    rec.entropy = shannon_entropy(s);
    rec.stress_index = stress_index(s, w);
    return rec;
}

}  // namespace inkscore
