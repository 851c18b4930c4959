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

#pragma once

#include <string>

#include "inkscore/backends.hpp"

namespace inkscore {

/// Fusion weights for the stress index. The defaults are the scoring
/// constants this pipeline is built around; change them only for experiments.
struct StressWeights {
    double w_neg = 0.6;
    double w_entropy = 0.3;
    double w_posdef = 0.1;

    bool valid() const { return w_neg >= 0 && w_entropy >= 0 && w_posdef >= 0; }
};

/// The per-page unit of output: sentiment triple, its Shannon entropy (nats),
/// and the fused stress index in [0, 1].
struct PageStressRecord {
    std::string student;  // page label, e.g. "student0_page_2"
    SentimentScores sentiment;
    double entropy = 0.0;
    double stress_index = 0.0;
};

/// H = -sum(p ln p) in nats, with 0 ln 0 = 0. Bounded by ln 3.
double shannon_entropy(const SentimentScores& s);

/// w_neg*P_neg + w_entropy*H + w_posdef*(1 - P_pos), clamped to [0, 1].
/// With default weights the raw value can reach ~1.0296, so the clamp binds
/// only near maximal negativity-with-uncertainty; `clamped` reports it.
double stress_index(const SentimentScores& s, const StressWeights& w = {},
                    bool* clamped = nullptr);

enum class StressClass { low, high };

/// high iff S > threshold (strict).
StressClass classify_stress(double stress, double threshold = 0.30);

const char* stress_class_name(StressClass c);

PageStressRecord build_record(const std::string& label, const SentimentScores& s,
                              const StressWeights& w = {});

}  // namespace inkscore
