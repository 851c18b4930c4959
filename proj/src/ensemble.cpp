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

#include "inkscore/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "inkscore/util.hpp"

namespace inkscore {
namespace {

constexpr double kConfidenceTie = 1e-9;

template <typename Seq>
uint32_t levenshtein(const Seq& a, const Seq& b) {
    const size_t n = a.size(), m = b.size();
    if (n == 0) return uint32_t(m);
    if (m == 0) return uint32_t(n);
    std::vector<uint32_t> prev(m + 1), cur(m + 1);
    std::iota(prev.begin(), prev.end(), 0u);
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = uint32_t(i);
        for (size_t j = 1; j <= m; ++j) {
            const uint32_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

}  // namespace

uint32_t edit_distance(const std::string& a, const std::string& b) {
    if (a == b) return 0;
    return levenshtein(utf8_to_scalars(a), utf8_to_scalars(b));
}

uint32_t edit_distance_tokens(const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
    return levenshtein(a, b);
}

double similarity(const std::string& a, const std::string& b) {
    const size_t la = utf8_to_scalars(a).size();
    const size_t lb = utf8_to_scalars(b).size();
    const size_t longest = std::max(la, lb);
    if (longest == 0) return 1.0;
    return 1.0 - double(edit_distance(a, b)) / double(longest);
}

const char* vote_method_name(VoteMethod m) {
    switch (m) {
        case VoteMethod::max_confidence: return "max_confidence";
        case VoteMethod::similarity_tiebreak: return "similarity_tiebreak";
        case VoteMethod::priority_tiebreak: return "priority_tiebreak";
        case VoteMethod::sole_candidate: return "sole_candidate";
    }
    return "?";
}

VotingResult vote(std::vector<OcrCandidate> candidates,
                  const std::vector<std::pair<std::string, int>>& priorities) {
    if (candidates.empty()) throw std::invalid_argument("vote: empty candidate list");

    VotingResult result;
    result.candidates = candidates;
    const size_t n = candidates.size();
    if (n == 1) {
        result.selected = std::move(candidates.front());
        result.method = VoteMethod::sole_candidate;
        return result;
    }

    auto priority_of = [&](const std::string& backend_id) {
        for (const auto& [id, prio] : priorities)
            if (id == backend_id) return prio;
        return std::numeric_limits<int>::max();
    };

    double max_conf = -1.0;
    for (const auto& c : candidates) max_conf = std::max(max_conf, c.confidence);
    std::vector<size_t> leaders;
    for (size_t i = 0; i < n; ++i)
        if (candidates[i].confidence >= max_conf - kConfidenceTie) leaders.push_back(i);

    if (leaders.size() == 1) {
        result.selected = candidates[leaders.front()];
        result.method = VoteMethod::max_confidence;
        return result;
    }

    // Mean similarity of each confidence-tied leader to every other candidate.
    // Summands are sorted first so the mean is independent of input order.
    std::vector<double> mean_sim(n, -1.0);
    for (size_t i : leaders) {
        std::vector<double> sims;
        sims.reserve(n - 1);
        for (size_t j = 0; j < n; ++j)
            if (j != i) sims.push_back(similarity(candidates[i].text, candidates[j].text));
        std::sort(sims.begin(), sims.end());
        mean_sim[i] = std::accumulate(sims.begin(), sims.end(), 0.0) / double(sims.size());
    }
    double best_mean = -1.0;
    for (size_t i : leaders) best_mean = std::max(best_mean, mean_sim[i]);
    std::vector<size_t> finalists;
    for (size_t i : leaders)
        if (mean_sim[i] == best_mean) finalists.push_back(i);

    size_t pick = finalists.front();
    for (size_t i : finalists)
        if (priority_of(candidates[i].backend_id) < priority_of(candidates[pick].backend_id))
            pick = i;

    const bool same_text = std::all_of(finalists.begin(), finalists.end(), [&](size_t i) {
        return candidates[i].text == candidates[finalists.front()].text;
    });
    result.selected = candidates[pick];
    // Priority only picks a representative among equal texts; it decides the
    // outcome only when the finalists genuinely disagree.
    result.method = same_text ? VoteMethod::similarity_tiebreak : VoteMethod::priority_tiebreak;
    return result;
}

}  // namespace inkscore
