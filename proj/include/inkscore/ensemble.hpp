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

#include <cstdint>
#include <string>
#include <vector>

#include "inkscore/backends.hpp"

namespace inkscore {

/// Levenshtein distance (unit insert/delete/substitute) over Unicode scalars.
uint32_t edit_distance(const std::string& a, const std::string& b);

/// Token-sequence Levenshtein distance.
uint32_t edit_distance_tokens(const std::vector<std::string>& a,
                              const std::vector<std::string>& b);

/// 1 - edit_distance(a, b) / max(|a|, |b|); 1.0 when both strings are empty.
double similarity(const std::string& a, const std::string& b);

enum class VoteMethod { max_confidence, similarity_tiebreak, priority_tiebreak, sole_candidate };

struct VotingResult {
    OcrCandidate selected;
    std::vector<OcrCandidate> candidates;
    VoteMethod method = VoteMethod::sole_candidate;
};

const char* vote_method_name(VoteMethod m);

/// Picks one transcription. Selection order: unique max confidence (ties are
/// anything within 1e-9 of the max); then highest mean similarity to all other
/// candidates; then lowest backend priority. `priorities` maps backend_id to
/// its priority (missing ids rank last). Pure and order-independent; throws
/// std::invalid_argument on an empty candidate list.
VotingResult vote(std::vector<OcrCandidate> candidates,
                  const std::vector<std::pair<std::string, int>>& priorities);

}  // namespace inkscore
