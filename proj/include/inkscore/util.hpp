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
#include <string_view>
#include <vector>

namespace inkscore {

std::string base64_encode(const uint8_t* data, size_t len);
std::string base64_encode(const std::vector<uint8_t>& data);

// Decodes UTF-8 into Unicode scalar values. Malformed bytes are taken as
// single Latin-1 scalars rather than rejected; OCR output is never clean.
std::vector<char32_t> utf8_to_scalars(std::string_view s);

std::string ascii_lower(std::string_view s);

// Maximal runs of ASCII alphanumerics, lowercased. Used for lexicon matching.
std::vector<std::string> tokenize_words(std::string_view text);

// Whitespace-separated tokens, verbatim. Used for word-level edit distance.
std::vector<std::string> split_whitespace(std::string_view text);

// Shortest decimal form that parses back to the identical double ("1ft" JSON
// number formatting). Never called with NaN or infinities.
std::string double_shortest(double v);

// Fixed 10 decimal places with trailing zeros (and a bare trailing dot)
// trimmed; plot-data CSV formatting.
std::string double_fixed10(double v);

// floor(x + 0.5) for non-negative x.
int64_t round_half_up(double x);

std::string read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, std::string_view bytes);

}  // namespace inkscore
