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

#include "inkscore/backends.hpp"

#include <cmath>

#include "inkscore/errors.hpp"
#include "inkscore/util.hpp"

namespace inkscore {
namespace {

constexpr double kSumTolerance = 1e-6;

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

size_t scalar_count(std::string_view s) { return utf8_to_scalars(s).size(); }

// Splits off a prefix of at most max_chars Unicode scalars on a UTF-8 boundary.
size_t byte_prefix_for_scalars(std::string_view s, size_t max_chars) {
    size_t count = 0, i = 0;
    while (i < s.size() && count < max_chars) {
        const uint8_t b = uint8_t(s[i]);
        size_t adv = 1;
        if ((b & 0xE0) == 0xC0)
            adv = 2;
        else if ((b & 0xF0) == 0xE0)
            adv = 3;
        else if ((b & 0xF8) == 0xF0)
            adv = 4;
        if (i + adv > s.size()) adv = 1;
        i += adv;
        ++count;
    }
    return i;
}

}  // namespace

SentimentScores renormalize(const SentimentScores& raw, const std::string& backend_id) {
    const double s = raw.sum();
    if (!std::isfinite(s) || std::abs(s - 1.0) > kSumTolerance)
        throw BackendProtocolError(backend_id, "sentiment probabilities sum to " +
                                                   std::to_string(s) + ", expected 1");
    if (raw.negative < -kSumTolerance || raw.neutral < -kSumTolerance ||
        raw.positive < -kSumTolerance)
        throw BackendProtocolError(backend_id, "negative probability component");
    SentimentScores out;
    out.negative = clamp01(raw.negative / s);
    out.positive = clamp01(raw.positive / s);
    out.neutral = clamp01(1.0 - out.negative - out.positive);
    return out;
}

OcrCandidate ocr_recognize(OcrBackend& backend, const OcrPageInput& page,
                           const OcrParams& params, std::vector<std::string>* warnings) {
    OcrCandidate cand = backend.recognize(page, params);
    cand.backend_id = backend.descriptor().id;
    if (!std::isfinite(cand.confidence) || cand.confidence < 0.0 || cand.confidence > 1.0) {
        const double clamped =
            std::isfinite(cand.confidence) ? clamp01(cand.confidence) : 0.0;
        if (warnings)
            warnings->push_back("backend '" + cand.backend_id + "' reported confidence " +
                                std::to_string(cand.confidence) + " on " + page.label +
                                "; clamped to " + std::to_string(clamped));
        cand.confidence = clamped;
    }
    return cand;
}

std::vector<std::string> split_sentiment_chunks(const std::string& text, size_t max_chars) {
    // Sentence spans: each ends after [.!?] followed by whitespace (or EOS).
    std::vector<std::string_view> sentences;
    const std::string_view sv(text);
    size_t start = 0;
    for (size_t i = 0; i < sv.size(); ++i) {
        const char c = sv[i];
        if ((c == '.' || c == '!' || c == '?') &&
            (i + 1 >= sv.size() || std::isspace(uint8_t(sv[i + 1])))) {
            size_t end = i + 1;
            while (end < sv.size() && std::isspace(uint8_t(sv[end]))) ++end;
            sentences.push_back(sv.substr(start, end - start));
            start = end;
            i = end - 1;
        }
    }
    if (start < sv.size()) sentences.push_back(sv.substr(start));

    std::vector<std::string> chunks;
    std::string cur;
    size_t cur_chars = 0;
    auto flush = [&] {
        if (!cur.empty()) {
            chunks.push_back(std::move(cur));
            cur.clear();
            cur_chars = 0;
        }
    };
    for (std::string_view sentence : sentences) {
        size_t len = scalar_count(sentence);
        if (len > max_chars) {
            flush();
            while (len > max_chars) {  // hard split an oversized sentence
                const size_t bytes = byte_prefix_for_scalars(sentence, max_chars);
                chunks.emplace_back(sentence.substr(0, bytes));
                sentence.remove_prefix(bytes);
                len -= max_chars;
            }
            cur = std::string(sentence);
            cur_chars = len;
            continue;
        }
        if (cur_chars + len > max_chars) flush();
        cur += sentence;
        cur_chars += len;
    }
    flush();
    return chunks;
}

SentimentScores sentiment_classify(SentimentBackend& backend, const std::string& text) {
    if (text.empty()) return SentimentScores{0.0, 1.0, 0.0};
    const std::string& id = backend.descriptor().id;

    if (scalar_count(text) <= kSentimentChunkChars)
        return renormalize(backend.classify_chunk(text), id);

    const std::vector<std::string> chunks = split_sentiment_chunks(text);
    SentimentScores acc{0.0, 0.0, 0.0};
    for (const std::string& chunk : chunks) {
        const SentimentScores s = renormalize(backend.classify_chunk(chunk), id);
        acc.negative += s.negative;
        acc.neutral += s.neutral;
        acc.positive += s.positive;
    }
    const double n = double(chunks.size());
    return renormalize(SentimentScores{acc.negative / n, acc.neutral / n, acc.positive / n},
                       id);
}

}  // namespace inkscore
