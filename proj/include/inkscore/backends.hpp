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

#include <filesystem>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

namespace inkscore {

enum class BackendKind { ocr, sentiment };

/// Where and how to reach one inference backend. endpoint is an http(s) URL
/// or the literal "mock".
struct BackendDescriptor {
    std::string id;
    std::string endpoint;
    BackendKind kind = BackendKind::ocr;
    int priority = 0;  // lower wins tie-breaks; unique within a kind
    int timeout_ms = 30000;
};

/// Decoding parameters forwarded verbatim to OCR backends.
struct OcrParams {
    int beam_width = 4;
    int max_tokens = 256;
};

struct OcrCandidate {
    std::string backend_id;
    std::string text;
    double confidence = 0.0;  // [0, 1]
};

/// (negative, neutral, positive) probability triple; sums to 1 after
/// renormalize().
struct SentimentScores {
    double negative = 0.0;
    double neutral = 1.0;
    double positive = 0.0;

    double sum() const { return negative + neutral + positive; }
};

/// Divides by the sum when it is within 1e-6 of 1; otherwise throws
/// BackendProtocolError. Components must already be sane probabilities.
SentimentScores renormalize(const SentimentScores& raw, const std::string& backend_id);

/// One page's OCR payload, prepared once and shared by every backend.
struct OcrPageInput {
    std::string label;
    int dpi = 300;
    size_t ink_pixels = 0;
    std::vector<uint8_t> png;
};

class OcrBackend {
public:
    virtual ~OcrBackend() = default;
    virtual const BackendDescriptor& descriptor() const = 0;
    /// Raw transcription; id stamping and confidence clamping live in
    /// ocr_recognize(). Throws BackendUnavailable on transport/shape errors.
    virtual OcrCandidate recognize(const OcrPageInput& page, const OcrParams& params) = 0;
};

class SentimentBackend {
public:
    virtual ~SentimentBackend() = default;
    virtual const BackendDescriptor& descriptor() const = 0;
    /// Raw (un-renormalized) triple for one chunk of text.
    virtual SentimentScores classify_chunk(const std::string& text) = 0;
};

/// Contract wrapper over OcrBackend::recognize: stamps backend_id and clamps
/// out-of-range confidences (appending a warning when it does).
OcrCandidate ocr_recognize(OcrBackend& backend, const OcrPageInput& page,
                           const OcrParams& params,
                           std::vector<std::string>* warnings = nullptr);

constexpr size_t kSentimentChunkChars = 512;

/// Empty text returns exact neutral (0,1,0) without touching the backend.
/// Longer texts are split into <=512-character sentence chunks; each chunk's
/// triple is renormalized, the chunk mean is renormalized again.
SentimentScores sentiment_classify(SentimentBackend& backend, const std::string& text);

/// Greedy sentence packing used by sentiment_classify; exposed for tests.
/// Chunk sizes are measured in Unicode scalars; oversized single sentences are
/// hard-split.
std::vector<std::string> split_sentiment_chunks(const std::string& text,
                                                size_t max_chars = kSentimentChunkChars);

// --- deterministic mocks ----------------------------------------------------

/// Fixture-directory OCR double: returns "<label>.txt" contents with
/// confidence from "<label>.conf" (default 0.9); unknown labels give
/// ("", 0.0); blank pages (zero ink) give ("", 1.0). Never fails.
std::unique_ptr<OcrBackend> make_mock_ocr(BackendDescriptor desc,
                                          std::filesystem::path corpus_dir);

struct Lexicon {
    std::unordered_set<std::string> negative;
    std::unordered_set<std::string> positive;
};

/// Parses {"negative": [...], "positive": [...]}; throws ConfigError on
/// malformed files.
Lexicon load_lexicon(const std::filesystem::path& json_path);

/// Laplace-smoothed lexicon double: with n negative and p positive token hits,
/// returns ((n+1)/(n+p+3), 1-neg-pos, (p+1)/(n+p+3)).
std::unique_ptr<SentimentBackend> make_mock_sentiment(BackendDescriptor desc, Lexicon lexicon);

// --- HTTP clients -------------------------------------------------------------

/// POST <endpoint>/ocr with {"image": <base64 PNG>, "dpi": int, "params":
/// {"beam_width": int, "max_tokens": int}}; expects {"text", "confidence"}.
/// `max_inflight` bounds concurrent requests per backend instance.
std::unique_ptr<OcrBackend> make_http_ocr(BackendDescriptor desc, int max_inflight = 4);

/// POST <endpoint>/sentiment with {"text": string}; expects
/// {"negative", "neutral", "positive"}.
std::unique_ptr<SentimentBackend> make_http_sentiment(BackendDescriptor desc,
                                                      int max_inflight = 4);

}  // namespace inkscore
