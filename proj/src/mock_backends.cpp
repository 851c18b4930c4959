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

#include <fstream>
#include <json.hpp>

#include "inkscore/backends.hpp"
#include "inkscore/errors.hpp"
#include "inkscore/util.hpp"

namespace fs = std::filesystem;

namespace inkscore {
namespace {

class MockOcrBackend final : public OcrBackend {
public:
    MockOcrBackend(BackendDescriptor desc, fs::path corpus)
        : desc_(std::move(desc)), corpus_(std::move(corpus)) {}

    const BackendDescriptor& descriptor() const override { return desc_; }

    OcrCandidate recognize(const OcrPageInput& page, const OcrParams&) override {
        if (page.ink_pixels == 0) return OcrCandidate{desc_.id, "", 1.0};  // blank page

        const fs::path text_path = corpus_ / (page.label + ".txt");
        std::error_code ec;
        if (!fs::is_regular_file(text_path, ec)) return OcrCandidate{desc_.id, "", 0.0};

        OcrCandidate cand;
        cand.backend_id = desc_.id;
        cand.text = read_file_bytes(text_path.string());
        cand.confidence = 0.9;
        const fs::path conf_path = corpus_ / (page.label + ".conf");
        if (fs::is_regular_file(conf_path, ec)) {
            try {
                cand.confidence = std::stod(read_file_bytes(conf_path.string()));
            } catch (const std::exception&) {
                cand.confidence = 0.9;  // unreadable sidecar keeps the default
            }
        }
        return cand;
    }

private:
    BackendDescriptor desc_;
    fs::path corpus_;
};

class MockSentimentBackend final : public SentimentBackend {
public:
    MockSentimentBackend(BackendDescriptor desc, Lexicon lexicon)
        : desc_(std::move(desc)), lexicon_(std::move(lexicon)) {}

    const BackendDescriptor& descriptor() const override { return desc_; }

    SentimentScores classify_chunk(const std::string& text) override {
        size_t n = 0, p = 0;
        for (const std::string& tok : tokenize_words(text)) {
            if (lexicon_.negative.count(tok)) ++n;
            if (lexicon_.positive.count(tok)) ++p;
        }
        const double denom = double(n + p + 3);
        SentimentScores s;
        s.negative = double(n + 1) / denom;
        s.positive = double(p + 1) / denom;
        s.neutral = 1.0 - s.negative - s.positive;
        return s;
    }

private:
    BackendDescriptor desc_;
    Lexicon lexicon_;
};

}  // namespace

Lexicon load_lexicon(const fs::path& json_path) {
    std::ifstream in(json_path);
    if (!in) throw ConfigError("cannot open lexicon file: " + json_path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ConfigError("malformed lexicon JSON (" + json_path.string() + "): " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("lexicon must be a JSON object");
    Lexicon lex;
    auto load_list = [&](const char* key, std::unordered_set<std::string>& into) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_array()) throw ConfigError(std::string("lexicon '") + key +
                                                    "' must be an array of words");
        for (const auto& w : doc[key]) {
            if (!w.is_string()) throw ConfigError("lexicon entries must be strings");
            into.insert(ascii_lower(w.get<std::string>()));
        }
    };
    load_list("negative", lex.negative);
    load_list("positive", lex.positive);
    return lex;
}

std::unique_ptr<OcrBackend> make_mock_ocr(BackendDescriptor desc, fs::path corpus_dir) {
    return std::make_unique<MockOcrBackend>(std::move(desc), std::move(corpus_dir));
}

std::unique_ptr<SentimentBackend> make_mock_sentiment(BackendDescriptor desc, Lexicon lexicon) {
    return std::make_unique<MockSentimentBackend>(std::move(desc), std::move(lexicon));
}

}  // namespace inkscore
