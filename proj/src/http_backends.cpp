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

#include <httplib.h>

#include <json.hpp>
#include <memory>
#include <mutex>
#include <semaphore>

#include "inkscore/backends.hpp"
#include "inkscore/errors.hpp"
#include "inkscore/util.hpp"

namespace inkscore {
namespace {

using nlohmann::json;

// scheme://host[:port] and an optional path prefix.
struct EndpointParts {
    std::string origin;
    std::string base_path;
};

EndpointParts split_endpoint(const std::string& endpoint, const std::string& backend_id) {
    const size_t scheme = endpoint.find("://");
    if (scheme == std::string::npos)
        throw ConfigError("backend '" + backend_id + "': endpoint must be a URL or \"mock\": " +
                          endpoint);
    const size_t path = endpoint.find('/', scheme + 3);
    if (path == std::string::npos) return {endpoint, ""};
    std::string base = endpoint.substr(path);
    while (!base.empty() && base.back() == '/') base.pop_back();
    return {endpoint.substr(0, path), base};
}

// Bounded-concurrency HTTP POST shared by both backend kinds. A fresh client
// (and connection) per request keeps concurrent calls independent.
class HttpChannel {
public:
    HttpChannel(const BackendDescriptor& desc, int max_inflight)
        : parts_(split_endpoint(desc.endpoint, desc.id)),
          id_(desc.id),
          timeout_(std::chrono::milliseconds(std::max(1, desc.timeout_ms))),
          slots_(std::max(1, max_inflight)) {}

    json post(const std::string& route, const json& body) {
        const std::string payload = body.dump();
        slots_.acquire();
        httplib::Result res = [&] {
            httplib::Client client(parts_.origin);
            client.set_connection_timeout(timeout_);
            client.set_read_timeout(timeout_);
            client.set_write_timeout(timeout_);
            return client.Post((parts_.base_path + route).c_str(), payload,
                               "application/json");
        }();
        slots_.release();

        if (!res)
            throw BackendUnavailable(id_, "no response from " + parts_.origin + route +
                                              " (" + httplib::to_string(res.error()) + ")");
        if (res->status != 200)
            throw BackendUnavailable(id_, "HTTP " + std::to_string(res->status) + " from " +
                                              route);
        try {
            return json::parse(res->body);
        } catch (const std::exception& e) {
            throw BackendUnavailable(id_, std::string("malformed JSON response: ") + e.what());
        }
    }

private:
    EndpointParts parts_;
    std::string id_;
    std::chrono::milliseconds timeout_;
    std::counting_semaphore<4096> slots_;
};

class HttpOcrBackend final : public OcrBackend {
public:
    HttpOcrBackend(BackendDescriptor desc, int max_inflight)
        : desc_(std::move(desc)), channel_(desc_, max_inflight) {}

    const BackendDescriptor& descriptor() const override { return desc_; }

    OcrCandidate recognize(const OcrPageInput& page, const OcrParams& params) override {
        const json body = {
            {"image", base64_encode(page.png)},
            {"dpi", page.dpi},
            {"params", {{"beam_width", params.beam_width}, {"max_tokens", params.max_tokens}}},
        };
        const json res = channel_.post("/ocr", body);
        if (!res.is_object() || !res.contains("text") || !res["text"].is_string() ||
            !res.contains("confidence") || !res["confidence"].is_number())
            throw BackendUnavailable(desc_.id, "response missing text/confidence");
        OcrCandidate cand;
        cand.backend_id = desc_.id;
        cand.text = res["text"].get<std::string>();
        cand.confidence = res["confidence"].get<double>();
        return cand;
    }

private:
    BackendDescriptor desc_;
    HttpChannel channel_;
};

class HttpSentimentBackend final : public SentimentBackend {
public:
    HttpSentimentBackend(BackendDescriptor desc, int max_inflight)
        : desc_(std::move(desc)), channel_(desc_, max_inflight) {}

    const BackendDescriptor& descriptor() const override { return desc_; }

    SentimentScores classify_chunk(const std::string& text) override {
        const json res = channel_.post("/sentiment", json{{"text", text}});
        for (const char* key : {"negative", "neutral", "positive"})
            if (!res.is_object() || !res.contains(key) || !res[key].is_number())
                throw BackendUnavailable(desc_.id, "response missing probability triple");
        SentimentScores s;
        s.negative = res["negative"].get<double>();
        s.neutral = res["neutral"].get<double>();
        s.positive = res["positive"].get<double>();
        return s;
    }

private:
    BackendDescriptor desc_;
    HttpChannel channel_;
};

}  // namespace

std::unique_ptr<OcrBackend> make_http_ocr(BackendDescriptor desc, int max_inflight) {
    return std::make_unique<HttpOcrBackend>(std::move(desc), max_inflight);
}

std::unique_ptr<SentimentBackend> make_http_sentiment(BackendDescriptor desc,
                                                      int max_inflight) {
    return std::make_unique<HttpSentimentBackend>(std::move(desc), max_inflight);
}

}  // namespace inkscore
