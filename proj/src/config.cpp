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

#include "inkscore/config.hpp"

#include <fstream>
#include <json.hpp>
#include <set>

#include "inkscore/errors.hpp"

namespace inkscore {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key))
            throw ConfigError("unknown config key '" + key + "' in " + where);
}

double expect_number(const json& v, const std::string& what) {
    if (!v.is_number()) throw ConfigError(what + " must be a number");
    return v.get<double>();
}

int expect_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw ConfigError(what + " must be an integer");
    return v.get<int>();
}

BackendDescriptor parse_backend(const json& b, size_t index) {
    const std::string where = "backends[" + std::to_string(index) + "]";
    if (!b.is_object()) throw ConfigError(where + " must be an object");
    reject_unknown_keys(b, {"id", "kind", "endpoint", "priority", "timeout_ms"}, where);
    BackendDescriptor d;
    if (!b.contains("id") || !b["id"].is_string() || b["id"].get<std::string>().empty())
        throw ConfigError(where + " needs a non-empty string 'id'");
    d.id = b["id"].get<std::string>();
    if (!b.contains("kind") || !b["kind"].is_string())
        throw ConfigError(where + " needs 'kind' of \"ocr\" or \"sentiment\"");
    const std::string kind = b["kind"].get<std::string>();
    if (kind == "ocr")
        d.kind = BackendKind::ocr;
    else if (kind == "sentiment")
        d.kind = BackendKind::sentiment;
    else
        throw ConfigError(where + ": unknown kind '" + kind + "'");
    if (!b.contains("endpoint") || !b["endpoint"].is_string())
        throw ConfigError(where + " needs 'endpoint' (URL or \"mock\")");
    d.endpoint = b["endpoint"].get<std::string>();
    if (b.contains("priority")) d.priority = expect_int(b["priority"], where + ".priority");
    else d.priority = int(index);
    if (b.contains("timeout_ms")) d.timeout_ms = expect_int(b["timeout_ms"], where + ".timeout_ms");
    return d;
}

}  // namespace

void apply_config_file(const std::filesystem::path& path, PipelineConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ConfigError("malformed config JSON (" + path.string() + "): " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
    reject_unknown_keys(
        doc, {"dpi", "weights", "threshold", "preprocess", "backends", "anomaly_cutoff"},
        "config file");

    if (doc.contains("dpi")) cfg.dpi = expect_int(doc["dpi"], "dpi");
    if (doc.contains("threshold")) cfg.threshold = expect_number(doc["threshold"], "threshold");
    if (doc.contains("anomaly_cutoff"))
        cfg.anomaly_cutoff = expect_number(doc["anomaly_cutoff"], "anomaly_cutoff");

    if (doc.contains("weights")) {
        const json& w = doc["weights"];
        if (!w.is_object()) throw ConfigError("weights must be an object");
        reject_unknown_keys(w, {"w_neg", "w_entropy", "w_posdef"}, "weights");
        if (w.contains("w_neg")) cfg.weights.w_neg = expect_number(w["w_neg"], "w_neg");
        if (w.contains("w_entropy"))
            cfg.weights.w_entropy = expect_number(w["w_entropy"], "w_entropy");
        if (w.contains("w_posdef"))
            cfg.weights.w_posdef = expect_number(w["w_posdef"], "w_posdef");
    }

    if (doc.contains("preprocess")) {
        const json& p = doc["preprocess"];
        if (!p.is_object()) throw ConfigError("preprocess must be an object");
        reject_unknown_keys(
            p, {"contrast_stretch", "median_kernel", "dilation_kernel", "dilation_iterations"},
            "preprocess");
        if (p.contains("contrast_stretch")) {
            if (!p["contrast_stretch"].is_boolean())
                throw ConfigError("contrast_stretch must be a boolean");
            cfg.preprocess.contrast_stretch = p["contrast_stretch"].get<bool>();
        }
        if (p.contains("median_kernel"))
            cfg.preprocess.median_kernel = expect_int(p["median_kernel"], "median_kernel");
        if (p.contains("dilation_kernel"))
            cfg.preprocess.dilation_kernel = expect_int(p["dilation_kernel"], "dilation_kernel");
        if (p.contains("dilation_iterations"))
            cfg.preprocess.dilation_iterations =
                expect_int(p["dilation_iterations"], "dilation_iterations");
    }

    if (doc.contains("backends")) {
        if (!doc["backends"].is_array()) throw ConfigError("backends must be an array");
        cfg.backends.clear();
        size_t i = 0;
        for (const json& b : doc["backends"]) cfg.backends.push_back(parse_backend(b, i++));
    }
}

std::vector<std::string> apply_backend_defaults(PipelineConfig& cfg) {
    std::vector<std::string> warnings;
    if (cfg.backends.empty() && !cfg.mock_corpus.empty()) {
        cfg.backends.push_back(BackendDescriptor{"mock-ocr", "mock", BackendKind::ocr, 0, 30000});
        cfg.backends.push_back(
            BackendDescriptor{"mock-sentiment", "mock", BackendKind::sentiment, 0, 30000});
        warnings.push_back("no backends configured; using mock OCR and mock sentiment");
    }
    if (cfg.lexicon.empty() && !cfg.mock_corpus.empty()) {
        const auto candidate = cfg.mock_corpus / "lexicon.json";
        std::error_code ec;
        if (std::filesystem::is_regular_file(candidate, ec)) cfg.lexicon = candidate;
    }
    return warnings;
}

void validate_config(const PipelineConfig& cfg) {
    if (cfg.input_dir.empty()) throw ConfigError("input directory is required");
    if (cfg.out_dir.empty()) throw ConfigError("--out directory is required");
    if (cfg.dpi <= 0) throw ConfigError("dpi must be positive");
    if (!cfg.weights.valid()) throw ConfigError("stress weights must be non-negative");
    if (cfg.threshold < 0.0 || cfg.threshold > 1.0)
        throw ConfigError("threshold must lie in [0, 1]");
    if (!cfg.preprocess.valid())
        throw ConfigError("preprocess kernels must be odd (1..99) and iterations >= 0");
    if (cfg.anomaly_cutoff <= 0.0) throw ConfigError("anomaly_cutoff must be positive");
    if (cfg.max_inflight < 1) throw ConfigError("max in-flight requests must be >= 1");
    if (cfg.jobs < 0) throw ConfigError("jobs must be >= 0");
    if (cfg.ocr_params.beam_width < 1 || cfg.ocr_params.max_tokens < 1)
        throw ConfigError("OCR params must be positive");

    size_t n_ocr = 0, n_sent = 0;
    std::set<std::string> ids;
    std::set<std::pair<int, int>> prios;  // (kind, priority)
    for (const BackendDescriptor& b : cfg.backends) {
        if (b.id.empty()) throw ConfigError("backend with empty id");
        if (!ids.insert(b.id).second) throw ConfigError("duplicate backend id '" + b.id + "'");
        if (!prios.insert({int(b.kind), b.priority}).second)
            throw ConfigError("duplicate priority " + std::to_string(b.priority) +
                              " within backend kind (backend '" + b.id + "')");
        if (b.priority < 0) throw ConfigError("backend '" + b.id + "': priority must be >= 0");
        if (b.timeout_ms <= 0) throw ConfigError("backend '" + b.id + "': timeout_ms must be > 0");
        if (b.endpoint.empty()) throw ConfigError("backend '" + b.id + "': endpoint missing");
        if (b.endpoint == "mock") {
            if (b.kind == BackendKind::ocr && cfg.mock_corpus.empty())
                throw ConfigError("backend '" + b.id +
                                  "' is a mock OCR backend but --mock-corpus is not set");
        } else if (b.endpoint.find("://") == std::string::npos) {
            throw ConfigError("backend '" + b.id + "': endpoint must be a URL or \"mock\"");
        }
        (b.kind == BackendKind::ocr ? n_ocr : n_sent)++;
    }
    if (n_ocr < 1) throw ConfigError("at least one OCR backend is required");
    if (n_sent != 1) throw ConfigError("exactly one sentiment backend is required (got " +
                                       std::to_string(n_sent) + ")");
}

}  // namespace inkscore
