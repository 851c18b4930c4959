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

#include <CLI11.hpp>
#include <cstdio>
#include <string>
#include <vector>

#include "inkscore/errors.hpp"
#include "inkscore/pipeline.hpp"

namespace {

using inkscore::BackendDescriptor;
using inkscore::BackendKind;

struct AnalyzeFlags {
    std::string input_dir;
    std::string out_dir;
    std::string config_file;
    std::string mock_corpus;
    std::string lexicon;
    std::string sentiment;
    std::vector<std::string> ocr;
    int dpi = 300;
    double threshold = 0.30;
    double anomaly_cutoff = 3.5;
    bool keep_intermediates = false;
    int jobs = 0;
    int max_inflight = 4;
};

BackendDescriptor parse_backend_flag(const std::string& spec, BackendKind kind, int priority) {
    const size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size())
        throw inkscore::ConfigError("backend flag must look like <id>=<url|mock>: " + spec);
    BackendDescriptor d;
    d.id = spec.substr(0, eq);
    d.endpoint = spec.substr(eq + 1);
    d.kind = kind;
    d.priority = priority;
    return d;
}

// Resolution order: defaults, then config file, then explicit CLI flags.
inkscore::PipelineConfig resolve_config(const CLI::App& cmd, const AnalyzeFlags& flags) {
    inkscore::PipelineConfig cfg;
    if (!flags.config_file.empty()) inkscore::apply_config_file(flags.config_file, cfg);

    cfg.input_dir = flags.input_dir;
    cfg.out_dir = flags.out_dir;
    if (cmd.count("--dpi")) cfg.dpi = flags.dpi;
    if (cmd.count("--threshold")) cfg.threshold = flags.threshold;
    if (cmd.count("--anomaly-cutoff")) cfg.anomaly_cutoff = flags.anomaly_cutoff;
    if (cmd.count("--keep-intermediates")) cfg.keep_intermediates = flags.keep_intermediates;
    if (cmd.count("--jobs")) cfg.jobs = flags.jobs;
    if (cmd.count("--max-inflight")) cfg.max_inflight = flags.max_inflight;
    if (!flags.mock_corpus.empty()) cfg.mock_corpus = flags.mock_corpus;
    if (!flags.lexicon.empty()) cfg.lexicon = flags.lexicon;

    if (!flags.ocr.empty() || !flags.sentiment.empty()) {
        std::vector<BackendDescriptor> kept;
        for (const BackendDescriptor& b : cfg.backends) {
            const bool replaced = (b.kind == BackendKind::ocr && !flags.ocr.empty()) ||
                                  (b.kind == BackendKind::sentiment && !flags.sentiment.empty());
            if (!replaced) kept.push_back(b);
        }
        cfg.backends = std::move(kept);
        int prio = 0;
        for (const std::string& spec : flags.ocr)
            cfg.backends.push_back(parse_backend_flag(spec, BackendKind::ocr, prio++));
        if (!flags.sentiment.empty())
            cfg.backends.push_back(
                parse_backend_flag(flags.sentiment, BackendKind::sentiment, 0));
    }
    return cfg;
}

int run_analyze(const CLI::App& cmd, const AnalyzeFlags& flags) {
    const inkscore::PipelineConfig cfg = resolve_config(cmd, flags);
    const inkscore::RunResult result = inkscore::run_pipeline(cfg);
    const inkscore::RunSummary& s = result.summary;

    for (const std::string& w : s.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    for (const std::string& e : s.errors) std::fprintf(stderr, "error: %s\n", e.c_str());
    std::printf("processed %zu page(s) from %zu student(s) -> %s\n", s.pages_total,
                s.students.size(), cfg.out_dir.string().c_str());
    std::printf("throughput: %.2f img/s; warnings: %zu; errors: %zu\n", s.images_per_second,
                s.warnings.size(), s.errors.size());
    if (s.accuracy)
        std::printf("accuracy over %zu ground-truth page(s): char %.4f, word %.4f\n",
                    s.accuracy_pages, s.accuracy->char_accuracy, s.accuracy->word_accuracy);
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Handwritten answer script stress analysis pipeline"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand(
        "analyze", "Score every document in a directory and emit per-page JSON reports");

    AnalyzeFlags flags;
    analyze
        ->add_option("input_dir", flags.input_dir,
                     "Directory of .pdf/.png/.jpg/.jpeg/.tif/.tiff scripts")
        ->required();
    analyze->add_option("--out", flags.out_dir, "Output directory for reports")->required();
    analyze->add_option("--dpi", flags.dpi, "Rasterization DPI for PDF pages (default 300)");
    analyze->add_option("--config", flags.config_file,
                        "JSON config file (explicit CLI flags override it)");
    analyze->add_flag("--keep-intermediates", flags.keep_intermediates,
                      "Persist page PNGs, binarized masks, and selected transcriptions");
    analyze->add_option("--threshold", flags.threshold,
                        "Stress classification threshold (default 0.30)");
    analyze->add_option("--ocr-backend", flags.ocr,
                        "OCR backend as <id>=<url|mock>; repeatable, order sets priority");
    analyze->add_option("--sentiment-backend", flags.sentiment,
                        "Sentiment backend as <id>=<url|mock>");
    analyze->add_option("--mock-corpus", flags.mock_corpus,
                        "Directory of <label>.txt fixtures for mock backends");
    analyze->add_option("--lexicon", flags.lexicon,
                        "Lexicon JSON for the mock sentiment backend "
                        "(default <mock-corpus>/lexicon.json)");
    analyze->add_option("--jobs", flags.jobs, "Parallel documents (default: hardware threads)");
    analyze->add_option("--max-inflight", flags.max_inflight,
                        "Max concurrent requests per HTTP backend (default 4)");
    analyze->add_option("--anomaly-cutoff", flags.anomaly_cutoff,
                        "Modified z-score cutoff for anomaly flags (default 3.5)");

    CLI11_PARSE(app, argc, argv);

    try {
        return run_analyze(*analyze, flags);
    } catch (const inkscore::ConfigError& e) {
        std::fprintf(stderr, "fatal: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fatal: unexpected error: %s\n", e.what());
        return 2;
    }
}
