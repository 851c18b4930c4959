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

#include "inkscore/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "inkscore/backends.hpp"
#include "inkscore/ensemble.hpp"
#include "inkscore/errors.hpp"
#include "inkscore/image_io.hpp"
#include "inkscore/ingest.hpp"
#include "inkscore/preprocess.hpp"
#include "inkscore/util.hpp"

namespace fs = std::filesystem;

namespace inkscore {
namespace {

struct DocOutcome {
    std::vector<PageStressRecord> records;  // page order
    std::vector<std::string> warnings;
    std::vector<std::string> errors;
    size_t gt_pages = 0;
    double char_acc_sum = 0.0;
    double word_acc_sum = 0.0;
};

struct BackendSet {
    std::vector<std::unique_ptr<OcrBackend>> ocr;
    std::unique_ptr<SentimentBackend> sentiment;
    std::vector<std::pair<std::string, int>> ocr_priorities;
    bool any_http_ocr = false;
};

BackendSet build_backends(const PipelineConfig& cfg, std::vector<std::string>& warnings) {
    BackendSet set;
    Lexicon lexicon;
    bool lexicon_loaded = false;
    for (const BackendDescriptor& desc : cfg.backends) {
        if (desc.kind == BackendKind::ocr) {
            set.ocr_priorities.emplace_back(desc.id, desc.priority);
            if (desc.endpoint == "mock") {
                set.ocr.push_back(make_mock_ocr(desc, cfg.mock_corpus));
            } else {
                set.ocr.push_back(make_http_ocr(desc, cfg.max_inflight));
                set.any_http_ocr = true;
            }
        } else {
            if (desc.endpoint == "mock") {
                if (!lexicon_loaded) {
                    if (!cfg.lexicon.empty()) {
                        lexicon = load_lexicon(cfg.lexicon);
                    } else {
                        warnings.push_back(
                            "mock sentiment backend has no lexicon file; all pages will "
                            "score near-neutral");
                    }
                    lexicon_loaded = true;
                }
                set.sentiment = make_mock_sentiment(desc, lexicon);
            } else {
                set.sentiment = make_http_sentiment(desc, cfg.max_inflight);
            }
        }
    }
    return set;
}

void process_document(const PipelineConfig& cfg, const DocumentSource& src,
                      const BackendSet& backends, DocOutcome& out) {
    std::vector<PageImage> pages;
    try {
        pages = rasterize_document(src, cfg.dpi);
    } catch (const std::exception& e) {
        out.errors.push_back(std::string("document failed: ") + e.what());
        return;
    }

    const bool need_png = backends.any_http_ocr || cfg.keep_intermediates;
    for (const PageImage& page : pages) {
        const std::string label = page_label(page.student_id, page.page_index);
        try {
            const BinaryImage mask = preprocess_page(page, cfg.preprocess);

            OcrPageInput input;
            input.label = label;
            input.dpi = page.dpi;
            input.ink_pixels = mask.ink_count();
            if (need_png) input.png = encode_png(mask);

            if (cfg.keep_intermediates) {
                write_png_file((cfg.out_dir / (label + ".png")).string(),
                               encode_png(page.width, page.height, page.channels,
                                          page.pixels.data()));
                write_png_file((cfg.out_dir / (label + "_bin.png")).string(), input.png);
            }

            std::vector<OcrCandidate> candidates;
            for (const auto& backend : backends.ocr) {
                try {
                    candidates.push_back(
                        ocr_recognize(*backend, input, cfg.ocr_params, &out.warnings));
                } catch (const BackendUnavailable& e) {
                    out.warnings.push_back(label + ": " + e.what());
                } catch (const BackendProtocolError& e) {
                    out.warnings.push_back(label + ": " + e.what());
                }
            }
            if (candidates.empty()) {
                out.errors.push_back(label + ": every OCR backend failed");
                continue;
            }
            const VotingResult vres = vote(std::move(candidates), backends.ocr_priorities);
            const std::string& text = vres.selected.text;
            if (cfg.keep_intermediates)
                write_file_bytes((cfg.out_dir / (label + ".txt")).string(), text);

            const SentimentScores scores = sentiment_classify(*backends.sentiment, text);
            bool clamped = false;
            PageStressRecord record;
            record.student = label;
            record.sentiment = scores;
            record.entropy = shannon_entropy(scores);
            record.stress_index = stress_index(scores, cfg.weights, &clamped);
            if (clamped)
                out.warnings.push_back(label + ": raw stress index fell outside [0, 1]; clamped");

            emit_page_json(record, cfg.out_dir);

            const fs::path gt_path = src.path.parent_path() / (label + ".gt.txt");
            std::error_code ec;
            if (fs::is_regular_file(gt_path, ec)) {
                const std::string reference = read_file_bytes(gt_path.string());
                out.gt_pages += 1;
                out.char_acc_sum += char_accuracy(reference, text);
                out.word_acc_sum += word_accuracy(reference, text);
            }

            out.records.push_back(std::move(record));
        } catch (const std::exception& e) {
            out.errors.push_back(label + ": " + std::string(e.what()));
        }
    }
}

}  // namespace

RunResult run_pipeline(const PipelineConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();

    PipelineConfig cfg = config;
    RunResult result;
    RunSummary& summary = result.summary;

    for (std::string& w : apply_backend_defaults(cfg)) summary.warnings.push_back(std::move(w));
    validate_config(cfg);
    summary.config = cfg;

    DiscoveryResult discovery = discover_inputs(cfg.input_dir);
    for (auto& w : discovery.warnings) summary.warnings.push_back(std::move(w));
    for (auto& e : discovery.errors) summary.errors.push_back(std::move(e));
    if (discovery.sources.empty())
        summary.warnings.push_back("no input documents found in " + cfg.input_dir.string());

    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + cfg.out_dir.string());

    BackendSet backends = build_backends(cfg, summary.warnings);

    // Documents run in parallel; everything is merged in source order below.
    const size_t n_docs = discovery.sources.size();
    std::vector<DocOutcome> outcomes(n_docs);
    if (n_docs > 0) {
        size_t jobs = cfg.jobs > 0 ? size_t(cfg.jobs) : std::thread::hardware_concurrency();
        jobs = std::max<size_t>(1, std::min(jobs, n_docs));
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= n_docs) break;
                process_document(cfg, discovery.sources[i], backends, outcomes[i]);
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (std::thread& t : pool) t.join();
        }
    }

    size_t gt_pages = 0;
    double char_sum = 0.0, word_sum = 0.0;
    for (size_t i = 0; i < n_docs; ++i) {
        DocOutcome& doc = outcomes[i];
        for (auto& w : doc.warnings) summary.warnings.push_back(std::move(w));
        for (auto& e : doc.errors) summary.errors.push_back(std::move(e));
        gt_pages += doc.gt_pages;
        char_sum += doc.char_acc_sum;
        word_sum += doc.word_acc_sum;
        if (doc.records.empty()) continue;
        try {
            StudentSeries series = aggregate_student(doc.records, cfg.anomaly_cutoff);
            emit_plot_series(series, cfg.out_dir, cfg.threshold);
            summary.pages_total += series.records.size();
            summary.students.push_back(std::move(series));
        } catch (const std::exception& e) {
            summary.errors.push_back(discovery.sources[i].student_id + ": " +
                                     std::string(e.what()));
        }
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    summary.images_per_second = throughput(int64_t(summary.pages_total), std::max(wall, 1e-9));
    if (gt_pages > 0) {
        AccuracyReport acc;
        acc.char_accuracy = char_sum / double(gt_pages);
        acc.word_accuracy = word_sum / double(gt_pages);
        acc.images_per_second = summary.images_per_second;
        summary.accuracy = acc;
        summary.accuracy_pages = gt_pages;
    }

    try {
        emit_run_summary(summary, cfg.out_dir);
    } catch (const std::exception& e) {
        summary.errors.push_back(std::string("run summary: ") + e.what());
    }

    result.exit_code = summary.errors.empty() ? 0 : 1;
    return result;
}

}  // namespace inkscore
