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

#include "inkscore/report.hpp"

#include "inkscore/json_writer.hpp"
#include "inkscore/util.hpp"

namespace fs = std::filesystem;

namespace inkscore {
namespace {

void sentiment_object(JsonWriter& w, const SentimentScores& s) {
    w.begin_object();
    w.key("negative").value(s.negative);
    w.key("neutral").value(s.neutral);
    w.key("positive").value(s.positive);
    w.end_object();
}

const char* cluster_name(ClusterLabel c) {
    return c == ClusterLabel::low_cluster ? "low" : "high";
}

const char* kind_name(BackendKind k) { return k == BackendKind::ocr ? "ocr" : "sentiment"; }

}  // namespace

std::string page_record_json(const PageStressRecord& record) {
    JsonWriter w;
    w.begin_object();
    w.key("student").value(record.student);
    w.key("sentiment");
    sentiment_object(w, record.sentiment);
    w.key("entropy").value(record.entropy);
    w.key("stress_index").value(record.stress_index);
    w.end_object();
    return w.str();
}

fs::path emit_page_json(const PageStressRecord& record, const fs::path& out_dir) {
    const fs::path path = out_dir / (record.student + ".json");
    write_file_bytes(path.string(), page_record_json(record));
    return path;
}

std::string progression_csv(const StudentSeries& series) {
    std::string out = "page_index,stress_index,negative,neutral,positive\n";
    for (size_t i = 0; i < series.records.size(); ++i) {
        const PageStressRecord& r = series.records[i];
        out += std::to_string(series.page_indices[i]);
        out += ',';
        out += double_fixed10(r.stress_index);
        out += ',';
        out += double_fixed10(r.sentiment.negative);
        out += ',';
        out += double_fixed10(r.sentiment.neutral);
        out += ',';
        out += double_fixed10(r.sentiment.positive);
        out += '\n';
    }
    return out;
}

std::string neg_vs_stress_csv(const StudentSeries& series) {
    std::string out = "negative,stress_index\n";
    for (const PageStressRecord& r : series.records) {
        out += double_fixed10(r.sentiment.negative);
        out += ',';
        out += double_fixed10(r.stress_index);
        out += '\n';
    }
    return out;
}

std::string student_summary_json(const StudentSeries& series, double threshold) {
    JsonWriter w;
    w.begin_object();
    w.key("student_id").value(series.student_id);
    w.key("pages").value(series.records.size());
    w.key("mean_stress").value(series.mean_stress);
    w.key("mean_sentiment");
    sentiment_object(w, series.mean_sentiment);
    w.key("stress_classes").begin_array();
    for (const PageStressRecord& r : series.records)
        w.value(stress_class_name(classify_stress(r.stress_index, threshold)));
    w.end_array();
    w.key("anomalies").begin_array();
    for (const auto& [page, score] : series.anomalies) {
        w.begin_object();
        w.key("page_index").value(page);
        w.key("score").value(score);
        w.end_object();
    }
    w.end_array();
    if (!series.clusters.empty()) {
        w.key("clusters").begin_array();
        for (ClusterLabel c : series.clusters) w.value(cluster_name(c));
        w.end_array();
    }
    if (series.neg_stress_r) w.key("neg_stress_r").value(*series.neg_stress_r);
    w.end_object();
    return w.str();
}

std::vector<fs::path> emit_plot_series(const StudentSeries& series, const fs::path& out_dir,
                                       double threshold) {
    std::vector<fs::path> written;
    const fs::path prog = out_dir / (series.student_id + "_progression.csv");
    write_file_bytes(prog.string(), progression_csv(series));
    written.push_back(prog);
    const fs::path scatter = out_dir / (series.student_id + "_neg_vs_stress.csv");
    write_file_bytes(scatter.string(), neg_vs_stress_csv(series));
    written.push_back(scatter);
    const fs::path summary = out_dir / (series.student_id + "_summary.json");
    write_file_bytes(summary.string(), student_summary_json(series, threshold));
    written.push_back(summary);
    return written;
}

std::string run_summary_json(const RunSummary& summary) {
    JsonWriter w;
    w.begin_object();
    w.key("pages_total").value(summary.pages_total);
    w.key("students").begin_array();
    for (const StudentSeries& s : summary.students) w.value(s.student_id);
    w.end_array();
    w.key("warnings").begin_array();
    for (const std::string& msg : summary.warnings) w.value(msg);
    w.end_array();
    w.key("errors").begin_array();
    for (const std::string& msg : summary.errors) w.value(msg);
    w.end_array();
    w.key("throughput_images_per_second").value(summary.images_per_second);
    if (summary.accuracy) {
        w.key("accuracy").begin_object();
        w.key("pages_evaluated").value(summary.accuracy_pages);
        w.key("char_accuracy").value(summary.accuracy->char_accuracy);
        w.key("word_accuracy").value(summary.accuracy->word_accuracy);
        w.end_object();
    }

    const PipelineConfig& cfg = summary.config;
    w.key("config").begin_object();
    w.key("input_dir").value(cfg.input_dir.string());
    w.key("out_dir").value(cfg.out_dir.string());
    w.key("dpi").value(cfg.dpi);
    w.key("threshold").value(cfg.threshold);
    w.key("anomaly_cutoff").value(cfg.anomaly_cutoff);
    w.key("keep_intermediates").value(cfg.keep_intermediates);
    w.key("jobs").value(cfg.jobs);
    w.key("max_inflight").value(cfg.max_inflight);
    w.key("weights").begin_object();
    w.key("w_neg").value(cfg.weights.w_neg);
    w.key("w_entropy").value(cfg.weights.w_entropy);
    w.key("w_posdef").value(cfg.weights.w_posdef);
    w.end_object();
    w.key("preprocess").begin_object();
    w.key("contrast_stretch").value(cfg.preprocess.contrast_stretch);
    w.key("median_kernel").value(cfg.preprocess.median_kernel);
    w.key("dilation_kernel").value(cfg.preprocess.dilation_kernel);
    w.key("dilation_iterations").value(cfg.preprocess.dilation_iterations);
    w.end_object();
    w.key("ocr_params").begin_object();
    w.key("beam_width").value(cfg.ocr_params.beam_width);
    w.key("max_tokens").value(cfg.ocr_params.max_tokens);
    w.end_object();
    if (!cfg.mock_corpus.empty()) w.key("mock_corpus").value(cfg.mock_corpus.string());
    if (!cfg.lexicon.empty()) w.key("lexicon").value(cfg.lexicon.string());
    w.key("backends").begin_array();
    for (const BackendDescriptor& b : cfg.backends) {
        w.begin_object();
        w.key("id").value(b.id);
        w.key("kind").value(kind_name(b.kind));
        w.key("endpoint").value(b.endpoint);
        w.key("priority").value(b.priority);
        w.key("timeout_ms").value(b.timeout_ms);
        w.end_object();
    }
    w.end_array();
    w.end_object();  // config

    w.end_object();
    return w.str();
}

fs::path emit_run_summary(const RunSummary& summary, const fs::path& out_dir) {
    const fs::path path = out_dir / "run_summary.json";
    write_file_bytes(path.string(), run_summary_json(summary));
    return path;
}

}  // namespace inkscore
