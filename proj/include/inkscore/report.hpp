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
#include <optional>
#include <string>
#include <vector>

#include "inkscore/analytics.hpp"
#include "inkscore/config.hpp"

namespace inkscore {

/// Everything the run produced, echoed into run_summary.json.
struct RunSummary {
    std::vector<StudentSeries> students;
    size_t pages_total = 0;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;
    double images_per_second = 0.0;
    std::optional<AccuracyReport> accuracy;  // present when ground truth existed
    size_t accuracy_pages = 0;
    PipelineConfig config;
};

/// Per-page record with keys student, sentiment{negative,neutral,positive},
/// entropy, stress_index — in that order, shortest round-trip numbers.
std::string page_record_json(const PageStressRecord& record);

/// Writes "<label>.json" under out_dir; returns the path.
std::filesystem::path emit_page_json(const PageStressRecord& record,
                                     const std::filesystem::path& out_dir);

/// "page_index,stress_index,negative,neutral,positive" rows in page order;
/// numbers fixed to 10 decimal places with trailing zeros trimmed.
std::string progression_csv(const StudentSeries& series);

/// "negative,stress_index" scatter rows, page order.
std::string neg_vs_stress_csv(const StudentSeries& series);

/// Aggregates plus per-page low/high classification at `threshold`.
/// Undefined statistics are omitted keys, never null.
std::string student_summary_json(const StudentSeries& series, double threshold);

/// Writes "<student>_progression.csv", "<student>_neg_vs_stress.csv" and
/// "<student>_summary.json"; returns the paths written.
std::vector<std::filesystem::path> emit_plot_series(const StudentSeries& series,
                                                    const std::filesystem::path& out_dir,
                                                    double threshold);

std::string run_summary_json(const RunSummary& summary);

std::filesystem::path emit_run_summary(const RunSummary& summary,
                                       const std::filesystem::path& out_dir);

}  // namespace inkscore
