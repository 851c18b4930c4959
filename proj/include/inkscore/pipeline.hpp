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

#include "inkscore/report.hpp"

namespace inkscore {

struct RunResult {
    RunSummary summary;
    int exit_code = 0;  // 0 clean; 1 when any per-document/page error occurred
};

/// Runs the whole batch: discover -> rasterize -> preprocess -> OCR across all
/// backends -> vote -> sentiment -> per-page record -> emit; then per-student
/// aggregation, plot data, and the run summary. Documents are processed in
/// parallel; outputs are ordered by (student_id, page_index), never by
/// completion time, so runs over mock backends are byte-reproducible.
/// Per-document failures are isolated into summary.errors. Fatal configuration
/// problems throw ConfigError (the CLI maps them to exit code 2).
RunResult run_pipeline(const PipelineConfig& config);

}  // namespace inkscore
