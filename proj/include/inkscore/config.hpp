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
#include <string>
#include <vector>

#include "inkscore/backends.hpp"
#include "inkscore/preprocess.hpp"
#include "inkscore/stress.hpp"

namespace inkscore {

/// Fully-resolved run configuration: defaults, then config file, then CLI
/// flags, in that order.
struct PipelineConfig {
    std::filesystem::path input_dir;
    std::filesystem::path out_dir;
    int dpi = 300;
    StressWeights weights;
    double threshold = 0.30;  // low/high stress split
    PreprocessConfig preprocess;
    std::vector<BackendDescriptor> backends;
    double anomaly_cutoff = 3.5;
    bool keep_intermediates = false;
    std::filesystem::path mock_corpus;  // fixture dir for "mock" endpoints
    std::filesystem::path lexicon;      // defaults to <mock_corpus>/lexicon.json
    OcrParams ocr_params;
    int jobs = 0;  // 0 = hardware concurrency
    int max_inflight = 4;
};

/// Applies a JSON config file onto `cfg`. Recognized keys: dpi, weights
/// {w_neg,w_entropy,w_posdef}, threshold, preprocess {contrast_stretch,
/// median_kernel, dilation_kernel, dilation_iterations}, backends [{id, kind,
/// endpoint, priority, timeout_ms}], anomaly_cutoff. Unknown keys are a
/// ConfigError.
void apply_config_file(const std::filesystem::path& path, PipelineConfig& cfg);

/// If no backends were configured but a mock corpus was given, injects one
/// mock OCR backend and the mock sentiment backend. Returns warnings.
std::vector<std::string> apply_backend_defaults(PipelineConfig& cfg);

/// Structural validation (>=1 OCR backend, exactly 1 sentiment backend,
/// unique ids, unique priorities per kind, sane numeric ranges). Throws
/// ConfigError.
void validate_config(const PipelineConfig& cfg);

}  // namespace inkscore
