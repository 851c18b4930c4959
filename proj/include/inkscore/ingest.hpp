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
#include <utility>
#include <vector>

#include "inkscore/image.hpp"

namespace inkscore {

enum class SourceKind { pdf, image };

/// One input document; student identity is the file stem.
struct DocumentSource {
    std::filesystem::path path;
    std::string student_id;
    SourceKind kind = SourceKind::pdf;
};

struct DiscoveryResult {
    std::vector<DocumentSource> sources;  // sorted by student_id
    std::vector<std::string> warnings;    // skipped unsupported files
    std::vector<std::string> errors;      // rejected documents (duplicate/invalid ids)
};

/// Scans a directory (non-recursive) for .pdf/.png/.jpg/.jpeg/.tif/.tiff
/// documents, case-insensitive. "*.gt.txt" ground-truth sidecars are
/// recognized and skipped silently; other extensions produce a warning.
/// Student ids containing "_page_" are rejected (they would break page-label
/// injectivity), as are duplicate stems.
/// Throws ConfigError when the directory is missing or unreadable.
DiscoveryResult discover_inputs(const std::filesystem::path& input_dir);

/// PDF sources yield one PageImage per page (page_index 1..n); image sources
/// yield exactly one with page_index 1. Pixel dimensions of PDF pages are
/// round-half-up(physical inches x dpi). Throws DocumentError on corrupt,
/// encrypted, or undecodable documents.
std::vector<PageImage> rasterize_document(const DocumentSource& src, int dpi);

/// "<student_id>_page_<page_index>". page_index must be >= 1.
std::string page_label(const std::string& student_id, int page_index);

/// Inverse of page_label; nullopt when the label does not match the pattern.
std::optional<std::pair<std::string, int>> parse_page_label(const std::string& label);

bool valid_student_id(const std::string& id);

}  // namespace inkscore
