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

#include "inkscore/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "inkscore/errors.hpp"
#include "inkscore/image_io.hpp"
#include "inkscore/pdf.hpp"
#include "inkscore/util.hpp"

namespace fs = std::filesystem;

namespace inkscore {
namespace {

std::optional<SourceKind> classify_extension(const fs::path& p) {
    const std::string ext = ascii_lower(p.extension().string());
    if (ext == ".pdf") return SourceKind::pdf;
    if (ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".tif" || ext == ".tiff")
        return SourceKind::image;
    return std::nullopt;
}

bool is_gt_sidecar(const fs::path& p) {
    const std::string name = ascii_lower(p.filename().string());
    return name.size() > 7 && name.ends_with(".gt.txt");
}

}  // namespace

bool valid_student_id(const std::string& id) {
    if (id.empty()) return false;
    if (id.find('/') != std::string::npos || id.find('\\') != std::string::npos) return false;
    if (id.find("_page_") != std::string::npos) return false;
    return true;
}

DiscoveryResult discover_inputs(const fs::path& input_dir) {
    std::error_code ec;
    if (!fs::is_directory(input_dir, ec))
        throw ConfigError("input directory missing or unreadable: " + input_dir.string());

    DiscoveryResult out;
    std::vector<DocumentSource> found;
    std::vector<fs::path> skipped;
    fs::directory_iterator it(input_dir, ec);
    if (ec) throw ConfigError("cannot read input directory: " + input_dir.string());
    for (const auto& entry : it) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (is_gt_sidecar(p)) continue;  // ground-truth transcript, not a document
        const auto kind = classify_extension(p);
        if (!kind) {
            skipped.push_back(p);
            continue;
        }
        found.push_back(DocumentSource{p, p.stem().string(), *kind});
    }

    std::sort(skipped.begin(), skipped.end());
    for (const auto& p : skipped)
        out.warnings.push_back("skipping unsupported file: " + p.filename().string());

    std::sort(found.begin(), found.end(), [](const DocumentSource& a, const DocumentSource& b) {
        return a.student_id != b.student_id ? a.student_id < b.student_id
                                            : a.path.native() < b.path.native();
    });
    for (size_t i = 0; i < found.size(); ++i) {
        if (!valid_student_id(found[i].student_id)) {
            out.errors.push_back("invalid student id '" + found[i].student_id +
                                 "' (empty, path separator, or contains \"_page_\"): " +
                                 found[i].path.filename().string());
            continue;
        }
        if (i > 0 && found[i].student_id == found[i - 1].student_id) {
            out.errors.push_back("duplicate student id '" + found[i].student_id +
                                 "': " + found[i].path.filename().string());
            continue;
        }
        out.sources.push_back(found[i]);
    }
    return out;
}

std::vector<PageImage> rasterize_document(const DocumentSource& src, int dpi) {
    if (dpi <= 0) throw DocumentError("dpi must be positive");
    std::vector<PageImage> pages;
    if (src.kind == SourceKind::pdf) {
        pdf::Document doc = pdf::Document::open(src.path.string());
        pages.reserve(size_t(doc.page_count()));
        for (int i = 0; i < doc.page_count(); ++i) {
            PageImage page = doc.render_page(i, dpi);
            page.student_id = src.student_id;
            page.page_index = i + 1;
            pages.push_back(std::move(page));
        }
    } else {
        DecodedImage img = decode_image_file(src.path.string());
        PageImage page;
        page.student_id = src.student_id;
        page.page_index = 1;
        page.dpi = dpi;
        page.width = img.width;
        page.height = img.height;
        page.channels = img.channels;
        page.pixels = std::move(img.pixels);
        pages.push_back(std::move(page));
    }
    return pages;
}

std::string page_label(const std::string& student_id, int page_index) {
    if (page_index < 1) throw std::invalid_argument("page_index must be >= 1");
    return student_id + "_page_" + std::to_string(page_index);
}

std::optional<std::pair<std::string, int>> parse_page_label(const std::string& label) {
    const size_t at = label.rfind("_page_");
    if (at == std::string::npos || at == 0) return std::nullopt;
    const std::string digits = label.substr(at + 6);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        return std::nullopt;
    int idx = 0;
    try {
        idx = std::stoi(digits);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (idx < 1) return std::nullopt;
    return std::make_pair(label.substr(0, at), idx);
}

}  // namespace inkscore
