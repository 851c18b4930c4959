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

#include <memory>
#include <string>
#include <vector>

#include "inkscore/image.hpp"

namespace inkscore::pdf {

/// Reader for the scanned-script PDF profile: classic cross-reference tables,
/// page trees with inherited attributes, and image XObjects compressed with
/// FlateDecode or DCTDecode (or stored raw). Encrypted files, cross-reference
/// streams, and object streams are rejected with DocumentError; vector/text
/// content is ignored during rendering. Pages render onto a white canvas whose
/// pixel size is round-half-up(MediaBox inches x dpi) per axis.
class Document {
public:
    static Document open(const std::string& path);
    static Document from_bytes(std::string bytes);

    int page_count() const;

    struct PageSizePts {
        double width = 0;
        double height = 0;
    };
    PageSizePts page_size(int page_index) const;  // 0-based

    /// Renders one page. The result has width/height/channels/pixels/dpi set;
    /// identity fields (student_id, page_index) are the caller's.
    PageImage render_page(int page_index, int dpi) const;

    struct Impl;  // opaque; defined in the reader

private:
    std::shared_ptr<const Impl> impl_;
};

/// One page of a synthetic scanned document, for fixtures and demo corpora.
/// Exactly one of `gray` (embedded as FlateDecode) or `jpeg` (embedded as
/// DCTDecode) must be set.
struct ScannedPage {
    double width_pts = 612;
    double height_pts = 792;
    const GrayImage* gray = nullptr;
    const std::vector<uint8_t>* jpeg = nullptr;
    int jpeg_width = 0;
    int jpeg_height = 0;
    int jpeg_channels = 1;
};

/// Serializes a one-image-per-page PDF (classic xref, deterministic bytes).
/// `mark_encrypted` emits an /Encrypt entry so tests can exercise the
/// encrypted-document error path.
std::string write_scanned_pdf(const std::vector<ScannedPage>& pages,
                              bool mark_encrypted = false);

}  // namespace inkscore::pdf
