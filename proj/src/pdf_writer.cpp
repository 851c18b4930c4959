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

#include <cstdio>
#include <stdexcept>
#include <vector>

#include "inkscore/pdf.hpp"
#include "pdf_objects.hpp"

namespace inkscore::pdf {
namespace {

std::string fmt_pts(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Builder {
    std::string out = "%PDF-1.4\n";
    std::vector<size_t> offsets;  // 1-based object numbers

    int begin_obj() {
        offsets.push_back(out.size());
        const int num = int(offsets.size());
        out += std::to_string(num) + " 0 obj\n";
        return num;
    }
    void end_obj() { out += "\nendobj\n"; }

    int add_stream(const std::string& dict_body, const std::string& data) {
        const int num = begin_obj();
        out += "<< " + dict_body + " /Length " + std::to_string(data.size()) + " >>\n";
        out += "stream\n";
        out += data;
        out += "\nendstream";
        end_obj();
        return num;
    }
};

}  // namespace

std::string write_scanned_pdf(const std::vector<ScannedPage>& pages, bool mark_encrypted) {
    if (pages.empty() && !mark_encrypted)
        throw std::invalid_argument("write_scanned_pdf: no pages");

    Builder b;

    // Object 1: catalog, object 2: page tree root; page objects follow.
    b.begin_obj();
    b.out += "<< /Type /Catalog /Pages 2 0 R >>";
    b.end_obj();

    const int first_page_obj = 3;
    b.begin_obj();
    b.out += "<< /Type /Pages /Count " + std::to_string(pages.size()) + " /Kids [";
    for (size_t i = 0; i < pages.size(); ++i) {
        if (i) b.out += ' ';
        b.out += std::to_string(first_page_obj + int(i) * 3) + " 0 R";
    }
    b.out += "] >>";
    b.end_obj();

    for (const ScannedPage& page : pages) {
        std::string image_dict;
        std::string image_data;
        int iw = 0, ih = 0;
        if (page.gray) {
            iw = page.gray->width;
            ih = page.gray->height;
            image_dict = "/Type /XObject /Subtype /Image /Width " + std::to_string(iw) +
                         " /Height " + std::to_string(ih) +
                         " /ColorSpace /DeviceGray /BitsPerComponent 8 /Filter /FlateDecode";
            image_data = zlib_deflate(std::string_view(
                reinterpret_cast<const char*>(page.gray->pixels.data()),
                page.gray->pixels.size()));
        } else if (page.jpeg) {
            iw = page.jpeg_width;
            ih = page.jpeg_height;
            image_dict = "/Type /XObject /Subtype /Image /Width " + std::to_string(iw) +
                         " /Height " + std::to_string(ih) + " /ColorSpace " +
                         (page.jpeg_channels == 3 ? "/DeviceRGB" : "/DeviceGray") +
                         " /BitsPerComponent 8 /Filter /DCTDecode";
            image_data.assign(page.jpeg->begin(), page.jpeg->end());
        } else {
            throw std::invalid_argument("write_scanned_pdf: page without image");
        }

        const int page_obj = b.begin_obj();
        const int content_obj = page_obj + 1;
        const int image_obj = page_obj + 2;
        b.out += "<< /Type /Page /Parent 2 0 R /MediaBox [0 0 " + fmt_pts(page.width_pts) +
                 " " + fmt_pts(page.height_pts) + "] /Resources << /XObject << /Im0 " +
                 std::to_string(image_obj) + " 0 R >> >> /Contents " +
                 std::to_string(content_obj) + " 0 R >>";
        b.end_obj();

        // Scale the unit image square to the full page.
        const std::string content = "q\n" + fmt_pts(page.width_pts) + " 0 0 " +
                                    fmt_pts(page.height_pts) + " 0 0 cm\n/Im0 Do\nQ";
        b.add_stream("", content);
        b.add_stream(image_dict, image_data);
    }

    const size_t xref_pos = b.out.size();
    const size_t count = b.offsets.size() + 1;
    b.out += "xref\n0 " + std::to_string(count) + "\n";
    b.out += "0000000000 65535 f \n";
    for (size_t off : b.offsets) {
        char line[32];
        std::snprintf(line, sizeof(line), "%010zu 00000 n \n", off);
        b.out += line;
    }
    b.out += "trailer\n<< /Size " + std::to_string(count) + " /Root 1 0 R";
    if (mark_encrypted) b.out += " /Encrypt << /Filter /Standard >>";
    b.out += " >>\nstartxref\n" + std::to_string(xref_pos) + "\n%%EOF\n";
    return b.out;
}

}  // namespace inkscore::pdf
