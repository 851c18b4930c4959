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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "inkscore/errors.hpp"
#include "inkscore/image_io.hpp"
#include "inkscore/pdf.hpp"
#include "inkscore/util.hpp"
#include "pdf_objects.hpp"

namespace inkscore::pdf {
namespace {

// Row-vector affine transform: (x, y) -> (a x + c y + e, b x + d y + f).
struct Mat {
    double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;
};

Mat mat_mul(const Mat& m, const Mat& n) {  // apply m, then n
    return Mat{m.a * n.a + m.b * n.c,        m.a * n.b + m.b * n.d,
               m.c * n.a + m.d * n.c,        m.c * n.b + m.d * n.d,
               m.e * n.a + m.f * n.c + n.e,  m.e * n.b + m.f * n.d + n.f};
}

bool mat_invert(const Mat& m, Mat& out) {
    const double det = m.a * m.d - m.b * m.c;
    if (std::abs(det) < 1e-12) return false;
    const double id = 1.0 / det;
    out.a = m.d * id;
    out.b = -m.b * id;
    out.c = -m.c * id;
    out.d = m.a * id;
    out.e = -(m.e * out.a + m.f * out.c);
    out.f = -(m.e * out.b + m.f * out.d);
    return true;
}

struct DecodedXObject {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<uint8_t> pixels;  // RGB interleaved when channels == 3
};

struct CollectedPage {
    Object page;       // the /Page dict (resolved)
    Object media_box;  // inherited-resolved [x0 y0 x1 y1]
    Object resources;  // inherited-resolved dict (may be Null)
};

}  // namespace

struct Document::Impl {
    std::string bytes;
    std::map<int, size_t> xref;  // object number -> byte offset
    Object trailer;
    std::vector<CollectedPage> pages;
    mutable std::map<int, Object> cache;

    const Object& resolve(const Object& o) const {
        if (o.kind != Object::Kind::Ref) return o;
        auto cached = cache.find(o.ref_num);
        if (cached != cache.end()) return cached->second;
        auto it = xref.find(o.ref_num);
        if (it == xref.end())
            throw DocumentError("dangling object reference " + std::to_string(o.ref_num));
        Object parsed = parse_indirect(it->second, o.ref_num);
        return cache.emplace(o.ref_num, std::move(parsed)).first->second;
    }

    Object parse_indirect(size_t offset, int expected_num) const {
        Lexer lex(bytes, offset);
        Object num = lex.parse_object();
        Object gen = lex.parse_object();
        if (!num.is(Object::Kind::Number) || !gen.is(Object::Kind::Number) ||
            int(num.number) != expected_num || !lex.accept_keyword("obj"))
            throw DocumentError("malformed indirect object " + std::to_string(expected_num));
        Object body = lex.parse_object();
        if (lex.accept_keyword("stream")) {
            if (!body.is(Object::Kind::Dict)) throw DocumentError("stream without dict");
            // EOL after the keyword, then exactly /Length bytes.
            size_t p = lex.pos();
            if (p < bytes.size() && bytes[p] == '\r') ++p;
            if (p < bytes.size() && bytes[p] == '\n') ++p;
            const Object* len_obj = body.find("Length");
            if (!len_obj) throw DocumentError("stream missing /Length");
            const Object& len = resolve(*len_obj);
            if (!len.is(Object::Kind::Number) || len.number < 0)
                throw DocumentError("bad stream /Length");
            const size_t n = size_t(len.number);
            if (p + n > bytes.size()) throw DocumentError("stream data out of bounds");
            body.kind = Object::Kind::Stream;
            body.stream_data = bytes.substr(p, n);
            lex.seek(p + n);
            if (!lex.accept_keyword("endstream"))
                throw DocumentError("missing endstream for object " +
                                    std::to_string(expected_num));
        }
        return body;
    }

    double number_at(const Object& o) const {
        const Object& r = resolve(o);
        if (!r.is(Object::Kind::Number)) throw DocumentError("expected number in PDF object");
        return r.number;
    }

    /// Decoded (defiltered) stream payload; supports Flate, DCT passthrough
    /// is handled by the image path.
    std::string decoded_stream(const Object& stream) const {
        const Object* filter = stream.find("Filter");
        if (!filter) return stream.stream_data;
        const Object& f = resolve(*filter);
        if (f.is_name("FlateDecode")) {
            if (stream.find("DecodeParms"))
                throw DocumentError("FlateDecode predictors are not supported");
            return zlib_inflate(stream.stream_data);
        }
        if (f.is(Object::Kind::Array)) {
            if (f.array.size() == 1) {
                const Object& f0 = resolve(f.array[0]);
                if (f0.is_name("FlateDecode")) return zlib_inflate(stream.stream_data);
            }
            if (f.array.empty()) return stream.stream_data;
        }
        throw DocumentError("unsupported stream filter");
    }
};

namespace {

// Walks startxref -> xref table chain. Newest table wins per object.
void parse_xref_chain(Document::Impl& impl) {
    const std::string& b = impl.bytes;
    const size_t tail_start = b.size() > 2048 ? b.size() - 2048 : 0;
    const size_t sx = b.rfind("startxref");
    if (sx == std::string::npos || sx < tail_start)
        throw DocumentError("startxref not found (corrupt or truncated PDF)");
    Lexer tail(b, sx + 9);
    Object off = tail.parse_object();
    if (!off.is(Object::Kind::Number) || off.number < 0 || size_t(off.number) >= b.size())
        throw DocumentError("bad startxref offset");

    std::set<size_t> visited;
    size_t offset = size_t(off.number);
    bool newest = true;
    while (true) {
        if (!visited.insert(offset).second) throw DocumentError("cyclic xref chain");
        Lexer lex(b, offset);
        if (!lex.accept_keyword("xref")) {
            // A "N 0 obj" here would be an xref stream (PDF 1.5+).
            throw DocumentError(
                "cross-reference table not found (xref streams are not supported)");
        }
        for (;;) {
            if (lex.accept_keyword("trailer")) break;
            Object first = lex.parse_object();
            Object count = lex.parse_object();
            if (!first.is(Object::Kind::Number) || !count.is(Object::Kind::Number))
                throw DocumentError("malformed xref subsection header");
            const int start = int(first.number);
            const int n = int(count.number);
            if (n < 0 || n > 1 << 22) throw DocumentError("implausible xref subsection");
            for (int i = 0; i < n; ++i) {
                Object pos = lex.parse_object();
                Object gen = lex.parse_object();
                const std::string type = lex.next_keyword();
                if (!pos.is(Object::Kind::Number) || !gen.is(Object::Kind::Number) ||
                    (type != "n" && type != "f"))
                    throw DocumentError("malformed xref entry");
                if (type == "n")
                    impl.xref.emplace(start + i, size_t(pos.number));  // first wins
            }
        }
        Object trailer = lex.parse_object();
        if (!trailer.is(Object::Kind::Dict)) throw DocumentError("malformed trailer");
        if (newest) {
            impl.trailer = trailer;
            newest = false;
        }
        const Object* prev = trailer.find("Prev");
        if (!prev) break;
        if (!prev->is(Object::Kind::Number)) throw DocumentError("bad /Prev in trailer");
        offset = size_t(prev->number);
    }
}

void collect_pages(Document::Impl& impl, const Object& node_ref, Object inherited_media,
                   Object inherited_res, std::set<int>& visiting, int depth) {
    if (depth > 64) throw DocumentError("page tree too deep");
    if (node_ref.kind == Object::Kind::Ref && !visiting.insert(node_ref.ref_num).second)
        throw DocumentError("cyclic page tree");
    const Object& node = impl.resolve(node_ref);
    if (!node.is(Object::Kind::Dict) && !node.is(Object::Kind::Stream))
        throw DocumentError("malformed page tree node");

    Object media = inherited_media;
    if (const Object* mb = node.find("MediaBox")) media = impl.resolve(*mb);
    Object res = inherited_res;
    if (const Object* rs = node.find("Resources")) res = impl.resolve(*rs);

    const Object* type = node.find("Type");
    const bool is_pages = type && impl.resolve(*type).is_name("Pages");
    const bool is_page = type && impl.resolve(*type).is_name("Page");
    if (is_pages || (!is_page && node.find("Kids"))) {
        const Object* kids = node.find("Kids");
        if (!kids) throw DocumentError("pages node without /Kids");
        const Object& arr = impl.resolve(*kids);
        if (!arr.is(Object::Kind::Array)) throw DocumentError("/Kids is not an array");
        for (const Object& kid : arr.array)
            collect_pages(impl, kid, media, res, visiting, depth + 1);
        return;
    }
    if (!is_page) throw DocumentError("page tree node with unknown /Type");
    if (!media.is(Object::Kind::Array) || media.array.size() != 4)
        throw DocumentError("page missing /MediaBox");
    impl.pages.push_back(CollectedPage{node, media, res});
}

DecodedXObject decode_image_xobject(const Document::Impl& impl, const Object& xo) {
    const auto geti = [&](const char* key) -> int {
        const Object* o = xo.find(key);
        if (!o) throw DocumentError(std::string("image missing /") + key);
        return int(impl.number_at(*o));
    };
    const int w = geti("Width"), h = geti("Height");
    if (w <= 0 || h <= 0 || int64_t(w) * h > (int64_t(1) << 30))
        throw DocumentError("implausible image dimensions");

    std::string filter_name;
    if (const Object* f = xo.find("Filter")) {
        const Object& fr = impl.resolve(*f);
        if (fr.is(Object::Kind::Name)) {
            filter_name = fr.text;
        } else if (fr.is(Object::Kind::Array) && fr.array.size() == 1) {
            filter_name = impl.resolve(fr.array[0]).text;
        } else if (!fr.is(Object::Kind::Array) || !fr.array.empty()) {
            throw DocumentError("unsupported image filter chain");
        }
    }

    if (filter_name == "DCTDecode") {
        DecodedImage jpg = decode_image_bytes(
            reinterpret_cast<const uint8_t*>(xo.stream_data.data()), xo.stream_data.size());
        if (jpg.width != w || jpg.height != h)
            throw DocumentError("embedded JPEG dimensions disagree with image dict");
        return DecodedXObject{jpg.width, jpg.height, jpg.channels, std::move(jpg.pixels)};
    }

    std::string raw;
    if (filter_name.empty()) {
        raw = xo.stream_data;
    } else if (filter_name == "FlateDecode") {
        if (xo.find("DecodeParms"))
            throw DocumentError("FlateDecode predictors are not supported");
        raw = zlib_inflate(xo.stream_data, size_t(w) * h * 3);
    } else {
        throw DocumentError("unsupported image filter /" + filter_name);
    }

    if (xo.find("Decode")) throw DocumentError("non-default /Decode arrays are not supported");

    const Object* cs_obj = xo.find("ColorSpace");
    if (!cs_obj) throw DocumentError("image missing /ColorSpace");
    const Object& cs = impl.resolve(*cs_obj);
    const int bpc = geti("BitsPerComponent");

    DecodedXObject out;
    out.width = w;
    out.height = h;
    if (cs.is_name("DeviceRGB")) {
        if (bpc != 8) throw DocumentError("only 8-bit RGB images are supported");
        if (raw.size() < size_t(w) * h * 3) throw DocumentError("image data truncated");
        out.channels = 3;
        out.pixels.assign(raw.begin(), raw.begin() + size_t(w) * h * 3);
    } else if (cs.is_name("DeviceGray")) {
        out.channels = 1;
        if (bpc == 8) {
            if (raw.size() < size_t(w) * h) throw DocumentError("image data truncated");
            out.pixels.assign(raw.begin(), raw.begin() + size_t(w) * h);
        } else if (bpc == 1) {
            const size_t stride = (size_t(w) + 7) / 8;  // rows are byte-aligned
            if (raw.size() < stride * h) throw DocumentError("image data truncated");
            out.pixels.resize(size_t(w) * h);
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) {
                    const uint8_t byte = uint8_t(raw[size_t(y) * stride + size_t(x) / 8]);
                    const int bit = (byte >> (7 - (x % 8))) & 1;
                    out.pixels[size_t(y) * w + x] = bit ? 255 : 0;
                }
        } else {
            throw DocumentError("unsupported gray bit depth");
        }
    } else {
        throw DocumentError("unsupported /ColorSpace (DeviceGray/DeviceRGB only)");
    }
    return out;
}

void draw_image(const DecodedXObject& img, const Mat& unit_to_raster, PageImage& canvas) {
    Mat inv;
    if (!mat_invert(unit_to_raster, inv)) return;  // degenerate placement

    // Bounding box of the transformed unit square, clipped to the canvas.
    double xs[4], ys[4];
    const double corners[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (int i = 0; i < 4; ++i) {
        xs[i] = unit_to_raster.a * corners[i][0] + unit_to_raster.c * corners[i][1] +
                unit_to_raster.e;
        ys[i] = unit_to_raster.b * corners[i][0] + unit_to_raster.d * corners[i][1] +
                unit_to_raster.f;
    }
    const int x0 = std::max(0, int(std::floor(*std::min_element(xs, xs + 4))));
    const int x1 = std::min(canvas.width, int(std::ceil(*std::max_element(xs, xs + 4))));
    const int y0 = std::max(0, int(std::floor(*std::min_element(ys, ys + 4))));
    const int y1 = std::min(canvas.height, int(std::ceil(*std::max_element(ys, ys + 4))));

    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            const double px = x + 0.5, py = y + 0.5;
            const double u = inv.a * px + inv.c * py + inv.e;
            const double v = inv.b * px + inv.d * py + inv.f;
            if (u < 0 || u >= 1 || v < 0 || v >= 1) continue;
            const int sx = std::min(img.width - 1, int(u * img.width));
            const int sy = std::min(img.height - 1, int((1.0 - v) * img.height));
            const size_t src = size_t(sy) * img.width + sx;
            uint8_t r, g, b;
            if (img.channels == 3) {
                r = img.pixels[3 * src];
                g = img.pixels[3 * src + 1];
                b = img.pixels[3 * src + 2];
            } else {
                r = g = b = img.pixels[src];
            }
            if (canvas.channels == 3) {
                uint8_t* dst = canvas.pixels.data() + (size_t(y) * canvas.width + x) * 3;
                dst[0] = r;
                dst[1] = g;
                dst[2] = b;
            } else {
                canvas.pixels[size_t(y) * canvas.width + x] = r;  // gray canvas, gray source
            }
        }
    }
}

}  // namespace

Document Document::open(const std::string& path) {
    std::string bytes;
    try {
        bytes = read_file_bytes(path);
    } catch (const std::exception& e) {
        throw DocumentError(e.what());
    }
    try {
        return from_bytes(std::move(bytes));
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

Document Document::from_bytes(std::string bytes) {
    auto impl = std::make_shared<Impl>();
    impl->bytes = std::move(bytes);

    if (impl->bytes.size() < 16 || impl->bytes.compare(0, 5, "%PDF-") != 0)
        throw DocumentError("not a PDF (missing %PDF- header)");

    parse_xref_chain(*impl);

    if (impl->trailer.find("Encrypt"))
        throw DocumentError("encrypted PDFs are not supported");
    const Object* root_ref = impl->trailer.find("Root");
    if (!root_ref) throw DocumentError("trailer missing /Root");
    const Object& catalog = impl->resolve(*root_ref);
    const Object* pages_ref = catalog.find("Pages");
    if (!pages_ref) throw DocumentError("catalog missing /Pages");

    std::set<int> visiting;
    collect_pages(*impl, *pages_ref, Object::make_null(), Object::make_null(), visiting, 0);
    if (impl->pages.empty()) throw DocumentError("document has no pages");

    Document doc;
    doc.impl_ = std::move(impl);
    return doc;
}

int Document::page_count() const { return int(impl_->pages.size()); }

Document::PageSizePts Document::page_size(int page_index) const {
    const CollectedPage& p = impl_->pages.at(size_t(page_index));
    const auto& mb = p.media_box.array;
    const double x0 = impl_->number_at(mb[0]), y0 = impl_->number_at(mb[1]);
    const double x1 = impl_->number_at(mb[2]), y1 = impl_->number_at(mb[3]);
    return PageSizePts{std::abs(x1 - x0), std::abs(y1 - y0)};
}

PageImage Document::render_page(int page_index, int dpi) const {
    if (dpi <= 0) throw DocumentError("dpi must be positive");
    const Impl& impl = *impl_;
    const CollectedPage& p = impl.pages.at(size_t(page_index));

    const auto& mb = p.media_box.array;
    const double bx0 = std::min(impl.number_at(mb[0]), impl.number_at(mb[2]));
    const double by0 = std::min(impl.number_at(mb[1]), impl.number_at(mb[3]));
    const PageSizePts size = page_size(page_index);

    PageImage canvas;
    canvas.dpi = dpi;
    canvas.width = std::max<int>(1, int(round_half_up(size.width / 72.0 * dpi)));
    canvas.height = std::max<int>(1, int(round_half_up(size.height / 72.0 * dpi)));

    // Image XObjects available to this page.
    std::map<std::string, DecodedXObject> images;
    if (p.resources.is(Object::Kind::Dict)) {
        if (const Object* xo_dict_ref = p.resources.find("XObject")) {
            const Object& xo_dict = impl.resolve(*xo_dict_ref);
            for (const auto& [name, ref] : xo_dict.dict) {
                const Object& xo = impl.resolve(ref);
                const Object* sub = xo.find("Subtype");
                if (sub && impl.resolve(*sub).is_name("Image"))
                    images.emplace(name, decode_image_xobject(impl, xo));
            }
        }
    }

    canvas.channels = 1;
    for (const auto& [name, img] : images)
        if (img.channels == 3) canvas.channels = 3;
    canvas.pixels.assign(canvas.pixel_count() * size_t(canvas.channels), 255);

    // Concatenated content streams.
    std::string content;
    if (const Object* c = p.page.find("Contents")) {
        const Object& cv = impl.resolve(*c);
        if (cv.is(Object::Kind::Stream)) {
            content = impl.decoded_stream(cv);
        } else if (cv.is(Object::Kind::Array)) {
            for (const Object& part : cv.array) {
                content += impl.decoded_stream(impl.resolve(part));
                content += '\n';
            }
        }
    }

    const double s = double(dpi) / 72.0;
    const Mat base{s, 0, 0, -s, -bx0 * s, double(canvas.height) + by0 * s};

    std::vector<Mat> stack;
    Mat ctm;  // identity; user space
    std::vector<Object> operands;
    Lexer lex(content);
    while (true) {
        lex.skip_ws();
        if (lex.eof()) break;
        const char c = lex.bytes()[lex.pos()];
        if (c == '/' || c == '[' || c == '<' || c == '(' || std::isdigit(uint8_t(c)) ||
            c == '+' || c == '-' || c == '.') {
            try {
                operands.push_back(lex.parse_object());
            } catch (const std::exception&) {
                break;  // tolerate junk in content we do not interpret
            }
            continue;
        }
        const std::string op = lex.next_keyword();
        if (op.empty()) break;
        if (op == "q") {
            stack.push_back(ctm);
        } else if (op == "Q") {
            if (!stack.empty()) {
                ctm = stack.back();
                stack.pop_back();
            }
        } else if (op == "cm" && operands.size() >= 6) {
            const size_t n = operands.size();
            Mat m{operands[n - 6].number, operands[n - 5].number, operands[n - 4].number,
                  operands[n - 3].number, operands[n - 2].number, operands[n - 1].number};
            ctm = mat_mul(m, ctm);
        } else if (op == "Do" && !operands.empty() &&
                   operands.back().is(Object::Kind::Name)) {
            auto it = images.find(operands.back().text);
            if (it != images.end()) draw_image(it->second, mat_mul(ctm, base), canvas);
        } else if (op == "BI") {
            // Inline image: skip to EI. Not part of the supported profile.
            const std::string_view b = lex.bytes();
            size_t pos = lex.pos();
            while (pos + 2 < b.size() &&
                   !(b[pos] == 'E' && b[pos + 1] == 'I' &&
                     (pos + 2 >= b.size() || !std::isalnum(uint8_t(b[pos + 2])))))
                ++pos;
            lex.seek(std::min(pos + 2, b.size()));
        }
        operands.clear();
    }
    return canvas;
}

}  // namespace inkscore::pdf
