#include <doctest.h>

#include "inkscore/demo.hpp"
#include "inkscore/errors.hpp"
#include "inkscore/image_io.hpp"
#include "inkscore/ingest.hpp"
#include "inkscore/pdf.hpp"
#include "inkscore/util.hpp"
#include "support/temp_dir.hpp"

using namespace inkscore;
using inkscore::testing::TempDir;
namespace fs = std::filesystem;

namespace {

GrayImage gradient_image(int w, int h) {
    GrayImage g;
    g.width = w;
    g.height = h;
    g.pixels.resize(size_t(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            g.pixels[size_t(y) * w + x] = uint8_t((x * 7 + y * 13) % 256);
    return g;
}

void touch(const fs::path& p, std::string_view content = "x") {
    write_file_bytes(p.string(), content);
}

}  // namespace

TEST_CASE("page labels") {
    CHECK(page_label("student0", 2) == "student0_page_2");
    CHECK(page_label("student3", 1) == "student3_page_1");
    CHECK(page_label("s", 10) == "s_page_10");
    CHECK_THROWS_AS(page_label("s", 0), std::invalid_argument);

    CHECK(parse_page_label("student0_page_2") ==
          std::make_pair(std::string("student0"), 2));
    CHECK(!parse_page_label("student0").has_value());
    CHECK(!parse_page_label("_page_3").has_value());
    CHECK(!parse_page_label("s_page_x").has_value());
    CHECK(!parse_page_label("s_page_0").has_value());
}

TEST_CASE("student id validity") {
    CHECK(valid_student_id("student0"));
    CHECK(!valid_student_id(""));
    CHECK(!valid_student_id("a/b"));
    CHECK(!valid_student_id("a_page_1"));  // would break label injectivity
}

TEST_CASE("discovery: ordering, warnings, rejections") {
    TempDir dir("discover");
    touch(dir.path / "student1.pdf");
    touch(dir.path / "student0.pdf");
    touch(dir.path / "notes.docx");
    touch(dir.path / "a.PNG");
    touch(dir.path / "student0_page_1.gt.txt");  // sidecar: silently ignored
    touch(dir.path / "bad_page_1.png");          // rejected id
    touch(dir.path / "student1.png");            // duplicate stem

    const DiscoveryResult r = discover_inputs(dir.path);
    REQUIRE(r.sources.size() == 3);
    CHECK(r.sources[0].student_id == "a");
    CHECK(r.sources[0].kind == SourceKind::image);  // case-insensitive extension
    CHECK(r.sources[1].student_id == "student0");
    CHECK(r.sources[1].kind == SourceKind::pdf);
    CHECK(r.sources[2].student_id == "student1");

    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("notes.docx") != std::string::npos);

    REQUIRE(r.errors.size() == 2);
    CHECK(r.errors[0].find("bad_page_1") != std::string::npos);
    CHECK(r.errors[1].find("duplicate") != std::string::npos);
}

TEST_CASE("discovery: empty and missing directories") {
    TempDir dir("discover_empty");
    const DiscoveryResult r = discover_inputs(dir.path);
    CHECK(r.sources.empty());
    CHECK(r.warnings.empty());

    CHECK_THROWS_AS(discover_inputs(dir.path / "does_not_exist"), ConfigError);
}

TEST_CASE("pdf round trip: page count, indices, order") {
    TempDir dir("pdf_pages");
    std::vector<GrayImage> images;
    for (int i = 0; i < 3; ++i) images.push_back(make_synthetic_page(60, 80, 100 + i, 5));
    std::vector<pdf::ScannedPage> specs;
    for (GrayImage& g : images) {
        pdf::ScannedPage s;
        s.width_pts = 60;
        s.height_pts = 80;
        s.gray = &g;
        specs.push_back(s);
    }
    const fs::path path = dir.path / "student7.pdf";
    write_file_bytes(path.string(), pdf::write_scanned_pdf(specs));

    const DocumentSource src{path, "student7", SourceKind::pdf};
    const std::vector<PageImage> pages = rasterize_document(src, 72);
    REQUIRE(pages.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(pages[i].page_index == i + 1);
        CHECK(pages[i].student_id == "student7");
        CHECK(pages[i].dpi == 72);
    }
}

TEST_CASE("pdf rendering reproduces an embedded image 1:1 at 72 dpi") {
    // Page size equals the image size in points, so the unit-square mapping is
    // pixel-for-pixel.
    const GrayImage img = gradient_image(100, 80);
    pdf::ScannedPage spec;
    spec.width_pts = 100;
    spec.height_pts = 80;
    spec.gray = &img;
    const std::string bytes = pdf::write_scanned_pdf({spec});

    const pdf::Document doc = pdf::Document::from_bytes(bytes);
    REQUIRE(doc.page_count() == 1);
    const PageImage page = doc.render_page(0, 72);
    CHECK(page.width == 100);
    CHECK(page.height == 80);
    CHECK(page.channels == 1);
    CHECK(page.pixels == img.pixels);
}

TEST_CASE("pdf page dimensions follow round-half-up of inches x dpi") {
    // A4: 210 x 297 mm = 8.2677 x 11.6929 in -> 2480 x 3508 px at 300 dpi.
    const double a4_w_pts = 210.0 / 25.4 * 72.0;
    const double a4_h_pts = 297.0 / 25.4 * 72.0;
    CHECK(round_half_up(a4_w_pts / 72.0 * 300) == 2480);
    CHECK(round_half_up(a4_h_pts / 72.0 * 300) == 3508);

    const GrayImage img = gradient_image(20, 28);
    pdf::ScannedPage spec;
    spec.width_pts = a4_w_pts;
    spec.height_pts = a4_h_pts;
    spec.gray = &img;
    const pdf::Document doc = pdf::Document::from_bytes(pdf::write_scanned_pdf({spec}));
    const auto size = doc.page_size(0);
    CHECK(size.width == doctest::Approx(a4_w_pts).epsilon(1e-4));

    const PageImage page = doc.render_page(0, 300);
    CHECK(page.width == 2480);
    CHECK(page.height == 3508);
}

TEST_CASE("pdf rendering is deterministic") {
    const GrayImage img = make_synthetic_page(64, 48, 5, 4);
    pdf::ScannedPage spec;
    spec.width_pts = 64;
    spec.height_pts = 48;
    spec.gray = &img;
    const std::string bytes = pdf::write_scanned_pdf({spec});
    const std::string again = pdf::write_scanned_pdf({spec});
    CHECK(bytes == again);

    const pdf::Document doc = pdf::Document::from_bytes(bytes);
    const PageImage a = doc.render_page(0, 150);
    const PageImage b = doc.render_page(0, 150);
    CHECK(a.width == b.width);
    CHECK(a.height == b.height);
    CHECK(a.pixels == b.pixels);
}

TEST_CASE("pdf with a DCTDecode (JPEG) image decodes") {
    const GrayImage img = gradient_image(40, 30);
    const std::vector<uint8_t> jpeg = encode_jpeg(img);

    pdf::ScannedPage spec;
    spec.width_pts = 40;
    spec.height_pts = 30;
    spec.jpeg = &jpeg;
    spec.jpeg_width = 40;
    spec.jpeg_height = 30;
    spec.jpeg_channels = 1;

    const pdf::Document doc = pdf::Document::from_bytes(pdf::write_scanned_pdf({spec}));
    const PageImage page = doc.render_page(0, 72);
    CHECK(page.width == 40);
    CHECK(page.height == 30);
    // JPEG is lossy; compare mean intensity loosely.
    double mean_src = 0, mean_out = 0;
    for (uint8_t v : img.pixels) mean_src += v;
    for (uint8_t v : page.pixels) mean_out += v;
    mean_src /= double(img.pixels.size());
    mean_out /= double(page.pixel_count());
    CHECK(std::abs(mean_src - mean_out) < 4.0);
}

TEST_CASE("pdf error paths: corrupt, encrypted, zero pages, xref stream") {
    CHECK_THROWS_AS(pdf::Document::from_bytes("this is not a pdf at all"), DocumentError);

    const GrayImage img = gradient_image(8, 8);
    pdf::ScannedPage spec;
    spec.width_pts = 8;
    spec.height_pts = 8;
    spec.gray = &img;
    CHECK_THROWS_WITH_AS(
        pdf::Document::from_bytes(pdf::write_scanned_pdf({spec}, /*mark_encrypted=*/true)),
        doctest::Contains("encrypted"), DocumentError);

    // Zero-page document, assembled with correct xref offsets.
    std::string zero = "%PDF-1.4\n";
    std::vector<size_t> offsets;
    offsets.push_back(zero.size());
    zero += "1 0 obj\n<< /Type /Catalog /Pages 2 0 R >>\nendobj\n";
    offsets.push_back(zero.size());
    zero += "2 0 obj\n<< /Type /Pages /Count 0 /Kids [] >>\nendobj\n";
    const size_t xref_at = zero.size();
    zero += "xref\n0 3\n0000000000 65535 f \n";
    for (size_t off : offsets) {
        char line[32];
        std::snprintf(line, sizeof(line), "%010zu 00000 n \n", off);
        zero += line;
    }
    zero += "trailer\n<< /Size 3 /Root 1 0 R >>\nstartxref\n" + std::to_string(xref_at) +
            "\n%%EOF\n";
    CHECK_THROWS_WITH_AS(pdf::Document::from_bytes(zero), doctest::Contains("no pages"),
                         DocumentError);

    // Truncated tail (startxref missing).
    std::string truncated = pdf::write_scanned_pdf({spec});
    truncated.resize(truncated.size() / 2);
    CHECK_THROWS_AS(pdf::Document::from_bytes(truncated), DocumentError);
}

TEST_CASE("corrupt document error carries the path and batch semantics") {
    TempDir dir("corrupt");
    const fs::path bad = dir.path / "broken.pdf";
    touch(bad, "garbage");
    const DocumentSource src{bad, "broken", SourceKind::pdf};
    CHECK_THROWS_WITH_AS(rasterize_document(src, 300), doctest::Contains("broken.pdf"),
                         DocumentError);
}

TEST_CASE("image sources yield a single page with the given dpi") {
    TempDir dir("imgsrc");
    const GrayImage img = gradient_image(33, 21);
    write_png_file((dir.path / "solo.png").string(), encode_png(img));

    const DocumentSource src{dir.path / "solo.png", "solo", SourceKind::image};
    const std::vector<PageImage> pages = rasterize_document(src, 300);
    REQUIRE(pages.size() == 1);
    CHECK(pages[0].page_index == 1);
    CHECK(pages[0].dpi == 300);
    CHECK(pages[0].width == 33);
    CHECK(pages[0].height == 21);
    CHECK(pages[0].channels == 1);
    CHECK(pages[0].pixels == img.pixels);
}

TEST_CASE("rasterizing the same document twice is bit-identical") {
    TempDir dir("deterministic");
    std::vector<GrayImage> imgs = {make_synthetic_page(50, 40, 1, 4),
                                   make_synthetic_page(50, 40, 2, 4)};
    std::vector<pdf::ScannedPage> specs;
    for (GrayImage& g : imgs) {
        pdf::ScannedPage s;
        s.width_pts = 50;
        s.height_pts = 40;
        s.gray = &g;
        specs.push_back(s);
    }
    const fs::path path = dir.path / "dup.pdf";
    write_file_bytes(path.string(), pdf::write_scanned_pdf(specs));
    const DocumentSource src{path, "dup", SourceKind::pdf};

    const auto first = rasterize_document(src, 144);
    const auto second = rasterize_document(src, 144);
    REQUIRE(first.size() == second.size());
    size_t total = 0;
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].width == second[i].width);
        CHECK(first[i].height == second[i].height);
        CHECK(first[i].pixels == second[i].pixels);
        total += 1;
    }
    CHECK(total == 2);  // emitted pages equal the document's page count
}
