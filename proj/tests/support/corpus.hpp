#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "inkscore/demo.hpp"
#include "inkscore/ingest.hpp"
#include "inkscore/pdf.hpp"
#include "inkscore/util.hpp"

namespace inkscore::testing {

// Page transcriptions for the hermetic corpus. Page 1 is calm, page 2 mixed,
// page 3 loaded with lexicon negatives, so stress climbs across the script.
inline const std::vector<std::string>& fixture_texts() {
    static const std::vector<std::string> texts = {
        "The diagram labels every part of the cell. I am confident the answer is clear "
        "and the structure is correct.",
        "The second proof is confusing and I am unsure about the middle step. Maybe the "
        "sign flips, which is worrying.",
        "This problem is difficult and I am stuck. The time pressure makes everything "
        "worse and I am worried the result is wrong.",
    };
    return texts;
}

inline constexpr const char* kFixtureLexicon =
    R"({"negative": ["confusing", "unsure", "worrying", "difficult", "stuck", "worried",
                     "wrong", "worse"],
        "positive": ["confident", "clear", "correct"]})";

// One student, `pages` synthetic PDF pages, mock fixtures and lexicon.
// Layout: <root>/input/student0.pdf, <root>/mock/<label>.txt, lexicon.json.
inline void write_fixture_corpus(const std::filesystem::path& root, int pages = 3,
                                 bool with_gt = false,
                                 const std::string& student = "student0") {
    namespace fs = std::filesystem;
    fs::create_directories(root / "input");
    fs::create_directories(root / "mock");

    std::vector<GrayImage> images;
    for (int p = 0; p < pages; ++p) images.push_back(make_synthetic_page(250, 330, 41 + p, 10));
    std::vector<pdf::ScannedPage> specs;
    for (GrayImage& g : images) {
        pdf::ScannedPage s;
        s.width_pts = 60.0;    // 250 px at 300 dpi
        s.height_pts = 79.2;   // 330 px at 300 dpi
        s.gray = &g;
        specs.push_back(s);
    }
    write_file_bytes((root / "input" / (student + ".pdf")).string(),
                     pdf::write_scanned_pdf(specs));

    const auto& texts = fixture_texts();
    for (int p = 0; p < pages; ++p) {
        const std::string label = page_label(student, p + 1);
        write_file_bytes((root / "mock" / (label + ".txt")).string(),
                         texts[size_t(p) % texts.size()]);
    }
    write_file_bytes((root / "mock" / "lexicon.json").string(), kFixtureLexicon);
    if (with_gt)
        write_file_bytes((root / "input" / (page_label(student, 1) + ".gt.txt")).string(),
                         texts[0]);
}

}  // namespace inkscore::testing
