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

// Generates a self-contained demo corpus: synthetic "scanned" PDFs plus the
// mock OCR fixtures and lexicon that make a fully offline run possible.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "inkscore/demo.hpp"
#include "inkscore/ingest.hpp"
#include "inkscore/pdf.hpp"
#include "inkscore/util.hpp"

namespace fs = std::filesystem;
using namespace inkscore;

namespace {

// Three pages per student, written so the stress trajectory differs per
// student: student0 climbs steadily, student1 spikes in the middle, later
// students cycle through the same shapes.
const char* kPageTexts[][3] = {
    {
        "The water cycle moves moisture between oceans, air and land. Evaporation lifts "
        "water vapour, condensation forms clouds, and precipitation returns the water. I am "
        "confident this diagram is correct and the answer feels clear and complete.",
        "Photosynthesis converts light energy into chemical energy inside chloroplasts. I am "
        "not sure about the exact equation here and the second step is confusing to me. "
        "Maybe the coefficients are wrong, which is worrying.",
        "This last derivation is hard and I am stuck. The algebra keeps failing and I am "
        "anxious about the remaining time. Everything feels difficult and frustrating and I "
        "doubt the final result is right.",
    },
    {
        "A food chain shows how energy flows from producers to consumers. Grass feeds the "
        "rabbit and the fox eats the rabbit. This question is easy and I am happy with the "
        "clear structure of my answer.",
        "The mid question is a mess. I am unsure about the valves of the heart and the flow "
        "order seems wrong. This part is stressful and confusing and the diagram is probably "
        "a failure.",
        "For the final part the definitions came back to me. Supply rises when prices rise "
        "and demand falls. I am calm again and fairly confident the conclusion is correct "
        "and complete.",
    },
};
constexpr int kTextVariants = 2;

const char* kLexicon = R"({
  "negative": ["hard", "stuck", "anxious", "difficult", "frustrating", "doubt", "worrying",
               "confusing", "unsure", "stressful", "mess", "failure", "wrong", "fails",
               "failing"],
  "positive": ["confident", "clear", "complete", "easy", "happy", "calm", "correct"]
})";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate a synthetic demo corpus for the analysis pipeline"};
    std::string out_dir;
    int students = 2;
    app.add_option("out_dir", out_dir, "Corpus directory to create")->required();
    app.add_option("--students", students, "Number of synthetic students (default 2)")
        ->check(CLI::Range(1, 26));
    CLI11_PARSE(app, argc, argv);

    try {
        const fs::path root(out_dir);
        const fs::path input = root / "input";
        const fs::path mock = root / "mock";
        fs::create_directories(input);
        fs::create_directories(mock);

        for (int s = 0; s < students; ++s) {
            const std::string student = "student" + std::to_string(s);
            std::vector<GrayImage> pages;
            std::vector<pdf::ScannedPage> specs;
            for (int p = 0; p < 3; ++p)
                pages.push_back(make_synthetic_page(500, 650, uint64_t(s) * 97 + p, 16));
            for (GrayImage& g : pages) {
                pdf::ScannedPage spec;
                spec.width_pts = 360;  // 5 x 6.5 inches
                spec.height_pts = 468;
                spec.gray = &g;
                specs.push_back(spec);
            }
            write_file_bytes((input / (student + ".pdf")).string(),
                             pdf::write_scanned_pdf(specs));

            const auto& texts = kPageTexts[s % kTextVariants];
            for (int p = 0; p < 3; ++p) {
                const std::string label = page_label(student, p + 1);
                write_file_bytes((mock / (label + ".txt")).string(), texts[p]);
            }
            // Ground truth for page 1 so the accuracy report has data.
            write_file_bytes((input / (page_label(student, 1) + ".gt.txt")).string(),
                             texts[0]);
        }
        write_file_bytes((mock / "lexicon.json").string(), kLexicon);

        std::printf("demo corpus written to %s\n", root.string().c_str());
        std::printf("run:\n  inkscore analyze %s --out %s --mock-corpus %s\n",
                    input.string().c_str(), (root / "out").string().c_str(),
                    mock.string().c_str());
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fatal: %s\n", e.what());
        return 2;
    }
}
