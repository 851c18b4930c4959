#include <doctest.h>

#include <json.hpp>

#include "inkscore/report.hpp"
#include "inkscore/util.hpp"
#include "support/temp_dir.hpp"

using namespace inkscore;
using inkscore::testing::TempDir;

namespace {

// The golden per-page record, with stored values pinned (not recomputed).
PageStressRecord golden_record() {
    PageStressRecord r;
    r.student = "student0_page_2";
    r.sentiment = SentimentScores{0.05230807140469551, 0.8731970191001892,
                                  0.07449495047330856};
    r.entropy = 0.4662059545516968;
    r.stress_index = 0.2637971341609955;
    return r;
}

StudentSeries series_of(std::vector<PageStressRecord> records) {
    return aggregate_student(records);
}

}  // namespace

TEST_CASE("page JSON: schema, key order, and full-precision values") {
    const std::string text = page_record_json(golden_record());

    const auto doc = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"student", "sentiment", "entropy", "stress_index"});
    std::vector<std::string> skeys;
    for (const auto& [k, v] : doc["sentiment"].items()) skeys.push_back(k);
    CHECK(skeys == std::vector<std::string>{"negative", "neutral", "positive"});

    CHECK(doc["student"] == "student0_page_2");
    CHECK(doc["sentiment"]["negative"].get<double>() == 0.05230807140469551);
    CHECK(doc["sentiment"]["neutral"].get<double>() == 0.8731970191001892);
    CHECK(doc["sentiment"]["positive"].get<double>() == 0.07449495047330856);
    CHECK(doc["entropy"].get<double>() == 0.4662059545516968);
    CHECK(doc["stress_index"].get<double>() == 0.2637971341609955);

    // Shortest-round-trip serialization reproduces the digits verbatim.
    CHECK(text.find("0.05230807140469551") != std::string::npos);
    CHECK(text.find("0.2637971341609955") != std::string::npos);
}

TEST_CASE("page JSON for the pure-neutral record") {
    const auto doc =
        nlohmann::json::parse(page_record_json(build_record("x_page_1", {0, 1, 0})));
    CHECK(doc["sentiment"]["negative"].get<double>() == 0.0);
    CHECK(doc["sentiment"]["neutral"].get<double>() == 1.0);
    CHECK(doc["sentiment"]["positive"].get<double>() == 0.0);
    CHECK(doc["entropy"].get<double>() == 0.0);
    CHECK(doc["stress_index"].get<double>() == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("write -> parse -> write is byte-identical") {
    const std::string first = page_record_json(golden_record());
    const auto doc = nlohmann::json::parse(first);
    PageStressRecord reparsed;
    reparsed.student = doc["student"].get<std::string>();
    reparsed.sentiment.negative = doc["sentiment"]["negative"].get<double>();
    reparsed.sentiment.neutral = doc["sentiment"]["neutral"].get<double>();
    reparsed.sentiment.positive = doc["sentiment"]["positive"].get<double>();
    reparsed.entropy = doc["entropy"].get<double>();
    reparsed.stress_index = doc["stress_index"].get<double>();
    CHECK(page_record_json(reparsed) == first);
}

TEST_CASE("emit_page_json writes <label>.json") {
    TempDir dir("page_json");
    const auto path = emit_page_json(golden_record(), dir.path);
    CHECK(path.filename() == "student0_page_2.json");
    CHECK(read_file_bytes(path.string()) == page_record_json(golden_record()));
}

TEST_CASE("progression CSV: golden row formatting") {
    const StudentSeries s = series_of({golden_record()});
    CHECK(progression_csv(s) ==
          "page_index,stress_index,negative,neutral,positive\n"
          "2,0.2637971342,0.0523080714,0.8731970191,0.0744949505\n");
    CHECK(neg_vs_stress_csv(s) ==
          "negative,stress_index\n"
          "0.0523080714,0.2637971342\n");
}

TEST_CASE("progression CSV rows are ascending and cover every page") {
    std::vector<PageStressRecord> recs;
    for (int p : {3, 1, 2})
        recs.push_back(build_record("s_page_" + std::to_string(p),
                                    {0.1 * p, 1.0 - 0.1 * p - 0.2, 0.2}));
    const StudentSeries s = series_of(recs);
    const std::string csv = progression_csv(s);
    size_t rows = 0;
    int last_page = 0;
    size_t pos = csv.find('\n') + 1;
    while (pos < csv.size()) {
        const size_t eol = csv.find('\n', pos);
        const int page = std::stoi(csv.substr(pos, csv.find(',', pos) - pos));
        CHECK(page > last_page);
        last_page = page;
        ++rows;
        pos = eol + 1;
    }
    CHECK(rows == 3);
}

TEST_CASE("student summary: undefined statistics are omitted keys") {
    const StudentSeries single = series_of({build_record("solo_page_1", {0.2, 0.6, 0.2})});
    const std::string summary = student_summary_json(single, 0.30);
    CHECK(summary.find("neg_stress_r") == std::string::npos);  // undefined: omitted
    CHECK(summary.find("clusters") == std::string::npos);      // skipped below 2 pages
    const auto doc = nlohmann::json::parse(summary);
    CHECK(doc["pages"] == 1);
    CHECK(doc["student_id"] == "solo");
    CHECK(doc["stress_classes"].size() == 1);

    // Zero stress variance: r undefined even with many pages.
    std::vector<PageStressRecord> flat;
    for (int p = 1; p <= 4; ++p)
        flat.push_back(build_record("s_page_" + std::to_string(p), {0, 1, 0}));
    const std::string flat_summary = student_summary_json(series_of(flat), 0.30);
    CHECK(flat_summary.find("neg_stress_r") == std::string::npos);
    CHECK(flat_summary.find("\"clusters\"") != std::string::npos);  // defined: all low

    std::vector<PageStressRecord> varied;
    for (int p = 1; p <= 4; ++p)
        varied.push_back(build_record("s_page_" + std::to_string(p),
                                      {0.1 + 0.15 * p, 0.8 - 0.15 * p, 0.1}));
    const auto vdoc = nlohmann::json::parse(student_summary_json(series_of(varied), 0.30));
    CHECK(vdoc.contains("neg_stress_r"));
    CHECK(vdoc["neg_stress_r"].get<double>() > 0.0);
}

TEST_CASE("stress classes in the summary respect the threshold") {
    std::vector<PageStressRecord> recs;
    PageStressRecord low = build_record("s_page_1", {0, 1, 0});  // S = 0.1
    PageStressRecord high = build_record("s_page_2", {1, 0, 0});  // S = 0.7
    const auto doc =
        nlohmann::json::parse(student_summary_json(series_of({low, high}), 0.30));
    CHECK(doc["stress_classes"][0] == "low");
    CHECK(doc["stress_classes"][1] == "high");
}

TEST_CASE("run summary JSON carries totals, warnings, and the config echo") {
    RunSummary summary;
    summary.pages_total = 3;
    summary.warnings = {"w1"};
    summary.errors = {};
    summary.images_per_second = 12.5;
    summary.config.input_dir = "in";
    summary.config.out_dir = "out";
    summary.config.backends.push_back(
        BackendDescriptor{"m", "mock", BackendKind::ocr, 0, 30000});
    const auto doc = nlohmann::json::parse(run_summary_json(summary));
    CHECK(doc["pages_total"] == 3);
    CHECK(doc["warnings"][0] == "w1");
    CHECK(doc["throughput_images_per_second"].get<double>() == 12.5);
    CHECK(doc["config"]["dpi"] == 300);
    CHECK(doc["config"]["weights"]["w_neg"].get<double>() == 0.6);
    CHECK(doc["config"]["backends"][0]["id"] == "m");
    CHECK(!doc.contains("accuracy"));

    summary.accuracy = AccuracyReport{0.97, 0.93, 12.5};
    summary.accuracy_pages = 2;
    const auto with_acc = nlohmann::json::parse(run_summary_json(summary));
    CHECK(with_acc["accuracy"]["pages_evaluated"] == 2);
    CHECK(with_acc["accuracy"]["char_accuracy"].get<double>() == 0.97);
}
