#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <chrono>
#include <json.hpp>
#include <thread>

#include "inkscore/backends.hpp"
#include "inkscore/errors.hpp"
#include "inkscore/util.hpp"
#include "support/temp_dir.hpp"

using namespace inkscore;
using inkscore::testing::TempDir;
using nlohmann::json;

namespace {

BackendDescriptor mock_desc(BackendKind kind, const std::string& id = "m", int prio = 0) {
    return BackendDescriptor{id, "mock", kind, prio, 30000};
}

OcrPageInput page_input(const std::string& label, size_t ink = 100) {
    OcrPageInput in;
    in.label = label;
    in.dpi = 300;
    in.ink_pixels = ink;
    in.png = {0x89, 'P', 'N', 'G'};  // mocks never look at the bytes
    return in;
}

Lexicon demo_lexicon() {
    Lexicon lex;
    lex.negative = {"bad", "awful"};
    lex.positive = {"good", "great"};
    return lex;
}

}  // namespace

TEST_CASE("renormalize: exact sum, tolerance window, protocol error") {
    const SentimentScores ok = renormalize({0.2, 0.5, 0.3}, "b");
    CHECK(ok.sum() == 1.0);

    // Slightly off but within 1e-6: rescaled to exactly 1.
    const SentimentScores nudged = renormalize({0.2000004, 0.5, 0.2999999}, "b");
    CHECK(nudged.sum() == 1.0);

    CHECK_THROWS_AS(renormalize({0.5, 0.5, 0.5}, "b"), BackendProtocolError);
    CHECK_THROWS_AS(renormalize({0.2, 0.2, 0.2}, "b"), BackendProtocolError);
}

TEST_CASE("mock OCR: fixture echo, sidecar confidence, misses, determinism") {
    TempDir dir("mock_ocr");
    write_file_bytes((dir.path / "p1.txt").string(), "hello");
    write_file_bytes((dir.path / "p2.txt").string(), "with conf");
    write_file_bytes((dir.path / "p2.conf").string(), "0.42");

    auto backend = make_mock_ocr(mock_desc(BackendKind::ocr), dir.path);
    const OcrParams params;

    const OcrCandidate hit = ocr_recognize(*backend, page_input("p1"), params);
    CHECK(hit.text == "hello");
    CHECK(hit.confidence == 0.9);
    CHECK(hit.backend_id == "m");

    const OcrCandidate conf = ocr_recognize(*backend, page_input("p2"), params);
    CHECK(conf.text == "with conf");
    CHECK(conf.confidence == doctest::Approx(0.42));

    const OcrCandidate miss = ocr_recognize(*backend, page_input("nope"), params);
    CHECK(miss.text.empty());
    CHECK(miss.confidence == 0.0);

    const OcrCandidate blank = ocr_recognize(*backend, page_input("p1", 0), params);
    CHECK(blank.text.empty());
    CHECK(blank.confidence == 1.0);

    // Byte-identical on repeat.
    const OcrCandidate again = ocr_recognize(*backend, page_input("p1"), params);
    CHECK(again.text == hit.text);
    CHECK(again.confidence == hit.confidence);
}

TEST_CASE("mock sentiment: Laplace-smoothed lexicon counts") {
    auto backend = make_mock_sentiment(mock_desc(BackendKind::sentiment), demo_lexicon());

    const SentimentScores none = sentiment_classify(*backend, "nothing matches here");
    CHECK(none.negative == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(none.neutral == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(none.positive == doctest::Approx(1.0 / 3).epsilon(1e-12));

    const SentimentScores one_neg = sentiment_classify(*backend, "that was bad");
    CHECK(one_neg.negative == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(one_neg.neutral == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(one_neg.positive == doctest::Approx(0.25).epsilon(1e-12));

    const SentimentScores mixed =
        sentiment_classify(*backend, "bad awful but good and great");
    CHECK(mixed.negative == doctest::Approx(3.0 / 7).epsilon(1e-12));
    CHECK(mixed.neutral == doctest::Approx(1.0 / 7).epsilon(1e-12));
    CHECK(mixed.positive == doctest::Approx(3.0 / 7).epsilon(1e-12));

    // Case-insensitive whole-token matching: "badge" is not "bad".
    const SentimentScores tokens = sentiment_classify(*backend, "BAD badge");
    CHECK(tokens.negative == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("lexicon loading") {
    TempDir dir("lexicon");
    const auto path = dir.path / "lexicon.json";
    write_file_bytes(path.string(), R"({"negative": ["Bad"], "positive": ["GOOD"]})");
    const Lexicon lex = load_lexicon(path);
    CHECK(lex.negative.count("bad") == 1);
    CHECK(lex.positive.count("good") == 1);

    write_file_bytes(path.string(), "not json");
    CHECK_THROWS_AS(load_lexicon(path), ConfigError);
    write_file_bytes(path.string(), R"({"negative": "words"})");
    CHECK_THROWS_AS(load_lexicon(path), ConfigError);
}

TEST_CASE("empty text short-circuits to exact neutral") {
    auto backend = make_mock_sentiment(mock_desc(BackendKind::sentiment), demo_lexicon());
    const SentimentScores s = sentiment_classify(*backend, "");
    CHECK(s.negative == 0.0);
    CHECK(s.neutral == 1.0);
    CHECK(s.positive == 0.0);
}

TEST_CASE("chunk splitting: sentence boundaries, 512-scalar cap, hard split") {
    const std::string text = "First sentence. Second one! Third? Trailer without period";
    const auto chunks = split_sentiment_chunks(text, 20);
    REQUIRE(chunks.size() >= 3);
    std::string rejoined;
    for (const auto& c : chunks) rejoined += c;
    CHECK(rejoined == text);  // splitting never loses bytes

    // An unbreakable 1200-char sentence is hard-split at the cap.
    const std::string big(1200, 'x');
    const auto hard = split_sentiment_chunks(big, 512);
    REQUIRE(hard.size() == 3);
    CHECK(hard[0].size() == 512);
    CHECK(hard[1].size() == 512);
    CHECK(hard[2].size() == 176);

    CHECK(split_sentiment_chunks("", 512).empty());
}

TEST_CASE("chunked classification mean-pools the triples") {
    struct Alternating final : SentimentBackend {
        BackendDescriptor desc = mock_desc(BackendKind::sentiment, "alt");
        std::atomic<int> calls{0};
        const BackendDescriptor& descriptor() const override { return desc; }
        SentimentScores classify_chunk(const std::string&) override {
            return ++calls % 2 ? SentimentScores{0.2, 0.6, 0.2}
                               : SentimentScores{0.4, 0.4, 0.2};
        }
    } backend;

    // Two ~400-char sentences force exactly two chunks, one backend call each;
    // the mean of (0.2,0.6,0.2) and (0.4,0.4,0.2) is (0.3,0.5,0.2).
    const std::string sentence = std::string(399, 'a') + ". ";
    const std::string text = sentence + sentence;
    REQUIRE(split_sentiment_chunks(text).size() == 2);

    const SentimentScores s = sentiment_classify(backend, text);
    CHECK(backend.calls.load() == 2);
    CHECK(s.negative == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(s.neutral == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(s.positive == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(s.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("confidence outside [0,1] is clamped with a warning") {
    struct Overconfident final : OcrBackend {
        BackendDescriptor desc = mock_desc(BackendKind::ocr, "over");
        const BackendDescriptor& descriptor() const override { return desc; }
        OcrCandidate recognize(const OcrPageInput&, const OcrParams&) override {
            return OcrCandidate{"", "text", 1.7};
        }
    } backend;
    std::vector<std::string> warnings;
    const OcrCandidate c = ocr_recognize(backend, page_input("p"), OcrParams{}, &warnings);
    CHECK(c.confidence == 1.0);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("clamped") != std::string::npos);
}

TEST_CASE("HTTP OCR: wire format, params round-trip, malformed responses") {
    httplib::Server srv;
    json last_body;
    std::string reply = R"({"text": "from server", "confidence": 0.75})";
    srv.Post("/ocr", [&](const httplib::Request& req, httplib::Response& res) {
        last_body = json::parse(req.body);
        res.set_content(reply, "application/json");
    });
    const int port = srv.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread server([&] { srv.listen_after_bind(); });
    srv.wait_until_ready();

    BackendDescriptor desc{"http1", "http://127.0.0.1:" + std::to_string(port),
                           BackendKind::ocr, 0, 5000};
    auto backend = make_http_ocr(desc, 2);

    OcrPageInput input = page_input("student0_page_1");
    input.png = {1, 2, 3, 4, 5};
    OcrParams params;
    params.beam_width = 4;
    params.max_tokens = 256;

    const OcrCandidate cand = ocr_recognize(*backend, input, params);
    CHECK(cand.text == "from server");
    CHECK(cand.confidence == 0.75);
    CHECK(cand.backend_id == "http1");

    // Request body carries exactly the documented keys, bit-exact params.
    CHECK(last_body["image"] == base64_encode(input.png));
    CHECK(last_body["dpi"] == 300);
    CHECK(last_body["params"]["beam_width"] == 4);
    CHECK(last_body["params"]["max_tokens"] == 256);

    reply = "this is not json";
    CHECK_THROWS_AS(ocr_recognize(*backend, input, params), BackendUnavailable);
    reply = R"({"text": "x"})";  // missing confidence
    CHECK_THROWS_AS(ocr_recognize(*backend, input, params), BackendUnavailable);

    srv.stop();
    server.join();
}

TEST_CASE("HTTP sentiment: triple parsing and protocol errors") {
    httplib::Server srv;
    std::string reply = R"({"negative": 0.2, "neutral": 0.5, "positive": 0.3})";
    std::string seen_text;
    srv.Post("/sentiment", [&](const httplib::Request& req, httplib::Response& res) {
        seen_text = json::parse(req.body)["text"].get<std::string>();
        res.set_content(reply, "application/json");
    });
    const int port = srv.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread server([&] { srv.listen_after_bind(); });
    srv.wait_until_ready();

    BackendDescriptor desc{"sent1", "http://127.0.0.1:" + std::to_string(port),
                           BackendKind::sentiment, 0, 5000};
    auto backend = make_http_sentiment(desc, 2);

    const SentimentScores s = sentiment_classify(*backend, "some page text");
    CHECK(seen_text == "some page text");
    CHECK(s.negative == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(s.sum() == 1.0);

    // Sum far from 1 violates the protocol.
    reply = R"({"negative": 0.5, "neutral": 0.5, "positive": 0.5})";
    CHECK_THROWS_AS(sentiment_classify(*backend, "text"), BackendProtocolError);

    srv.stop();
    server.join();
}

TEST_CASE("unreachable endpoint raises BackendUnavailable within the timeout") {
    BackendDescriptor desc{"down", "http://127.0.0.1:9", BackendKind::ocr, 0, 2000};
    auto backend = make_http_ocr(desc, 1);
    const auto t0 = std::chrono::steady_clock::now();
    CHECK_THROWS_AS(ocr_recognize(*backend, page_input("p"), OcrParams{}), BackendUnavailable);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 2.5);
}
