#include <doctest.h>

#include <string>

#include "inkscore/json_writer.hpp"
#include "inkscore/util.hpp"

using namespace inkscore;

TEST_CASE("base64 known vectors") {
    auto enc = [](const std::string& s) {
        return base64_encode(reinterpret_cast<const uint8_t*>(s.data()), s.size());
    };
    CHECK(enc("") == "");
    CHECK(enc("f") == "Zg==");
    CHECK(enc("fo") == "Zm8=");
    CHECK(enc("foo") == "Zm9v");
    CHECK(enc("foobar") == "Zm9vYmFy");
}

TEST_CASE("utf8 decoding counts scalars, not bytes") {
    CHECK(utf8_to_scalars("abc").size() == 3);
    CHECK(utf8_to_scalars("\xC3\xA9") == std::vector<char32_t>{0xE9});  // e-acute
    CHECK(utf8_to_scalars("a\xE2\x82\xACz").size() == 3);               // euro sign
    // A stray continuation byte degrades to one scalar instead of throwing.
    CHECK(utf8_to_scalars("\x80").size() == 1);
    CHECK(utf8_to_scalars("a\xC3").size() == 2);  // truncated tail
}

TEST_CASE("double_shortest round-trips") {
    for (double v : {0.05230807140469551, 0.8731970191001892, 0.2637971341609955, 0.0, 1.0,
                     1.0 / 3.0, 1e-7}) {
        const std::string s = double_shortest(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(double_shortest(0.05230807140469551) == "0.05230807140469551");
}

TEST_CASE("double_fixed10 trims trailing zeros") {
    CHECK(double_fixed10(0.2637971341609955) == "0.2637971342");
    CHECK(double_fixed10(0.05230807140469551) == "0.0523080714");
    CHECK(double_fixed10(0.8731970191001892) == "0.8731970191");
    CHECK(double_fixed10(0.07449495047330856) == "0.0744949505");
    CHECK(double_fixed10(0.25) == "0.25");
    CHECK(double_fixed10(0.0) == "0");
    CHECK(double_fixed10(1.0) == "1");
}

TEST_CASE("tokenizers") {
    CHECK(tokenize_words("I can't, really!") ==
          std::vector<std::string>{"i", "can", "t", "really"});
    CHECK(split_whitespace("  a b\tc \n") == std::vector<std::string>{"a", "b", "c"});
    CHECK(split_whitespace("").empty());
}

TEST_CASE("round_half_up") {
    CHECK(round_half_up(2480.315) == 2480);
    CHECK(round_half_up(3507.874) == 3508);
    CHECK(round_half_up(2.5) == 3);
    CHECK(round_half_up(76.245) == 76);
}

TEST_CASE("json writer escaping and shape") {
    JsonWriter w;
    w.begin_object();
    w.key("a").value("x\"y\\z\n");
    w.key("b").begin_array().value(1).value(true).end_array();
    w.key("c").begin_object().end_object();
    w.end_object();
    CHECK(w.str() ==
          "{\n  \"a\": \"x\\\"y\\\\z\\n\",\n  \"b\": [\n    1,\n    true\n  ],\n  \"c\": {}\n}\n");
}
