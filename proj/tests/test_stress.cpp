#include <doctest.h>

#include <cmath>
#include <random>

#include "inkscore/stress.hpp"

using namespace inkscore;

namespace {

// The reference sentiment triple and its expected outputs, used across the
// suite as the golden record.
const SentimentScores kGolden{0.05230807140469551, 0.8731970191001892, 0.07449495047330856};
constexpr double kGoldenEntropy = 0.4662059545516968;
constexpr double kGoldenStress = 0.2637971341609955;

SentimentScores random_simplex(std::mt19937& rng) {
    std::exponential_distribution<double> e(1.0);
    double a = e(rng), b = e(rng), c = e(rng);
    const double s = a + b + c;
    return SentimentScores{a / s, b / s, c / s};
}

}  // namespace

TEST_CASE("golden record: entropy and stress reproduce to 1e-9") {
    CHECK(std::abs(shannon_entropy(kGolden) - kGoldenEntropy) < 1e-9);
    CHECK(std::abs(stress_index(kGolden) - kGoldenStress) < 1e-9);
}

TEST_CASE("closed-form fusion table") {
    CHECK(shannon_entropy(SentimentScores{1, 0, 0}) == 0.0);
    CHECK(stress_index(SentimentScores{1, 0, 0}) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(stress_index(SentimentScores{0, 1, 0}) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(stress_index(SentimentScores{0, 0, 1}) == 0.0);

    const SentimentScores uniform{1.0 / 3, 1.0 / 3, 1.0 / 3};
    CHECK(std::abs(shannon_entropy(uniform) - std::log(3.0)) < 1e-12);
    // 0.2 + 0.3 ln 3 + 0.1 (1 - 1/3)
    const double expected = 0.6 / 3 + 0.3 * std::log(3.0) + 0.1 * (1.0 - 1.0 / 3);
    CHECK(std::abs(stress_index(uniform) - expected) < 1e-12);
    CHECK(stress_index(uniform) == doctest::Approx(0.5962504).epsilon(1e-6));
}

TEST_CASE("classification threshold is strict") {
    CHECK(classify_stress(kGoldenStress) == StressClass::low);
    CHECK(classify_stress(0.31) == StressClass::high);
    CHECK(classify_stress(0.30) == StressClass::low);
    CHECK(classify_stress(0.6, 0.7) == StressClass::low);  // configurable threshold
}

TEST_CASE("build_record examples") {
    const PageStressRecord golden = build_record("student0_page_2", kGolden);
    CHECK(golden.student == "student0_page_2");
    CHECK(std::abs(golden.entropy - kGoldenEntropy) < 1e-9);
    CHECK(std::abs(golden.stress_index - kGoldenStress) < 1e-9);

    const PageStressRecord neutral = build_record("x_page_1", SentimentScores{0, 1, 0});
    CHECK(neutral.entropy == 0.0);
    CHECK(neutral.stress_index == doctest::Approx(0.1).epsilon(1e-12));

    const PageStressRecord negative = build_record("x_page_1", SentimentScores{1, 0, 0});
    CHECK(negative.entropy == 0.0);
    CHECK(negative.stress_index == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("records re-derive from their own sentiment to 1e-12") {
    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
        const SentimentScores s = random_simplex(rng);
        const PageStressRecord rec = build_record("a_page_1", s);
        CHECK(std::abs(rec.stress_index - stress_index(rec.sentiment)) < 1e-12);
        CHECK(std::abs(rec.entropy - shannon_entropy(rec.sentiment)) < 1e-12);
    }
}

TEST_CASE("entropy is non-negative, permutation-invariant, maximal at uniform") {
    const double h_uniform = shannon_entropy(SentimentScores{1.0 / 3, 1.0 / 3, 1.0 / 3});
    std::mt19937 rng(31337);
    for (int i = 0; i < 1000; ++i) {
        const SentimentScores s = random_simplex(rng);
        const double h = shannon_entropy(s);
        CHECK(h >= 0.0);
        CHECK(h <= h_uniform + 1e-12);
        const double h_perm1 = shannon_entropy(SentimentScores{s.neutral, s.positive, s.negative});
        const double h_perm2 = shannon_entropy(SentimentScores{s.positive, s.negative, s.neutral});
        CHECK(h == doctest::Approx(h_perm1).epsilon(1e-15));
        CHECK(h == doctest::Approx(h_perm2).epsilon(1e-15));
    }
}

TEST_CASE("raw stress range over the simplex grid and the clamp") {
    double max_raw = 0.0;
    const StressWeights w;
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j + i <= 100; ++j) {
            const double neg = i / 100.0, pos = j / 100.0;
            const SentimentScores s{neg, 1.0 - neg - pos, pos};
            const double raw =
                w.w_neg * s.negative + w.w_entropy * shannon_entropy(s) +
                w.w_posdef * (1.0 - s.positive);
            max_raw = std::max(max_raw, raw);
            bool clamped = false;
            const double out = stress_index(s, w, &clamped);
            CHECK(out >= 0.0);
            CHECK(out <= 1.0);
            CHECK(clamped == (raw > 1.0));
            if (!clamped) CHECK(out == doctest::Approx(raw).epsilon(1e-15));
        }
    }
    CHECK(max_raw > 1.0);      // the formula does overshoot 1
    CHECK(max_raw <= 1.0297);  // but never beyond 0.6 + 0.3 ln3 + 0.1
}
