#include <doctest.h>

#include <random>
#include <vector>

#include "inkscore/kernels.hpp"

using namespace inkscore;

namespace {

// Independent integer oracle for the luma formula (decimal round-half-up).
uint8_t luma_oracle(int r, int g, int b) {
    const int64_t scaled = int64_t(299) * r + int64_t(587) * g + int64_t(114) * b;
    const int64_t q = scaled / 1000;
    const int64_t rem = scaled % 1000;
    return uint8_t(rem >= 500 ? q + 1 : q);
}

std::vector<uint8_t> random_bytes(size_t n, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(0, 255);
    std::vector<uint8_t> out(n);
    for (auto& b : out) b = uint8_t(d(rng));
    return out;
}

std::vector<uint8_t> random_mask(size_t n, uint32_t seed, double p_ink = 0.3) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution d(p_ink);
    std::vector<uint8_t> out(n);
    for (auto& b : out) b = d(rng) ? 1 : 0;
    return out;
}

}  // namespace

TEST_CASE("scalar luma matches the independent integer oracle") {
    const auto& k = kernels::scalar_table();
    // Every gray axis value plus exact-half cases like (0,0,250) -> 28.5 -> 29.
    std::vector<uint8_t> rgb;
    std::vector<uint8_t> expect;
    for (int v = 0; v < 256; ++v) {
        rgb.insert(rgb.end(), {uint8_t(v), uint8_t(v), uint8_t(v)});
        expect.push_back(uint8_t(v));  // luma of gray is the identity (299+587+114=1000)
    }
    std::vector<uint8_t> got(expect.size());
    k.luma_rgb(rgb.data(), expect.size(), got.data());
    CHECK(got == expect);

    CHECK([&] {
        uint8_t out;
        const uint8_t px[3] = {255, 0, 0};
        k.luma_rgb(px, 1, &out);
        return out;
    }() == 76);
    CHECK(luma_oracle(255, 0, 0) == 76);

    // Exact .5 remainder must round up, which double arithmetic gets wrong.
    uint8_t out;
    const uint8_t half[3] = {0, 0, 250};
    k.luma_rgb(half, 1, &out);
    CHECK(out == 29);
    CHECK(luma_oracle(0, 0, 250) == 29);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(0, 255);
    for (int i = 0; i < 20000; ++i) {
        const uint8_t px[3] = {uint8_t(d(rng)), uint8_t(d(rng)), uint8_t(d(rng))};
        k.luma_rgb(px, 1, &out);
        CHECK(out == luma_oracle(px[0], px[1], px[2]));
    }
}

TEST_CASE("every available kernel table is byte-identical to scalar") {
    const auto tables = kernels::available_tables();
    REQUIRE(!tables.empty());
    const auto& ref = kernels::scalar_table();

    // Sweep awkward sizes around the vector widths, plus a big buffer.
    const std::vector<std::pair<int, int>> shapes = {
        {1, 1},  {2, 3},   {5, 4},   {31, 2}, {32, 2},  {33, 3},  {34, 5},
        {47, 9}, {64, 16}, {65, 17}, {257, 6}, {128, 64}};

    for (const auto* table : tables) {
        CAPTURE(table->name);
        uint32_t seed = 100;
        for (const auto& [w, h] : shapes) {
            const size_t n = size_t(w) * h;
            const auto rgb = random_bytes(3 * n, seed++);
            std::vector<uint8_t> a(n), b(n);
            ref.luma_rgb(rgb.data(), n, a.data());
            table->luma_rgb(rgb.data(), n, b.data());
            CHECK(a == b);

            const auto gray = random_bytes(n, seed++);
            for (uint8_t t : {0, 1, 127, 200, 255}) {
                ref.threshold_le(gray.data(), n, t, a.data());
                table->threshold_le(gray.data(), n, t, b.data());
                CHECK(a == b);
            }

            const auto mask = random_mask(n, seed++);
            ref.median3(mask.data(), w, h, a.data());
            table->median3(mask.data(), w, h, b.data());
            CHECK(a == b);

            ref.dilate3(mask.data(), w, h, a.data());
            table->dilate3(mask.data(), w, h, b.data());
            CHECK(a == b);
        }
    }
}

TEST_CASE("luma equivalence over the full 24-bit color cube") {
    const auto tables = kernels::available_tables();
    if (tables.size() < 2) return;  // scalar-only machine; nothing to compare

    constexpr size_t n = size_t(1) << 24;
    std::vector<uint8_t> rgb(3 * n);
    size_t i = 0;
    for (int r = 0; r < 256; ++r)
        for (int g = 0; g < 256; ++g)
            for (int b = 0; b < 256; ++b) {
                rgb[i++] = uint8_t(r);
                rgb[i++] = uint8_t(g);
                rgb[i++] = uint8_t(b);
            }
    std::vector<uint8_t> ref(n), got(n);
    kernels::scalar_table().luma_rgb(rgb.data(), n, ref.data());
    for (const auto* table : tables) {
        if (table == &kernels::scalar_table()) continue;
        CAPTURE(table->name);
        table->luma_rgb(rgb.data(), n, got.data());
        CHECK(ref == got);
    }
}

TEST_CASE("dispatch honors INKSCORE_KERNELS and always returns something") {
    const auto& active = kernels::active_table();
    CHECK(active.luma_rgb != nullptr);
    CHECK(active.median3 != nullptr);
}
