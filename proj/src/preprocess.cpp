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

#include "inkscore/preprocess.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "inkscore/errors.hpp"
#include "inkscore/ingest.hpp"
#include "inkscore/kernels.hpp"

namespace inkscore {
namespace {

constexpr size_t kExactOtsuLimit = size_t(1) << 27;  // pixel count bound for int paths

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

// 192-bit product for exact cross-multiplied fraction comparison.
struct U192 {
    uint64_t hi = 0, mid = 0, lo = 0;
};

inline U192 mul_u128_u64(unsigned __int128 a, uint64_t b) {
    const uint64_t alo = uint64_t(a);
    const uint64_t ahi = uint64_t(a >> 64);
    const unsigned __int128 p0 = (unsigned __int128)alo * b;
    const unsigned __int128 p1 = (unsigned __int128)ahi * b + uint64_t(p0 >> 64);
    return U192{uint64_t(p1 >> 64), uint64_t(p1), uint64_t(p0)};
}

inline bool less_u192(const U192& a, const U192& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    if (a.mid != b.mid) return a.mid < b.mid;
    return a.lo < b.lo;
}

std::array<uint64_t, 256> histogram256(const GrayImage& img) {
    // Four sub-tables dodge the store-to-load dependency on repeated bins.
    std::array<std::array<uint32_t, 256>, 4> sub{};
    const uint8_t* p = img.pixels.data();
    const size_t n = img.pixels.size();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        sub[0][p[i]]++;
        sub[1][p[i + 1]]++;
        sub[2][p[i + 2]]++;
        sub[3][p[i + 3]]++;
    }
    for (; i < n; ++i) sub[0][p[i]]++;
    std::array<uint64_t, 256> h{};
    for (int v = 0; v < 256; ++v)
        h[v] = uint64_t(sub[0][v]) + sub[1][v] + sub[2][v] + sub[3][v];
    return h;
}

}  // namespace

GrayImage to_grayscale(const PageImage& img) {
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.resize(img.pixel_count());
    if (img.channels == 1) {
        std::memcpy(out.pixels.data(), img.pixels.data(), img.pixels.size());
    } else if (img.channels == 3) {
        kernels::active_table().luma_rgb(img.pixels.data(), img.pixel_count(),
                                         out.pixels.data());
    } else {
        throw PreprocessError("unsupported channel count " + std::to_string(img.channels) +
                              " on page " + page_label(img.student_id, img.page_index));
    }
    return out;
}

GrayImage stretch_contrast(const GrayImage& img) {
    const auto [mn_it, mx_it] = std::minmax_element(img.pixels.begin(), img.pixels.end());
    if (img.pixels.empty() || *mn_it == *mx_it) return img;
    const int mn = *mn_it;
    const int range = *mx_it - mn;
    std::array<uint8_t, 256> lut{};
    for (int v = mn; v <= mn + range; ++v)
        lut[v] = uint8_t(((v - mn) * 255 * 2 + range) / (2 * range));  // round-half-up
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.resize(img.pixels.size());
    std::transform(img.pixels.begin(), img.pixels.end(), out.pixels.begin(),
                   [&lut](uint8_t v) { return lut[v]; });
    return out;
}

int otsu_threshold(const GrayImage& img) {
    if (!img.valid()) throw PreprocessError("otsu_threshold on empty image");
    const auto h = histogram256(img);
    const uint64_t n = img.pixel_count();

    uint64_t total_sum = 0;
    for (int v = 0; v < 256; ++v) total_sum += h[v] * uint64_t(v);

    // Between-class variance at threshold t is proportional to
    // (s0*n1 - s1*n0)^2 / (n0*n1); compare those fractions exactly.
    int best_t = 0;
    unsigned __int128 best_num = 0;
    uint64_t best_den = 1;
    long double best_ld = 0.0L;
    const bool exact = n < kExactOtsuLimit;

    uint64_t n0 = 0, s0 = 0;
    for (int t = 0; t < 256; ++t) {
        n0 += h[t];
        s0 += h[t] * uint64_t(t);
        const uint64_t n1 = n - n0;
        if (n0 == 0 || n1 == 0) continue;  // variance 0, never beats the t=0 seed
        const uint64_t s1 = total_sum - s0;
        if (exact) {
            const __int128 d = (__int128)s0 * n1 - (__int128)s1 * n0;
            const unsigned __int128 num = (unsigned __int128)(d < 0 ? -d : d) *
                                          (unsigned __int128)(d < 0 ? -d : d);
            const uint64_t den = n0 * n1;
            // num/den > best_num/best_den  <=>  num*best_den > best_num*den
            if (less_u192(mul_u128_u64(best_num, den), mul_u128_u64(num, best_den))) {
                best_num = num;
                best_den = den;
                best_t = t;
            }
        } else {
            const long double d = (long double)s0 * n1 - (long double)s1 * n0;
            const long double val = d * d / ((long double)n0 * n1);
            if (val > best_ld) {
                best_ld = val;
                best_t = t;
            }
        }
    }
    return best_t;
}

BinaryImage binarize(const GrayImage& img) {
    const int t = otsu_threshold(img);
    BinaryImage out;
    out.width = img.width;
    out.height = img.height;
    out.mask.resize(img.pixel_count());
    kernels::active_table().threshold_le(img.pixels.data(), img.pixels.size(), uint8_t(t),
                                         out.mask.data());
    return out;
}

BinaryImage median_filter(const BinaryImage& img, int kernel) {
    if (kernel == 1) return img;
    BinaryImage out;
    out.width = img.width;
    out.height = img.height;
    out.mask.resize(img.pixel_count());
    if (kernel == 3) {
        kernels::active_table().median3(img.mask.data(), img.width, img.height,
                                        out.mask.data());
        return out;
    }
    const int w = img.width, h = img.height, r = kernel / 2;
    // Separable window counts; borders replicate.
    std::vector<uint16_t> hsum(img.pixel_count());
    for (int y = 0; y < h; ++y) {
        const uint8_t* row = img.mask.data() + size_t(y) * w;
        uint16_t* hrow = hsum.data() + size_t(y) * w;
        for (int x = 0; x < w; ++x) {
            uint16_t acc = 0;
            for (int dx = -r; dx <= r; ++dx) acc += row[clampi(x + dx, 0, w - 1)];
            hrow[x] = acc;
        }
    }
    const uint32_t half = uint32_t(kernel) * uint32_t(kernel) / 2;
    for (int y = 0; y < h; ++y) {
        uint8_t* orow = out.mask.data() + size_t(y) * w;
        for (int x = 0; x < w; ++x) {
            uint32_t acc = 0;
            for (int dy = -r; dy <= r; ++dy)
                acc += hsum[size_t(clampi(y + dy, 0, h - 1)) * w + x];
            orow[x] = acc > half ? 1 : 0;
        }
    }
    return out;
}

BinaryImage dilate(const BinaryImage& img, int kernel, int iterations) {
    if (kernel == 1 || iterations == 0) return img;
    BinaryImage cur = img;
    for (int it = 0; it < iterations; ++it) {
        BinaryImage next;
        next.width = cur.width;
        next.height = cur.height;
        next.mask.resize(cur.pixel_count());
        if (kernel == 3) {
            kernels::active_table().dilate3(cur.mask.data(), cur.width, cur.height,
                                            next.mask.data());
        } else {
            const int w = cur.width, h = cur.height, r = kernel / 2;
            std::vector<uint8_t> hor(cur.pixel_count());
            for (int y = 0; y < h; ++y) {
                const uint8_t* row = cur.mask.data() + size_t(y) * w;
                uint8_t* hrow = hor.data() + size_t(y) * w;
                for (int x = 0; x < w; ++x) {
                    uint8_t any = 0;
                    for (int dx = -r; dx <= r && !any; ++dx)
                        any = row[clampi(x + dx, 0, w - 1)];
                    hrow[x] = any;
                }
            }
            for (int y = 0; y < h; ++y) {
                uint8_t* orow = next.mask.data() + size_t(y) * w;
                for (int x = 0; x < w; ++x) {
                    uint8_t any = 0;
                    for (int dy = -r; dy <= r && !any; ++dy)
                        any = hor[size_t(clampi(y + dy, 0, h - 1)) * w + x];
                    orow[x] = any;
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

BinaryImage enhance(const BinaryImage& img, const PreprocessConfig& cfg) {
    if (!cfg.valid()) throw PreprocessError("invalid preprocess config");
    BinaryImage denoised = median_filter(img, cfg.median_kernel);
    return dilate(denoised, cfg.dilation_kernel, cfg.dilation_iterations);
}

BinaryImage preprocess_page(const PageImage& page, const PreprocessConfig& cfg) {
    GrayImage gray = to_grayscale(page);
    if (cfg.contrast_stretch) gray = stretch_contrast(gray);
    return enhance(binarize(gray), cfg);
}

}  // namespace inkscore
