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

// AVX2 variants of the pixel kernels. Compiled with -mavx2 on x86 only;
// callers reach them through avx2_table(), which checks CPU support at
// runtime. Must stay byte-identical to kernels_scalar.cpp on every input.

#include "inkscore/kernels.hpp"

#if defined(INKSCORE_X86)

#include <immintrin.h>

#include <cstring>
#include <vector>

namespace inkscore::kernels {
namespace {

// --- luma ------------------------------------------------------------------

// Planarize 16 interleaved RGB pixels (48 bytes) with the usual three-shuffle
// pattern. Index -1 zeroes the byte.
inline void deinterleave16(const uint8_t* p, __m128i& r, __m128i& g, __m128i& b) {
    const __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
    const __m128i m = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p + 16));
    const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p + 32));

    const __m128i ra = _mm_setr_epi8(0, 3, 6, 9, 12, 15, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
    const __m128i rb = _mm_setr_epi8(-1, -1, -1, -1, -1, -1, 2, 5, 8, 11, 14, -1, -1, -1, -1, -1);
    const __m128i rc = _mm_setr_epi8(-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 4, 7, 10, 13);

    const __m128i ga = _mm_setr_epi8(1, 4, 7, 10, 13, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
    const __m128i gb = _mm_setr_epi8(-1, -1, -1, -1, -1, 0, 3, 6, 9, 12, 15, -1, -1, -1, -1, -1);
    const __m128i gc = _mm_setr_epi8(-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 2, 5, 8, 11, 14);

    const __m128i ba = _mm_setr_epi8(2, 5, 8, 11, 14, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
    const __m128i bb = _mm_setr_epi8(-1, -1, -1, -1, -1, 1, 4, 7, 10, 13, -1, -1, -1, -1, -1, -1);
    const __m128i bc = _mm_setr_epi8(-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 3, 6, 9, 12, 15);

    r = _mm_or_si128(_mm_or_si128(_mm_shuffle_epi8(a, ra), _mm_shuffle_epi8(m, rb)),
                     _mm_shuffle_epi8(c, rc));
    g = _mm_or_si128(_mm_or_si128(_mm_shuffle_epi8(a, ga), _mm_shuffle_epi8(m, gb)),
                     _mm_shuffle_epi8(c, gc));
    b = _mm_or_si128(_mm_or_si128(_mm_shuffle_epi8(a, ba), _mm_shuffle_epi8(m, bb)),
                     _mm_shuffle_epi8(c, bc));
}

// Exact v / 1000 for v <= 255500: (v * 274877907) >> 38, the usual
// multiply-high reduction. Verified exhaustively in the kernel tests.
inline __m256i div1000_u32(__m256i v) {
    const __m256i magic = _mm256_set1_epi32(274877907);
    __m256i even = _mm256_mul_epu32(v, magic);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), magic);
    even = _mm256_srli_epi64(even, 38);
    odd = _mm256_srli_epi64(odd, 38);
    return _mm256_or_si256(even, _mm256_slli_epi64(odd, 32));
}

// 8 pixels: planar u8 (low 8 bytes of each xmm) -> 8 gray bytes.
inline void luma8(__m128i r8, __m128i g8, __m128i b8, uint8_t* out) {
    const __m256i r = _mm256_cvtepu8_epi32(r8);
    const __m256i g = _mm256_cvtepu8_epi32(g8);
    const __m256i b = _mm256_cvtepu8_epi32(b8);
    __m256i v = _mm256_mullo_epi32(r, _mm256_set1_epi32(299));
    v = _mm256_add_epi32(v, _mm256_mullo_epi32(g, _mm256_set1_epi32(587)));
    v = _mm256_add_epi32(v, _mm256_mullo_epi32(b, _mm256_set1_epi32(114)));
    v = _mm256_add_epi32(v, _mm256_set1_epi32(500));
    const __m256i q = div1000_u32(v);
    // Keep byte 0 of each 32-bit lane, 4 bytes per 128-bit half.
    const __m256i pick = _mm256_setr_epi8(0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1,
                                          -1, -1, -1, 0, 4, 8, 12, -1, -1, -1, -1, -1, -1,
                                          -1, -1, -1, -1, -1, -1);
    const __m256i packed = _mm256_shuffle_epi8(q, pick);
    const uint32_t lo = uint32_t(_mm256_extract_epi32(packed, 0));
    const uint32_t hi = uint32_t(_mm256_extract_epi32(packed, 4));
    std::memcpy(out, &lo, 4);
    std::memcpy(out + 4, &hi, 4);
}

void luma_avx2(const uint8_t* rgb, size_t n, uint8_t* gray) {
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m128i r, g, b;
        deinterleave16(rgb + 3 * i, r, g, b);
        luma8(r, g, b, gray + i);
        luma8(_mm_srli_si128(r, 8), _mm_srli_si128(g, 8), _mm_srli_si128(b, 8), gray + i + 8);
    }
    for (; i < n; ++i) {
        const uint32_t r = rgb[3 * i], g = rgb[3 * i + 1], b = rgb[3 * i + 2];
        gray[i] = uint8_t((299u * r + 587u * g + 114u * b + 500u) / 1000u);
    }
}

// --- threshold --------------------------------------------------------------

void threshold_avx2(const uint8_t* gray, size_t n, uint8_t t, uint8_t* mask) {
    const __m256i vt = _mm256_set1_epi8(char(t));
    const __m256i one = _mm256_set1_epi8(1);
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gray + i));
        // unsigned v <= t  <=>  min(v, t) == v
        const __m256i le = _mm256_cmpeq_epi8(_mm256_min_epu8(v, vt), v);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(mask + i), _mm256_and_si256(le, one));
    }
    for (; i < n; ++i) mask[i] = gray[i] <= t ? 1 : 0;
}

// --- 3x3 mask filters -------------------------------------------------------

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

// Column pass shared by median3/dilate3: per-pixel sum (or OR) of the three
// vertically adjacent rows, border rows replicated.
template <bool kSum>
inline void column_pass(const uint8_t* rm, const uint8_t* r0, const uint8_t* rp, int w,
                        uint8_t* col) {
    int x = 0;
    for (; x + 32 <= w; x += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rm + x));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r0 + x));
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rp + x));
        const __m256i v = kSum ? _mm256_add_epi8(_mm256_add_epi8(a, b), c)
                               : _mm256_or_si256(_mm256_or_si256(a, b), c);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(col + x), v);
    }
    for (; x < w; ++x)
        col[x] = kSum ? uint8_t(rm[x] + r0[x] + rp[x]) : uint8_t(rm[x] | r0[x] | rp[x]);
}

void median3_avx2(const uint8_t* in, int w, int h, uint8_t* out) {
    if (w < 34) {  // too narrow for the vector row pass
        scalar_table().median3(in, w, h, out);
        return;
    }
    std::vector<uint8_t> col(static_cast<size_t>(w));
    const __m256i four = _mm256_set1_epi8(4);
    const __m256i one = _mm256_set1_epi8(1);
    for (int y = 0; y < h; ++y) {
        const uint8_t* rm = in + size_t(clampi(y - 1, 0, h - 1)) * w;
        const uint8_t* r0 = in + size_t(y) * w;
        const uint8_t* rp = in + size_t(clampi(y + 1, 0, h - 1)) * w;
        column_pass<true>(rm, r0, rp, w, col.data());
        uint8_t* o = out + size_t(y) * w;
        o[0] = uint8_t(2 * col[0] + col[1] > 4 ? 1 : 0);
        int x = 1;
        for (; x + 32 <= w - 1; x += 32) {
            const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col.data() + x - 1));
            const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col.data() + x));
            const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col.data() + x + 1));
            const __m256i s = _mm256_add_epi8(_mm256_add_epi8(a, b), c);  // <= 9, signed-safe
            const __m256i m = _mm256_and_si256(_mm256_cmpgt_epi8(s, four), one);
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(o + x), m);
        }
        for (; x < w - 1; ++x) o[x] = uint8_t(col[x - 1] + col[x] + col[x + 1] > 4 ? 1 : 0);
        o[w - 1] = uint8_t(col[w - 2] + 2 * col[w - 1] > 4 ? 1 : 0);
    }
}

void dilate3_avx2(const uint8_t* in, int w, int h, uint8_t* out) {
    if (w < 34) {
        scalar_table().dilate3(in, w, h, out);
        return;
    }
    std::vector<uint8_t> col(static_cast<size_t>(w));
    for (int y = 0; y < h; ++y) {
        const uint8_t* rm = in + size_t(clampi(y - 1, 0, h - 1)) * w;
        const uint8_t* r0 = in + size_t(y) * w;
        const uint8_t* rp = in + size_t(clampi(y + 1, 0, h - 1)) * w;
        column_pass<false>(rm, r0, rp, w, col.data());
        uint8_t* o = out + size_t(y) * w;
        o[0] = uint8_t(col[0] | col[1]);
        int x = 1;
        for (; x + 32 <= w - 1; x += 32) {
            const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col.data() + x - 1));
            const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col.data() + x));
            const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col.data() + x + 1));
            const __m256i s = _mm256_or_si256(_mm256_or_si256(a, b), c);  // 0/1 stays 0/1
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(o + x), s);
        }
        for (; x < w - 1; ++x) o[x] = uint8_t(col[x - 1] | col[x] | col[x + 1]);
        o[w - 1] = uint8_t(col[w - 2] | col[w - 1]);
    }
}

}  // namespace

const KernelTable* avx2_table() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const KernelTable t{"avx2", luma_avx2, threshold_avx2, median3_avx2, dilate3_avx2};
    return &t;
}

}  // namespace inkscore::kernels

#endif  // INKSCORE_X86
