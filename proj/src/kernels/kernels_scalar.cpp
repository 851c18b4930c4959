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

#include <algorithm>

#include "inkscore/kernels.hpp"

namespace inkscore::kernels {
namespace {

void luma_scalar(const uint8_t* rgb, size_t n, uint8_t* gray) {
    for (size_t i = 0; i < n; ++i) {
        const uint32_t r = rgb[3 * i];
        const uint32_t g = rgb[3 * i + 1];
        const uint32_t b = rgb[3 * i + 2];
        gray[i] = uint8_t((299u * r + 587u * g + 114u * b + 500u) / 1000u);
    }
}

void threshold_scalar(const uint8_t* gray, size_t n, uint8_t t, uint8_t* mask) {
    for (size_t i = 0; i < n; ++i) mask[i] = gray[i] <= t ? 1 : 0;
}

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

void median3_scalar(const uint8_t* in, int w, int h, uint8_t* out) {
    for (int y = 0; y < h; ++y) {
        const uint8_t* rm = in + size_t(clampi(y - 1, 0, h - 1)) * w;
        const uint8_t* r0 = in + size_t(y) * w;
        const uint8_t* rp = in + size_t(clampi(y + 1, 0, h - 1)) * w;
        uint8_t* o = out + size_t(y) * w;
        for (int x = 0; x < w; ++x) {
            const int xm = clampi(x - 1, 0, w - 1);
            const int xp = clampi(x + 1, 0, w - 1);
            const int sum = rm[xm] + rm[x] + rm[xp] + r0[xm] + r0[x] + r0[xp] + rp[xm] +
                            rp[x] + rp[xp];
            o[x] = sum > 4 ? 1 : 0;
        }
    }
}

void dilate3_scalar(const uint8_t* in, int w, int h, uint8_t* out) {
    for (int y = 0; y < h; ++y) {
        const uint8_t* rm = in + size_t(clampi(y - 1, 0, h - 1)) * w;
        const uint8_t* r0 = in + size_t(y) * w;
        const uint8_t* rp = in + size_t(clampi(y + 1, 0, h - 1)) * w;
        uint8_t* o = out + size_t(y) * w;
        for (int x = 0; x < w; ++x) {
            const int xm = clampi(x - 1, 0, w - 1);
            const int xp = clampi(x + 1, 0, w - 1);
            const int any = rm[xm] | rm[x] | rm[xp] | r0[xm] | r0[x] | r0[xp] | rp[xm] |
                            rp[x] | rp[xp];
            o[x] = any ? 1 : 0;
        }
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{"scalar", luma_scalar, threshold_scalar, median3_scalar,
                               dilate3_scalar};
    return t;
}

}  // namespace inkscore::kernels
