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

#include "inkscore/demo.hpp"

#include <algorithm>
#include <random>

namespace inkscore {

GrayImage make_synthetic_page(int width, int height, uint64_t seed, int text_rows) {
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(size_t(width) * size_t(height), 235);  // paper, slightly grey

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> word_len(width / 24, width / 8);
    std::uniform_int_distribution<int> gap_len(width / 40, width / 16);
    std::uniform_int_distribution<int> ink(10, 70);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);

    auto put = [&](int x, int y, uint8_t v) {
        if (x >= 0 && x < width && y >= 0 && y < height)
            img.pixels[size_t(y) * width + x] = v;
    };

    const int margin_y = std::max(2, height / 12);
    const int margin_x = std::max(2, width / 14);
    const int rows = std::max(1, text_rows);
    const int row_pitch = std::max(3, (height - 2 * margin_y) / rows);
    const int stroke = std::max(1, row_pitch / 4);

    for (int r = 0; r < rows; ++r) {
        const int base_y = margin_y + r * row_pitch + row_pitch / 2;
        int x = margin_x;
        while (x < width - margin_x) {
            const int len = word_len(rng);
            const int end = std::min(x + len, width - margin_x);
            for (int px = x; px < end; ++px) {
                const int wave = int(2.0 * jitter(rng));  // ragged baseline
                for (int s = 0; s < stroke; ++s) put(px, base_y + wave + s, uint8_t(ink(rng)));
                if (jitter(rng) < 0.15)  // ascender / descender
                    for (int s = 1; s <= stroke; ++s)
                        put(px, base_y + (jitter(rng) < 0.5 ? -s : stroke + s),
                            uint8_t(ink(rng)));
            }
            x = end + gap_len(rng);
        }
    }

    // Isolated specks the 3x3 median should remove.
    std::uniform_int_distribution<int> sx(0, width - 1), sy(0, height - 1);
    const int specks = width * height / 400;
    for (int i = 0; i < specks; ++i) put(sx(rng), sy(rng), uint8_t(ink(rng)));

    return img;
}

}  // namespace inkscore
