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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace inkscore {

/// One rasterized script page. Pixels are row-major, 8 bits per channel,
/// interleaved RGB when channels == 3, luminance when channels == 1.
struct PageImage {
    std::string student_id;
    int page_index = 1;  // 1-based
    int dpi = 300;
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<uint8_t> pixels;

    size_t pixel_count() const { return size_t(width) * size_t(height); }
    bool valid() const {
        return width > 0 && height > 0 && dpi > 0 && page_index >= 1 &&
               (channels == 1 || channels == 3) &&
               pixels.size() == pixel_count() * size_t(channels);
    }
};

/// 8-bit intensities, 0 = black ink, 255 = white paper.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;

    size_t pixel_count() const { return size_t(width) * size_t(height); }
    bool valid() const { return width > 0 && height > 0 && pixels.size() == pixel_count(); }
};

/// Ink mask; 1 = ink (foreground), 0 = paper.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> mask;

    size_t pixel_count() const { return size_t(width) * size_t(height); }
    bool valid() const { return width > 0 && height > 0 && mask.size() == pixel_count(); }
    size_t ink_count() const;
    double ink_fraction() const;
};

}  // namespace inkscore
