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

#include <cstdint>
#include <string>
#include <vector>

#include "inkscore/image.hpp"

namespace inkscore {

/// Raw decoded raster, RGB interleaved when channels == 3.
struct DecodedImage {
    int width = 0;
    int height = 0;
    int channels = 1;  // 1 or 3
    std::vector<uint8_t> pixels;
};

/// Decodes PNG/JPEG/TIFF files. Alpha is dropped. Throws DocumentError when
/// the file cannot be decoded.
DecodedImage decode_image_file(const std::string& path);

/// Same, from an in-memory buffer (JPEG streams embedded in PDFs).
DecodedImage decode_image_bytes(const uint8_t* data, size_t len);

/// Lossless PNG encoding; input is gray (1) or RGB (3) interleaved.
std::vector<uint8_t> encode_png(int width, int height, int channels, const uint8_t* pixels);

std::vector<uint8_t> encode_png(const GrayImage& img);

/// JPEG encoding (DCTDecode fixtures and synthetic scans).
std::vector<uint8_t> encode_jpeg(const GrayImage& img, int quality = 90);

/// Mask rendered as a 0/255 grayscale PNG (ink black).
std::vector<uint8_t> encode_png(const BinaryImage& img);

void write_png_file(const std::string& path, const std::vector<uint8_t>& png_bytes);

}  // namespace inkscore
