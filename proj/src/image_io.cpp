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

#include "inkscore/image_io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "inkscore/errors.hpp"
#include "inkscore/util.hpp"

namespace inkscore {
namespace {

DecodedImage from_mat(cv::Mat mat, const std::string& origin) {
    if (mat.empty()) throw DocumentError("cannot decode image: " + origin);
    if (mat.depth() != CV_8U) {
        cv::Mat tmp;
        mat.convertTo(tmp, CV_8U);  // 16-bit scanner output
        mat = tmp;
    }
    DecodedImage out;
    out.width = mat.cols;
    out.height = mat.rows;
    const int ch = mat.channels();
    if (ch == 1) {
        out.channels = 1;
        out.pixels.resize(size_t(mat.cols) * mat.rows);
        for (int y = 0; y < mat.rows; ++y)
            std::copy_n(mat.ptr<uint8_t>(y), mat.cols, out.pixels.data() + size_t(y) * mat.cols);
    } else if (ch == 3 || ch == 4) {
        out.channels = 3;
        out.pixels.resize(size_t(mat.cols) * mat.rows * 3);
        for (int y = 0; y < mat.rows; ++y) {
            const uint8_t* src = mat.ptr<uint8_t>(y);
            uint8_t* dst = out.pixels.data() + size_t(y) * mat.cols * 3;
            for (int x = 0; x < mat.cols; ++x) {
                // OpenCV is BGR(A); drop alpha, emit RGB.
                dst[3 * x] = src[ch * x + 2];
                dst[3 * x + 1] = src[ch * x + 1];
                dst[3 * x + 2] = src[ch * x];
            }
        }
    } else {
        throw DocumentError("unsupported channel count " + std::to_string(ch) + ": " + origin);
    }
    return out;
}

}  // namespace

DecodedImage decode_image_file(const std::string& path) {
    cv::Mat mat = cv::imread(path, cv::IMREAD_UNCHANGED);
    return from_mat(std::move(mat), path);
}

DecodedImage decode_image_bytes(const uint8_t* data, size_t len) {
    cv::Mat buf(1, int(len), CV_8UC1, const_cast<uint8_t*>(data));
    cv::Mat mat = cv::imdecode(buf, cv::IMREAD_UNCHANGED);
    return from_mat(std::move(mat), "<memory>");
}

std::vector<uint8_t> encode_png(int width, int height, int channels, const uint8_t* pixels) {
    cv::Mat mat;
    if (channels == 1) {
        mat = cv::Mat(height, width, CV_8UC1, const_cast<uint8_t*>(pixels)).clone();
    } else {
        mat = cv::Mat(height, width, CV_8UC3);
        for (int y = 0; y < height; ++y) {
            const uint8_t* src = pixels + size_t(y) * width * 3;
            uint8_t* dst = mat.ptr<uint8_t>(y);
            for (int x = 0; x < width; ++x) {
                dst[3 * x] = src[3 * x + 2];
                dst[3 * x + 1] = src[3 * x + 1];
                dst[3 * x + 2] = src[3 * x];
            }
        }
    }
    std::vector<uint8_t> out;
    if (!cv::imencode(".png", mat, out)) throw std::runtime_error("PNG encoding failed");
    return out;
}

std::vector<uint8_t> encode_png(const GrayImage& img) {
    return encode_png(img.width, img.height, 1, img.pixels.data());
}

std::vector<uint8_t> encode_jpeg(const GrayImage& img, int quality) {
    cv::Mat mat(img.height, img.width, CV_8UC1, const_cast<uint8_t*>(img.pixels.data()));
    std::vector<uint8_t> out;
    const std::vector<int> params{cv::IMWRITE_JPEG_QUALITY, quality};
    if (!cv::imencode(".jpg", mat, out, params)) throw std::runtime_error("JPEG encoding failed");
    return out;
}

std::vector<uint8_t> encode_png(const BinaryImage& img) {
    std::vector<uint8_t> bytes(img.mask.size());
    for (size_t i = 0; i < img.mask.size(); ++i) bytes[i] = img.mask[i] ? 0 : 255;
    return encode_png(img.width, img.height, 1, bytes.data());
}

void write_png_file(const std::string& path, const std::vector<uint8_t>& png_bytes) {
    write_file_bytes(path, std::string_view(reinterpret_cast<const char*>(png_bytes.data()),
                                            png_bytes.size()));
}

}  // namespace inkscore
