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

#include "inkscore/image.hpp"

namespace inkscore {

struct PreprocessConfig {
    bool contrast_stretch = true;
    int median_kernel = 3;       // odd, >= 1
    int dilation_kernel = 3;     // odd, >= 1
    int dilation_iterations = 1; // >= 0

    bool valid() const {
        return median_kernel >= 1 && median_kernel % 2 == 1 && median_kernel <= 99 &&
               dilation_kernel >= 1 && dilation_kernel % 2 == 1 && dilation_kernel <= 99 &&
               dilation_iterations >= 0;
    }
};

/// RGB pages map through the integer luma (299 R + 587 G + 114 B + 500) / 1000
/// (decimal-exact round-half-up); grayscale pages copy through.
/// Throws PreprocessError naming the page label on unsupported channel counts.
GrayImage to_grayscale(const PageImage& img);

/// Linear min-max stretch to [0, 255], round-half-up. A constant image is
/// returned unchanged.
GrayImage stretch_contrast(const GrayImage& img);

/// Global threshold maximizing between-class variance over the 256-bin
/// histogram; ties resolve to the smallest t. The downstream ink rule is
/// intensity <= t. Comparisons are exact integer rationals for images below
/// 2^27 pixels (long double beyond that).
int otsu_threshold(const GrayImage& img);

/// mask[i] = pixels[i] <= otsu_threshold(img).
BinaryImage binarize(const GrayImage& img);

/// Majority vote over a k x k window with replicated borders. k == 1 is the
/// identity.
BinaryImage median_filter(const BinaryImage& img, int kernel);

/// `iterations` rounds of dilation by a k x k all-ones structuring element.
/// Ink count never decreases.
BinaryImage dilate(const BinaryImage& img, int kernel, int iterations);

/// Median filter, then dilation rounds, per the config.
BinaryImage enhance(const BinaryImage& img, const PreprocessConfig& cfg);

/// Full chain: grayscale -> optional stretch -> binarize -> enhance.
BinaryImage preprocess_page(const PageImage& page, const PreprocessConfig& cfg);

}  // namespace inkscore
