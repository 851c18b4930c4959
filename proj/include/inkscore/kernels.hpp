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
#include <vector>

namespace inkscore::kernels {

// Data-parallel pixel kernels behind the preprocessing stage. Every entry has
// a scalar reference implementation; wider variants must be byte-identical to
// it on all inputs (enforced by the equivalence tests). Dispatch picks the
// widest variant the CPU supports once per process.
//
// Conventions shared by all implementations:
//  * luma: interleaved RGB -> gray, Y = (299 R + 587 G + 114 B + 500) / 1000
//    in integer arithmetic (decimal-exact round-half-up).
//  * threshold_le: mask[i] = (gray[i] <= t) ? 1 : 0.
//  * median3 / dilate3: 3x3 window on a 0/1 mask with replicated (index-
//    clamped) borders; median is the majority of the 9 samples, dilate the OR.
//    Outputs are 0/1. In-place operation (out == in) is not supported.
struct KernelTable {
    const char* name;
    void (*luma_rgb)(const uint8_t* rgb, size_t pixel_count, uint8_t* gray);
    void (*threshold_le)(const uint8_t* gray, size_t count, uint8_t t, uint8_t* mask);
    void (*median3)(const uint8_t* mask, int width, int height, uint8_t* out);
    void (*dilate3)(const uint8_t* mask, int width, int height, uint8_t* out);
};

/// Portable reference implementation; the ground truth for equivalence tests.
const KernelTable& scalar_table();

/// AVX2 variant, or nullptr when unsupported (not compiled in, or the CPU
/// lacks AVX2).
const KernelTable* avx2_table();

/// Widest table supported at runtime. INKSCORE_KERNELS=scalar forces the
/// reference path.
const KernelTable& active_table();

/// Every table usable on this machine (scalar first).
std::vector<const KernelTable*> available_tables();

}  // namespace inkscore::kernels
