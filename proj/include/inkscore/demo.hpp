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

#include "inkscore/image.hpp"

namespace inkscore {

/// Deterministic synthetic "scanned handwriting" page: light paper with dark
/// word-like blobs arranged in text rows, plus salt noise for the median
/// filter to chew on. Used by the demo corpus generator and the end-to-end
/// tests; not part of the analysis pipeline.
GrayImage make_synthetic_page(int width, int height, uint64_t seed, int text_rows = 12);

}  // namespace inkscore
