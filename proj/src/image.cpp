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

#include "inkscore/image.hpp"

#include <numeric>

namespace inkscore {

size_t BinaryImage::ink_count() const {
    return std::accumulate(mask.begin(), mask.end(), size_t(0),
                           [](size_t acc, uint8_t v) { return acc + (v != 0); });
}

double BinaryImage::ink_fraction() const {
    if (mask.empty()) return 0.0;
    return double(ink_count()) / double(mask.size());
}

}  // namespace inkscore
