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

#include <cstdlib>
#include <cstring>

#include "inkscore/kernels.hpp"

namespace inkscore::kernels {

#if !defined(INKSCORE_X86)
const KernelTable* avx2_table() { return nullptr; }
#endif

const KernelTable& active_table() {
    static const KernelTable* chosen = [] {
        const char* forced = std::getenv("INKSCORE_KERNELS");
        if (forced && std::strcmp(forced, "scalar") == 0) return &scalar_table();
        if (const KernelTable* avx2 = avx2_table()) return avx2;
        return &scalar_table();
    }();
    return *chosen;
}

std::vector<const KernelTable*> available_tables() {
    std::vector<const KernelTable*> out{&scalar_table()};
    if (const KernelTable* avx2 = avx2_table()) out.push_back(avx2);
    return out;
}

}  // namespace inkscore::kernels
