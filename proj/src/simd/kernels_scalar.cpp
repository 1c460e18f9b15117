// Copyright 2026 The fqvqe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "fqvqe/simd/kernels.hpp"

#include "scalar_impl.hpp"

#include <cstdlib>
#include <string_view>

namespace fqvqe::simd {
namespace {

const KernelTable kScalar{
    "scalar",
    &ref::apply_1q<double>,
    &ref::apply_1q<cplx>,
    &ref::apply_2q<double>,
    &ref::apply_2q<cplx>,
    &ref::expval_1q<double>,
    &ref::expval_1q<cplx>,
    &ref::expval_2q<double>,
    &ref::expval_2q<cplx>,
    &ref::pair_swap<double>,
    &ref::pair_swap<cplx>,
    &ref::ry_backward,
    &ref::dot_real,
    &ref::dot_complex,
    &ref::diag_mul_add<double>,
    &ref::diag_mul_add<cplx>,
};

const KernelTable *select_default() {
    if (const char *env = std::getenv("FQVQE_SIMD")) {
        if (std::string_view{env} == "scalar") {
            return &kScalar;
        }
    }
    if (const KernelTable *avx = avx2_kernels()) {
        return avx;
    }
    return &kScalar;
}

const KernelTable *&active_slot() {
    static const KernelTable *table = select_default();
    return table;
}

} // namespace

const KernelTable &scalar_kernels() { return kScalar; }

const KernelTable &active_kernels() { return *active_slot(); }

void set_active_kernels(const KernelTable &table) { active_slot() = &table; }

} // namespace fqvqe::simd
