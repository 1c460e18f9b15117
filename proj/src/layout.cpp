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
#include "fqvqe/layout.hpp"

namespace fqvqe {

std::vector<std::size_t> RegisterLayout::spatial_register(std::size_t electron) const {
    std::vector<std::size_t> q(spatial_qubits);
    for (std::size_t k = 0; k < spatial_qubits; ++k) {
        q[k] = first_qubit(electron) + k;
    }
    return q;
}

std::vector<std::size_t> RegisterLayout::register_qubits(std::size_t electron) const {
    std::vector<std::size_t> q(qubits_per_electron());
    for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] = first_qubit(electron) + k;
    }
    return q;
}

} // namespace fqvqe
