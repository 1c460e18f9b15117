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

/**
 * @file
 * Execution plan for a circuit: runs of consecutive X / CNOT / SWAP gates
 * that touch at most `kMaxPermutationQubits` qubits are merged into a single
 * basis permutation applied in one pass.
 */
#pragma once

#include "fqvqe/circuit.hpp"
#include "fqvqe/gate.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fqvqe {

inline constexpr std::size_t kMaxPermutationQubits = 8;

/// Basis permutation on a few qubits: local pattern j moves to image[j].
struct BasisPermutation {
    std::vector<std::size_t> qubits;
    /// Global index offset of each local pattern.
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> image;
    /// Global indices with every local bit clear.
    std::vector<std::size_t> outer;
    /// Length of the contiguous runs in `outer`.
    std::size_t run = 1;

    /// out[o + offsets[image[j]]] = in[o + offsets[j]] (or the inverse).
    template <class T>
    void apply(std::span<const T> in, std::span<T> out, bool inverse) const;
};

class GateProgram {
  public:
    struct Step {
        /// Index into gates() or, when permutation >= 0, a fused run.
        std::size_t gate = 0;
        int permutation = -1;
    };

    explicit GateProgram(const Circuit &circuit);

    [[nodiscard]] const Circuit &circuit() const noexcept { return circuit_; }
    [[nodiscard]] const std::vector<Step> &steps() const noexcept { return steps_; }
    [[nodiscard]] const BasisPermutation &permutation(int i) const {
        return perms_.at(static_cast<std::size_t>(i));
    }

    /// Runs the whole program on `amps`; `scratch` has the same length.
    template <class T>
    void run(std::span<T> amps, std::span<T> scratch, std::span<const double> params) const;

  private:
    Circuit circuit_;
    std::vector<Step> steps_;
    std::vector<BasisPermutation> perms_;
};

} // namespace fqvqe
