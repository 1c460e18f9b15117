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
#pragma once

#include "fqvqe/gate.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fqvqe {

/// Ordered gate list over `num_qubits` qubits. Parametric gates read their
/// angle from slot `param_slot` of a flat parameter vector of length
/// `num_params`; several gates may share one slot.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits, std::size_t num_params = 0)
        : num_qubits_(num_qubits), num_params_(num_params) {}

    /// Validates targets and slot range.
    void add(const Gate &gate);
    /// Appends `other`, shifting its parameter slots by `slot_offset`, and
    /// grows num_params to cover them.
    void append(const Circuit &other, std::size_t slot_offset = 0);

    /// Reserves `count` fresh slots and returns the first.
    std::size_t reserve_params(std::size_t count) {
        const std::size_t first = num_params_;
        num_params_ += count;
        return first;
    }

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t num_params() const noexcept { return num_params_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    /// True when every gate has a real matrix.
    [[nodiscard]] bool is_real() const noexcept;

    /// Angle of `gate` under `params` (fixed angle for non-parametric gates).
    [[nodiscard]] static double angle_of(const Gate &gate,
                                         std::span<const double> params) {
        return gate.param_slot >= 0
                   ? params[static_cast<std::size_t>(gate.param_slot)]
                   : gate.angle;
    }

  private:
    std::size_t num_qubits_ = 0;
    std::size_t num_params_ = 0;
    std::vector<Gate> gates_;
};

/// Register-level QFT on `reg` (most significant qubit first), including the
/// final bit-reversal swaps, so basis |j> maps to
/// N^{-1/2} sum_k exp(+2 pi i j k / N) |k>. `inverse` yields the adjoint.
[[nodiscard]] Circuit qft_circuit(std::size_t num_qubits,
                                  std::span<const std::size_t> reg,
                                  bool inverse = false);

} // namespace fqvqe
