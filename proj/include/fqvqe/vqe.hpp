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
 * Variational minimization of the register energy over ansatz parameters.
 *
 * Gradients come from adjoint (reverse-mode) propagation through the gate
 * list: one forward pass, one application of H, then a backward sweep that
 * un-applies each gate to both the state and the adjoint vector and reads off
 * 2 Re <lambda| dG/dtheta |psi>. Circuits made only of real gates run in real
 * arithmetic.
 */
#pragma once

#include "fqvqe/ansatz.hpp"
#include "fqvqe/energy.hpp"
#include "fqvqe/grid.hpp"
#include "fqvqe/hamiltonian.hpp"
#include "fqvqe/layout.hpp"
#include "fqvqe/program.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fqvqe {

struct OptimizerConfig {
    std::size_t steps = 10000;
    double learning_rate = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t seed = 1234;
    /// Initial parameters are uniform in [-init_scale, init_scale].
    double init_scale = 0.1;
    /// Independent starts per optimization; the lowest final energy wins.
    std::size_t restarts = 3;

    void validate() const;
};

/// Standard Adam with bias correction.
class Adam {
  public:
    Adam(std::size_t size, const OptimizerConfig &config);
    void step(std::span<double> params, std::span<const double> grad);
    [[nodiscard]] std::size_t iterations() const noexcept { return t_; }

  private:
    double lr_, beta1_, beta2_, eps_;
    std::size_t t_ = 0;
    double beta1_pow_ = 1.0;
    double beta2_pow_ = 1.0;
    std::vector<double> m_, v_;
};

/// An ansatz bound to a Hamiltonian. Immutable after construction; const
/// members may be called concurrently.
class VqeProblem {
  public:
    VqeProblem(const Architecture &arch, const GridSpec &grid,
               const MoleculeSpec &molecule);

    [[nodiscard]] double energy(std::span<const double> theta) const;
    /// Fills `grad` (length num_params) and returns the energy.
    double energy_and_gradient(std::span<const double> theta,
                               std::span<double> grad) const;
    [[nodiscard]] StateVector state(std::span<const double> theta) const;

    [[nodiscard]] std::size_t num_params() const noexcept { return ansatz_.num_params(); }
    [[nodiscard]] const AnsatzCircuit &ansatz() const noexcept { return ansatz_; }
    [[nodiscard]] const Architecture &architecture() const noexcept { return arch_; }
    [[nodiscard]] const GridSpec &grid() const noexcept { return grid_; }
    [[nodiscard]] const MoleculeSpec &molecule() const noexcept { return molecule_; }
    [[nodiscard]] const RegisterLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] const HamiltonianOperator &hamiltonian() const noexcept {
        return hamiltonian_;
    }
    /// True when the real-arithmetic path is used.
    [[nodiscard]] bool real_arithmetic() const noexcept { return real_; }

  private:
    Architecture arch_;
    GridSpec grid_;
    MoleculeSpec molecule_;
    RegisterLayout layout_;
    AnsatzCircuit ansatz_;
    GateProgram program_;
    HamiltonianOperator hamiltonian_;
    bool real_;
};

/// dE/dtheta by adjoint differentiation.
[[nodiscard]] std::vector<double> gradient(const Architecture &arch,
                                           std::span<const double> theta,
                                           const GridSpec &grid,
                                           const MoleculeSpec &molecule);

/// Central finite differences of VqeProblem::energy (validation oracle).
[[nodiscard]] std::vector<double> finite_difference_gradient(const VqeProblem &problem,
                                                             std::span<const double> theta,
                                                             double h);

struct RunTrace {
    std::uint64_t seed = 0;
    std::size_t restart = 0;
    /// Energy and gradient norm at the parameters entering each step.
    std::vector<double> energies;
    std::vector<double> gradient_norms;
    std::vector<double> initial_theta;
    std::vector<double> final_theta;
    /// Fresh evaluation at final_theta.
    double final_energy = 0.0;
    EnergyBreakdown final_breakdown;
    double final_swap = 0.0;
    double final_entropy = 0.0;
    /// Swap expectation at steps {0, steps/2, final}.
    std::vector<double> swap_checkpoints;
    std::size_t non_monotone_steps = 0;
};

using ProgressFn = std::function<void(std::size_t step, double energy)>;

/// Single Adam run from `theta0`.
[[nodiscard]] RunTrace optimize_from(const VqeProblem &problem,
                                     const OptimizerConfig &config,
                                     std::span<const double> theta0,
                                     const ProgressFn &progress = {});

struct MultiStartResult {
    std::vector<RunTrace> runs;
    std::size_t best = 0;
    [[nodiscard]] const RunTrace &best_run() const { return runs.at(best); }
};

/// `config.restarts` runs with initial parameters drawn from
/// mt19937_64(config.seed + stream).
[[nodiscard]] MultiStartResult optimize(const VqeProblem &problem,
                                        const OptimizerConfig &config,
                                        std::uint64_t stream = 0,
                                        const ProgressFn &progress = {});

/// Uniform draws in [-scale, scale].
[[nodiscard]] std::vector<double> random_parameters(std::size_t count, double scale,
                                                    std::uint64_t seed);

struct CurvePoint {
    std::size_t multiple = 0; ///< separation in grid steps
    double distance = 0.0;    ///< bohr
    MoleculeSpec molecule;
    MultiStartResult result;
};

/// Grid multiple of `distance`; throws DomainError unless it is a positive
/// integer multiple of delta_r.
[[nodiscard]] std::size_t grid_multiple(const GridSpec &grid, double distance);

/// One multi-start optimization per distance (protons placed by
/// MoleculeSpec::hydrogen_pair), run on up to `jobs` threads. Distance i
/// uses RNG stream i.
[[nodiscard]] std::vector<CurvePoint>
sweep_potential_curve(const Architecture &arch, const GridSpec &grid,
                      const OptimizerConfig &config, std::span<const double> distances,
                      std::size_t jobs = 1);

} // namespace fqvqe
