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
#include "fqvqe/vqe.hpp"

#include "fqvqe/analysis.hpp"
#include "fqvqe/error.hpp"
#include "fqvqe/gate_apply.hpp"
#include "fqvqe/simd/kernels.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

namespace fqvqe {
namespace {

template <class T>
void run_program(const GateProgram &program, std::span<const double> theta,
                 std::vector<T> &psi, std::vector<T> &scratch) {
    const Circuit &circuit = program.circuit();
    const std::size_t nq = circuit.num_qubits();
    psi.assign(std::size_t{1} << nq, T{});
    scratch.resize(psi.size());
    psi[0] = T{1.0};
    for (const auto &step : program.steps()) {
        if (step.permutation >= 0) {
            program.permutation(step.permutation)
                .apply<T>(std::span<const T>(psi), std::span<T>(scratch), false);
            psi.swap(scratch);
        } else {
            const Gate &g = circuit.gates()[step.gate];
            apply_gate<T>(std::span<T>(psi), nq, g, Circuit::angle_of(g, theta), false);
        }
    }
}

template <class T>
double forward_energy(const GateProgram &program, const HamiltonianOperator &h,
                      std::span<const double> theta, std::vector<T> &psi,
                      std::vector<T> &scratch) {
    run_program<T>(program, theta, psi, scratch);
    return h.expectation<T>(std::span<const T>(psi), std::span<T>(scratch));
}

template <class T>
double adjoint_gradient(const GateProgram &program, const HamiltonianOperator &h,
                        std::span<const double> theta, std::span<double> grad) {
    std::vector<T> psi;
    std::vector<T> lambda;
    const double energy = forward_energy<T>(program, h, theta, psi, lambda);
    std::vector<T> scratch(psi.size());
    std::fill(grad.begin(), grad.end(), 0.0);
    const Circuit &circuit = program.circuit();
    const std::size_t nq = circuit.num_qubits();
    const auto &kernels = simd::active_kernels();
    const auto &steps = program.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->permutation >= 0) {
            const BasisPermutation &p = program.permutation(it->permutation);
            p.apply<T>(std::span<const T>(psi), std::span<T>(scratch), true);
            psi.swap(scratch);
            p.apply<T>(std::span<const T>(lambda), std::span<T>(scratch), true);
            lambda.swap(scratch);
            continue;
        }
        const Gate &g = circuit.gates()[it->gate];
        const double angle = Circuit::angle_of(g, theta);
        if constexpr (std::is_same_v<T, double>) {
            if (g.kind == GateKind::Ry) {
                const double d = kernels.ry_backward_real(
                    psi.data(), lambda.data(), psi.size(), qubit_stride(nq, g.qubits[0]),
                    std::cos(0.5 * angle), std::sin(0.5 * angle));
                if (g.parametric()) {
                    grad[static_cast<std::size_t>(g.param_slot)] += 2.0 * d;
                }
                continue;
            }
        }
        apply_gate<T>(std::span<T>(psi), nq, g, angle, true);
        if (g.parametric()) {
            const T d = derivative_expval<T>(std::span<const T>(lambda),
                                             std::span<const T>(psi), nq, g, angle);
            if constexpr (std::is_same_v<T, double>) {
                grad[static_cast<std::size_t>(g.param_slot)] += 2.0 * d;
            } else {
                grad[static_cast<std::size_t>(g.param_slot)] += 2.0 * d.real();
            }
        }
        apply_gate<T>(std::span<T>(lambda), nq, g, angle, true);
    }
    if (!std::isfinite(energy)) {
        throw NumericalError("energy is not finite");
    }
    for (std::size_t i = 0; i < grad.size(); ++i) {
        if (!std::isfinite(grad[i])) {
            throw NumericalError("gradient component " + std::to_string(i) +
                                 " is not finite");
        }
    }
    return energy;
}

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (const double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

} // namespace

void OptimizerConfig::validate() const {
    if (steps < 1) throw DomainError("optimizer: steps must be >= 1");
    if (!(learning_rate > 0.0)) throw DomainError("optimizer: learning_rate must be > 0");
    if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
        throw DomainError("optimizer: betas must lie in [0, 1)");
    }
    if (!(epsilon > 0.0)) throw DomainError("optimizer: epsilon must be > 0");
    if (!(init_scale >= 0.0)) throw DomainError("optimizer: init_scale must be >= 0");
    if (restarts < 1) throw DomainError("optimizer: restarts must be >= 1");
}

Adam::Adam(std::size_t size, const OptimizerConfig &config)
    : lr_(config.learning_rate), beta1_(config.beta1), beta2_(config.beta2),
      eps_(config.epsilon), m_(size, 0.0), v_(size, 0.0) {}

void Adam::step(std::span<double> params, std::span<const double> grad) {
    ++t_;
    beta1_pow_ *= beta1_;
    beta2_pow_ *= beta2_;
    const double c1 = 1.0 - beta1_pow_;
    const double c2 = 1.0 - beta2_pow_;
    for (std::size_t i = 0; i < params.size(); ++i) {
        m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
        v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
        params[i] -= lr_ * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + eps_);
    }
}

VqeProblem::VqeProblem(const Architecture &arch, const GridSpec &grid,
                       const MoleculeSpec &molecule)
    : arch_(arch), grid_(grid), molecule_(molecule),
      layout_{molecule.electrons, grid.qubits_per_dim},
      ansatz_(build_architecture(arch, layout_)), program_(ansatz_.circuit),
      hamiltonian_(grid, molecule, layout_), real_(ansatz_.circuit.is_real()) {}

double VqeProblem::energy(std::span<const double> theta) const {
    if (theta.size() != num_params()) {
        throw DomainError("energy: expected " + std::to_string(num_params()) +
                          " parameters, got " + std::to_string(theta.size()));
    }
    if (real_) {
        std::vector<double> psi, scratch;
        return forward_energy<double>(program_, hamiltonian_, theta, psi, scratch);
    }
    std::vector<cplx> psi, scratch;
    return forward_energy<cplx>(program_, hamiltonian_, theta, psi, scratch);
}

double VqeProblem::energy_and_gradient(std::span<const double> theta,
                                       std::span<double> grad) const {
    if (theta.size() != num_params() || grad.size() != num_params()) {
        throw DomainError("energy_and_gradient: expected " +
                          std::to_string(num_params()) + " parameters");
    }
    return real_ ? adjoint_gradient<double>(program_, hamiltonian_, theta, grad)
                 : adjoint_gradient<cplx>(program_, hamiltonian_, theta, grad);
}

StateVector VqeProblem::state(std::span<const double> theta) const {
    return apply_ansatz(ansatz_, theta);
}

std::vector<double> gradient(const Architecture &arch, std::span<const double> theta,
                             const GridSpec &grid, const MoleculeSpec &molecule) {
    const VqeProblem problem(arch, grid, molecule);
    std::vector<double> g(problem.num_params());
    (void)problem.energy_and_gradient(theta, g);
    return g;
}

std::vector<double> finite_difference_gradient(const VqeProblem &problem,
                                               std::span<const double> theta,
                                               double h) {
    std::vector<double> x(theta.begin(), theta.end());
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double x0 = x[i];
        x[i] = x0 + h;
        const double ep = problem.energy(x);
        x[i] = x0 - h;
        const double em = problem.energy(x);
        x[i] = x0;
        g[i] = (ep - em) / (2.0 * h);
    }
    return g;
}

RunTrace optimize_from(const VqeProblem &problem, const OptimizerConfig &config,
                       std::span<const double> theta0, const ProgressFn &progress) {
    config.validate();
    if (theta0.size() != problem.num_params()) {
        throw DomainError("optimize: initial parameter count mismatch");
    }
    RunTrace trace;
    trace.initial_theta.assign(theta0.begin(), theta0.end());
    std::vector<double> theta(theta0.begin(), theta0.end());
    std::vector<double> grad(theta.size());
    trace.energies.reserve(config.steps);
    trace.gradient_norms.reserve(config.steps);
    Adam adam(theta.size(), config);
    const std::size_t mid = config.steps / 2;
    for (std::size_t step = 0; step < config.steps; ++step) {
        if (step == 0 || step == mid) {
            trace.swap_checkpoints.push_back(
                swap_expectation(problem.state(theta), problem.layout()).value);
        }
        const double e = problem.energy_and_gradient(theta, grad);
        trace.energies.push_back(e);
        trace.gradient_norms.push_back(norm2(grad));
        if (step > 0 && e > trace.energies[step - 1]) {
            ++trace.non_monotone_steps;
        }
        if (progress) {
            progress(step, e);
        }
        adam.step(theta, grad);
    }
    trace.final_theta = theta;
    trace.final_energy = problem.energy(theta);
    const StateVector final_state = problem.state(theta);
    trace.final_breakdown =
        total_energy(final_state, problem.layout(), problem.grid(), problem.molecule());
    trace.final_swap = swap_expectation(final_state, problem.layout()).value;
    trace.swap_checkpoints.push_back(trace.final_swap);
    trace.final_entropy =
        entanglement_entropy(schmidt_electrons(final_state, problem.layout()));
    return trace;
}

std::vector<double> random_parameters(std::size_t count, double scale,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> v(count);
    for (auto &x : v) {
        x = dist(rng);
    }
    return v;
}

MultiStartResult optimize(const VqeProblem &problem, const OptimizerConfig &config,
                          std::uint64_t stream, const ProgressFn &progress) {
    config.validate();
    std::mt19937_64 rng(config.seed + stream);
    std::uniform_real_distribution<double> dist(-config.init_scale, config.init_scale);
    MultiStartResult result;
    for (std::size_t r = 0; r < config.restarts; ++r) {
        std::vector<double> theta0(problem.num_params());
        for (auto &x : theta0) {
            x = dist(rng);
        }
        RunTrace t = optimize_from(problem, config, theta0, progress);
        t.seed = config.seed + stream;
        t.restart = r;
        result.runs.push_back(std::move(t));
        if (result.runs.back().final_energy < result.runs[result.best].final_energy) {
            result.best = r;
        }
    }
    return result;
}

std::size_t grid_multiple(const GridSpec &grid, double distance) {
    const double m = distance / grid.delta_r();
    const double r = std::round(m);
    if (!(r >= 1.0) || std::abs(m - r) > 1e-9) {
        throw DomainError("distance " + std::to_string(distance) +
                          " is not a positive multiple of the grid spacing");
    }
    return static_cast<std::size_t>(r);
}

std::vector<CurvePoint> sweep_potential_curve(const Architecture &arch,
                                              const GridSpec &grid,
                                              const OptimizerConfig &config,
                                              std::span<const double> distances,
                                              std::size_t jobs) {
    config.validate();
    std::vector<CurvePoint> points(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) {
        points[i].multiple = grid_multiple(grid, distances[i]);
        points[i].distance = static_cast<double>(points[i].multiple) * grid.delta_r();
        points[i].molecule = MoleculeSpec::hydrogen_pair(grid, points[i].multiple);
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                const VqeProblem problem(arch, grid, points[i].molecule);
                points[i].result = optimize(problem, config, i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const std::size_t n = std::max<std::size_t>(1, std::min(jobs, points.size()));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < n; ++t) {
            threads.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return points;
}

} // namespace fqvqe
