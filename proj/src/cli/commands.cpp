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

#include "fqvqe/cli/commands.hpp"

#include "fqvqe/analysis.hpp"
#include "fqvqe/exact.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

namespace fqvqe::cli {
namespace {

using io::Json;

std::string tag(std::size_t multiple) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "d%02zu", multiple);
    return buf;
}

RegisterLayout layout_for(const GridSpec &grid) {
    return RegisterLayout{2, grid.qubits_per_dim};
}

io::StateHeader header_for(const GridSpec &grid, const MoleculeSpec &mol, Json metadata) {
    return io::StateHeader{layout_for(grid), grid, mol, std::move(metadata)};
}

std::string degeneracy_note(const SectorGround &s) {
    const double gap = s.antisymmetric_energy - s.symmetric_energy;
    if (std::abs(gap) < 1e-9) {
        return "symmetric and antisymmetric spatial sectors are degenerate";
    }
    if (gap > 0) {
        return "singlet ground (symmetric spatial part), " + io::format_double(gap) +
               " Ha below the triplet; without exchange symmetry the ground level is "
               "4-fold degenerate over spin states";
    }
    return "triplet ground (antisymmetric spatial part), " + io::format_double(-gap) +
           " Ha below the singlet";
}

Json run_json(const RunTrace &run) {
    return Json{{"seed", run.seed},
                {"restart", run.restart},
                {"final_energy", run.final_energy},
                {"final_swap", run.final_swap},
                {"final_entropy", run.final_entropy},
                {"final_grad_norm",
                 run.gradient_norms.empty() ? 0.0 : run.gradient_norms.back()},
                {"swap_checkpoints", run.swap_checkpoints},
                {"non_monotone_steps", run.non_monotone_steps}};
}

double exact_entropy(const FermionicGround &g, const RegisterLayout &layout) {
    return entanglement_entropy(schmidt_electrons(g.state, layout));
}

void save_best(const std::filesystem::path &dir, const std::string &stem,
               const VqeProblem &problem, const MultiStartResult &result) {
    const RunTrace &best = result.best_run();
    io::write_csv(dir / (stem + "_trace.csv"), io::trace_table(best));
    io::ParameterFile params{problem.architecture(), problem.grid(), problem.molecule(),
                             best.final_theta,      best.seed,      best.final_energy};
    io::write_parameters(dir / (stem + "_theta.json"), params);
    Json meta{{"architecture", io::to_json(problem.architecture())},
              {"energy", best.final_energy},
              {"seed", best.seed}};
    io::write_state(dir / (stem + "_state.txt"), problem.state(best.final_theta),
                    header_for(problem.grid(), problem.molecule(), std::move(meta)));
}

io::CsvTable orbital_table(const OrbitalTable &t) {
    io::CsvTable csv;
    csv.header = {"position", "spin"};
    for (std::size_t i = 0; i < t.orbitals; ++i) {
        const std::string n = std::to_string(i);
        for (const char *c : {"mu", "chi"}) {
            csv.header.push_back(std::string(c) + n + "_re");
            csv.header.push_back(std::string(c) + n + "_im");
        }
    }
    for (std::size_t r = 0; r < t.position.size(); ++r) {
        std::vector<double> row{t.position[r], static_cast<double>(t.spin[r])};
        for (std::size_t i = 0; i < t.orbitals; ++i) {
            row.push_back(t.left[i][r].real());
            row.push_back(t.left[i][r].imag());
            row.push_back(t.right[i][r].real());
            row.push_back(t.right[i][r].imag());
        }
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

std::vector<double> nonzero(const Eigen::VectorXd &v) {
    std::vector<double> out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) > 1e-12) {
            out.push_back(v(i));
        }
    }
    return out;
}

} // namespace

int cmd_vqe(const RunConfig &config, std::ostream &log) {
    if (!config.molecule) {
        throw ConfigError("molecule", "needs 'distance' or 'protons'");
    }
    const VqeProblem problem(config.architecture, config.grid, *config.molecule);
    const std::uint64_t stream = config.multiple ? *config.multiple - 1 : 0;
    log << "vqe: " << variant_name(config.architecture.variant) << ", "
        << problem.num_params() << " parameters, " << config.optimizer.restarts
        << " restart(s) of " << config.optimizer.steps << " steps\n";
    const MultiStartResult result = optimize(problem, config.optimizer, stream);
    const RunTrace &best = result.best_run();
    const FermionicGround exact = fermionic_ground_state(config.grid, *config.molecule);

    const auto &dir = config.output_dir;
    std::filesystem::create_directories(dir);
    io::write_csv(dir / "trace.csv", io::trace_table(best));
    io::write_parameters(dir / "theta.json",
                         io::ParameterFile{config.architecture, config.grid, *config.molecule,
                                           best.final_theta, best.seed, best.final_energy});
    const StateVector state = problem.state(best.final_theta);
    io::write_state(dir / "state.txt", state,
                    header_for(config.grid, *config.molecule,
                               Json{{"architecture", io::to_json(config.architecture)},
                                    {"energy", best.final_energy},
                                    {"seed", best.seed}}));
    Json runs = Json::array();
    for (const auto &r : result.runs) {
        runs.push_back(run_json(r));
    }
    Json summary{{"command", "vqe"},
                 {"grid", io::to_json(config.grid)},
                 {"molecule", io::to_json(*config.molecule)},
                 {"architecture", io::to_json(config.architecture)},
                 {"optimizer", io::to_json(config.optimizer)},
                 {"num_params", problem.num_params()},
                 {"energy", io::to_json(best.final_breakdown)},
                 {"swap", best.final_swap},
                 {"entropy", best.final_entropy},
                 {"exact_energy", exact.energy},
                 {"error", best.final_energy - exact.energy},
                 {"best_restart", result.best},
                 {"runs", runs}};
    if (config.multiple) {
        summary["distance"] = static_cast<double>(*config.multiple) * config.grid.delta_r();
    }
    io::write_json(dir / "summary.json", summary);
    log << "final energy " << io::format_double(best.final_energy) << " Ha (exact "
        << io::format_double(exact.energy) << ")\n"
        << "swap expectation " << io::format_double(best.final_swap) << '\n';
    return kExitOk;
}

int cmd_exact(const RunConfig &config, std::ostream &log) {
    struct Item {
        MoleculeSpec molecule;
        std::optional<std::size_t> multiple;
    };
    std::vector<Item> items;
    if (config.molecule && !config.multiple) {
        items.push_back({*config.molecule, std::nullopt});
    } else {
        for (double d : config.sweep.distances) {
            const std::size_t m = grid_multiple(config.grid, d);
            items.push_back({MoleculeSpec::hydrogen_pair(config.grid, m), m});
        }
    }
    const auto &dir = config.output_dir;
    std::filesystem::create_directories(dir);
    const RegisterLayout layout = layout_for(config.grid);
    Json results = Json::array();
    for (const auto &item : items) {
        const FermionicGround g = fermionic_ground_state(config.grid, item.molecule);
        const std::string stem = item.multiple ? "exact_" + tag(*item.multiple) : "exact";
        Json entry;
        if (item.multiple) {
            entry["distance"] = static_cast<double>(*item.multiple) * config.grid.delta_r();
        } else {
            entry["distance"] = nullptr;
        }
        entry["E_sym"] = g.sectors.symmetric_energy;
        entry["E_antisym"] = g.sectors.antisymmetric_energy;
        entry["degeneracy_note"] = degeneracy_note(g.sectors);
        entry["entropy"] = exact_entropy(g, layout);
        entry["state"] = stem + "_state.txt";
        io::write_state(dir / (stem + "_state.txt"), g.state,
                        header_for(config.grid, item.molecule,
                                   Json{{"source", "exact"}, {"energy", g.energy}}));
        log << "distance " << (item.multiple ? io::format_double(entry["distance"]) : "-")
            << "  E_sym " << io::format_double(g.sectors.symmetric_energy) << "  E_antisym "
            << io::format_double(g.sectors.antisymmetric_energy) << '\n';
        results.push_back(std::move(entry));
    }
    io::write_json(dir / "exact.json",
                   Json{{"grid", io::to_json(config.grid)}, {"results", results}});
    return kExitOk;
}

int cmd_pec(const RunConfig &config, std::ostream &log) {
    const auto &dir = config.output_dir;
    std::filesystem::create_directories(dir / "points");
    const RegisterLayout layout = layout_for(config.grid);
    const auto &distances = config.sweep.distances;

    std::vector<FermionicGround> exact;
    for (double d : distances) {
        const std::size_t m = grid_multiple(config.grid, d);
        exact.push_back(fermionic_ground_state(config.grid,
                                               MoleculeSpec::hydrogen_pair(config.grid, m)));
    }

    std::map<Variant, std::vector<CurvePoint>> curves;
    for (Variant v : config.sweep.architectures) {
        Architecture arch = config.architecture;
        arch.variant = v;
        arch.validate();
        log << "pec: " << variant_name(v) << " over " << distances.size() << " distances\n";
        curves[v] = sweep_potential_curve(arch, config.grid, config.optimizer, distances,
                                          config.sweep.jobs);
        for (const auto &p : curves[v]) {
            const VqeProblem problem(arch, config.grid, p.molecule);
            save_best(dir / "points", std::string(variant_name(v)) + "_" + tag(p.multiple),
                      problem, p.result);
        }
    }

    io::CsvTable curve{{"distance", "exact"}, {}};
    io::CsvTable entropy{{"distance", "exact_S"}, {}};
    for (Variant v : config.sweep.architectures) {
        curve.header.emplace_back(variant_name(v));
        entropy.header.push_back(std::string(variant_name(v)) + "_S");
    }
    Json points = Json::array();
    for (std::size_t i = 0; i < distances.size(); ++i) {
        const std::size_t m = grid_multiple(config.grid, distances[i]);
        const double d = static_cast<double>(m) * config.grid.delta_r();
        const double s_exact = exact_entropy(exact[i], layout);
        std::vector<double> crow{d, exact[i].energy};
        std::vector<double> erow{d, s_exact};
        Json point{{"distance", d},
                   {"multiple", m},
                   {"exact",
                    Json{{"E_sym", exact[i].sectors.symmetric_energy},
                         {"E_antisym", exact[i].sectors.antisymmetric_energy},
                         {"entropy", s_exact}}}};
        for (Variant v : config.sweep.architectures) {
            const MultiStartResult &r = curves[v][i].result;
            crow.push_back(r.best_run().final_energy);
            erow.push_back(r.best_run().final_entropy);
            Json runs = Json::array();
            for (const auto &run : r.runs) {
                runs.push_back(run_json(run));
            }
            point[std::string(variant_name(v))] =
                Json{{"energy", r.best_run().final_energy},
                     {"swap", r.best_run().final_swap},
                     {"entropy", r.best_run().final_entropy},
                     {"best_restart", r.best},
                     {"runs", runs}};
        }
        curve.rows.push_back(std::move(crow));
        entropy.rows.push_back(std::move(erow));
        points.push_back(std::move(point));
    }
    io::write_csv(dir / "curve.csv", curve);
    io::write_csv(dir / "entropy.csv", entropy);
    Json archs = Json::array();
    for (Variant v : config.sweep.architectures) {
        archs.push_back(std::string(variant_name(v)));
    }
    io::write_json(dir / "pec.json", Json{{"command", "pec"},
                                          {"grid", io::to_json(config.grid)},
                                          {"architecture", io::to_json(config.architecture)},
                                          {"optimizer", io::to_json(config.optimizer)},
                                          {"architectures", archs},
                                          {"points", points}});
    for (const auto &row : curve.rows) {
        log << io::format_double(row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            log << "  " << curve.header[c] << ' ' << io::format_double(row[c]);
        }
        log << '\n';
    }
    return kExitOk;
}

int cmd_analyze(const AnalyzeOptions &options, std::ostream &log) {
    const io::StateFile file = io::read_state(options.state);
    const RegisterLayout &layout = file.header.layout;
    if (layout.electrons != 2) {
        throw UnsupportedError("analyze: only two-electron states are supported");
    }
    const StateVector &state = file.state;
    const auto &dir = options.output_dir;
    std::filesystem::create_directories(dir);

    const SwapTest swap = swap_expectation(state, layout);
    Json blocks = Json::array();
    io::CsvTable block_csv{{"r1", "r2", "s1", "s2", "re", "im"}, {}};
    const std::size_t N = layout.grid_points();
    for (Spin s1 : {Spin::Down, Spin::Up}) {
        for (Spin s2 : {Spin::Down, Spin::Up}) {
            const SpinBlock b = spin_block(state, layout, s1, s2);
            blocks.push_back(Json{{"s1", static_cast<int>(s1)},
                                  {"s2", static_cast<int>(s2)},
                                  {"weight", b.weight}});
            for (std::size_t i = 0; i < N; ++i) {
                for (std::size_t j = 0; j < N; ++j) {
                    const cplx a = b.table(static_cast<Eigen::Index>(i),
                                           static_cast<Eigen::Index>(j));
                    block_csv.rows.push_back({position_of(file.header.grid, i),
                                              position_of(file.header.grid, j),
                                              static_cast<double>(s1), static_cast<double>(s2),
                                              a.real(), a.imag()});
                }
            }
        }
    }
    io::write_csv(dir / "spin_blocks.csv", block_csv);

    const SchmidtResult electrons = schmidt_electrons(state, layout);
    const double s_electrons = entanglement_entropy(electrons);
    io::write_csv(dir / "orbitals_electrons.csv",
                  orbital_table(orbital_export(electrons, file.header.grid,
                                               options.max_orbitals)));
    Json summary{{"command", "analyze"},
                 {"state", options.state.string()},
                 {"swap", Json{{"value", swap.value}, {"p0", swap.p0}, {"p1", swap.p1}}},
                 {"spin_blocks", blocks},
                 {"electrons",
                  Json{{"coefficients", nonzero(electrons.coefficients)},
                       {"entropy", s_electrons}}}};
    io::CsvTable spectrum{{"index", "lambda"}, {}};
    for (Eigen::Index i = 0; i < electrons.coefficients.size(); ++i) {
        spectrum.rows.push_back({static_cast<double>(i), electrons.coefficients(i)});
    }
    io::write_csv(dir / "schmidt_electrons.csv", spectrum);

    const SpinBlock down_up = spin_block(state, layout, Spin::Down, Spin::Up);
    if (down_up.weight > 1e-12) {
        const SchmidtResult block = schmidt_spin_block(down_up);
        io::write_csv(dir / "orbitals_down_up.csv",
                      orbital_table(orbital_export(block, file.header.grid,
                                                   options.max_orbitals)));
        io::CsvTable bs{{"index", "lambda"}, {}};
        for (Eigen::Index i = 0; i < block.coefficients.size(); ++i) {
            bs.rows.push_back({static_cast<double>(i), block.coefficients(i)});
        }
        io::write_csv(dir / "schmidt_down_up.csv", bs);
        summary["down_up"] = Json{{"coefficients", nonzero(block.coefficients)},
                                  {"entropy", entanglement_entropy(block)}};
    }
    io::write_json(dir / "analysis.json", summary);
    log << "swap expectation " << io::format_double(swap.value) << " (p0 "
        << io::format_double(swap.p0) << ", p1 " << io::format_double(swap.p1) << ")\n"
        << "electron entropy " << io::format_double(s_electrons) << " bits\n";
    return kExitOk;
}

} // namespace fqvqe::cli
