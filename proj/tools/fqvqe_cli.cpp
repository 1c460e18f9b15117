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
#include "fqvqe/cli/config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using fqvqe::cli::RunConfig;
using fqvqe::io::Json;

struct CommonFlags {
    std::string config;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> jobs;
    std::optional<std::string> arch;
    std::optional<double> distance;
};

void add_common(CLI::App *cmd, CommonFlags &f) {
    cmd->add_option("--config", f.config, "JSON run configuration (defaults if omitted)");
    cmd->add_option("--out", f.out, "Output directory");
    cmd->add_option("--seed", f.seed, "Base RNG seed");
    cmd->add_option("--jobs", f.jobs, "Parallel distances (pec)");
    cmd->add_option("--arch", f.arch, "Architecture: SN, HF or MC (comma list for pec)");
    cmd->add_option("--distance", f.distance, "Proton separation in bohr");
    cmd->allow_extras();
}

/// Leftover "--a.b=v" / "--a.b v" pairs as dotted-key overrides.
std::vector<std::pair<std::string, std::string>>
dotted_overrides(const std::vector<std::string> &extras) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string &arg = extras[i];
        if (arg.rfind("--", 0) != 0 || arg.size() == 2) {
            throw fqvqe::ConfigError(arg, "unexpected argument");
        }
        const std::string body = arg.substr(2);
        const auto eq = body.find('=');
        if (eq != std::string::npos) {
            out.emplace_back(body.substr(0, eq), body.substr(eq + 1));
        } else if (i + 1 < extras.size()) {
            out.emplace_back(body, extras[++i]);
        } else {
            throw fqvqe::ConfigError(body, "missing value");
        }
    }
    return out;
}

RunConfig build_config(const std::string &command, const CommonFlags &f,
                       const std::vector<std::string> &extras) {
    Json doc = f.config.empty() ? fqvqe::cli::default_config() : fqvqe::cli::load_config(f.config);
    for (const auto &[key, value] : dotted_overrides(extras)) {
        fqvqe::cli::apply_override(doc, key, value);
    }
    if (f.out) {
        doc["output"] = *f.out;
    }
    if (f.seed) {
        doc["seed"] = *f.seed;
    }
    if (f.jobs) {
        doc["sweep"]["jobs"] = *f.jobs;
    }
    if (f.arch) {
        if (command == "pec") {
            fqvqe::cli::apply_override(doc, "sweep.architectures", *f.arch);
        } else if (command == "vqe") {
            doc["architecture"]["variant"] = *f.arch;
        } else {
            throw fqvqe::ConfigError("--arch", "not used by '" + command + "'");
        }
    }
    if (f.distance) {
        if (command == "vqe") {
            if (doc.contains("molecule") && doc["molecule"].is_object()) {
                doc["molecule"].erase("protons");
            }
            doc["molecule"]["distance"] = *f.distance;
        } else {
            if (doc.contains("sweep") && doc["sweep"].is_object()) {
                doc["sweep"].erase("multiples");
            }
            doc["sweep"]["distances"] = Json::array({*f.distance});
        }
    }
    std::vector<std::string> required{"grid"};
    if (command == "vqe") {
        required = {"grid", "molecule", "architecture", "optimizer"};
    } else if (command == "pec") {
        required = {"grid", "architecture", "optimizer"};
    }
    return fqvqe::cli::parse_run_config(doc, required);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"First-quantized two-electron VQE on a real-space grid"};
    app.require_subcommand(1);

    CommonFlags vqe_flags, exact_flags, pec_flags;
    auto *vqe = app.add_subcommand("vqe", "Optimize one architecture at one distance");
    auto *exact = app.add_subcommand("exact", "Exact diagonalization per distance");
    auto *pec = app.add_subcommand("pec", "Potential energy curve sweep");
    add_common(vqe, vqe_flags);
    add_common(exact, exact_flags);
    add_common(pec, pec_flags);

    fqvqe::cli::AnalyzeOptions analyze_opts;
    std::string analyze_state;
    std::optional<std::string> analyze_out;
    auto *analyze = app.add_subcommand("analyze", "Diagnostics of a saved state dump");
    analyze->add_option("state", analyze_state, "State dump file")->required();
    analyze->add_option("--out", analyze_out, "Output directory");
    analyze->add_option("--orbitals", analyze_opts.max_orbitals, "Orbitals to export");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return fqvqe::cli::kExitUsage;
    }

    auto run = [&](const std::string &name, CLI::App *cmd, const CommonFlags &flags,
                   int (*fn)(const RunConfig &, std::ostream &)) {
        return fqvqe::cli::guarded(std::cerr, [&] {
            const RunConfig cfg = build_config(name, flags, cmd->remaining());
            return fn(cfg, std::cout);
        });
    };
    if (*vqe) {
        return run("vqe", vqe, vqe_flags, &fqvqe::cli::cmd_vqe);
    }
    if (*exact) {
        return run("exact", exact, exact_flags, &fqvqe::cli::cmd_exact);
    }
    if (*pec) {
        return run("pec", pec, pec_flags, &fqvqe::cli::cmd_pec);
    }
    analyze_opts.state = analyze_state;
    if (analyze_out) {
        analyze_opts.output_dir = *analyze_out;
    }
    return fqvqe::cli::guarded(std::cerr,
                               [&] { return fqvqe::cli::cmd_analyze(analyze_opts, std::cout); });
}
