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
 * Run configuration: a JSON document with `grid`, `molecule`,
 * `architecture`, `optimizer` and `sweep` sections plus top-level `output`
 * and `seed`. Any key can be overridden by its dotted path.
 */
#pragma once

#include "fqvqe/ansatz.hpp"
#include "fqvqe/grid.hpp"
#include "fqvqe/io.hpp"
#include "fqvqe/vqe.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fqvqe::cli {

struct SweepConfig {
    /// Proton separations in bohr; each must be a positive multiple of delta_r.
    std::vector<double> distances;
    std::vector<Variant> architectures{Variant::HF, Variant::MC};
    std::size_t jobs = 1;
};

struct RunConfig {
    io::Json document;
    GridSpec grid;
    /// Set when the molecule section names a distance or explicit protons.
    std::optional<MoleculeSpec> molecule;
    /// Grid multiple of the proton separation for distance-based molecules.
    std::optional<std::size_t> multiple;
    Architecture architecture;
    OptimizerConfig optimizer;
    SweepConfig sweep;
    std::filesystem::path output_dir = "out";
};

/// Reads a JSON config file; throws ConfigError("config", ...) when it cannot
/// be read or parsed.
[[nodiscard]] io::Json load_config(const std::filesystem::path &path);

/// Sets `document[a][b]...` for `dotted_key` = "a.b...". The value is parsed
/// as JSON when possible and stored as a string otherwise.
void apply_override(io::Json &document, std::string_view dotted_key, std::string_view value);

/// Validates every present section and requires those in `required`.
/// Top-level `seed` replaces `optimizer.seed`.
[[nodiscard]] RunConfig parse_run_config(const io::Json &document,
                                         const std::vector<std::string> &required);

/// Default sweep: 1..16 grid spacings.
[[nodiscard]] std::vector<double> default_distances(const GridSpec &grid);

/// Config equivalent to all defaults (molecule at 16 grid spacings).
[[nodiscard]] io::Json default_config();

} // namespace fqvqe::cli
