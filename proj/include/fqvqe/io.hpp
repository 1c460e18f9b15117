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
 * File formats: state dumps, parameter files, CSV tables and JSON
 * serialization of the run specifications.
 *
 * A state dump is a single-line JSON header followed by 2^Q lines of
 * "re im" in round-trip precision.
 */
#pragma once

#include "fqvqe/ansatz.hpp"
#include "fqvqe/energy.hpp"
#include "fqvqe/grid.hpp"
#include "fqvqe/layout.hpp"
#include "fqvqe/state_vector.hpp"
#include "fqvqe/vqe.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace fqvqe::io {

using Json = nlohmann::ordered_json;

inline constexpr const char *kStateFormat = "fqvqe-state";
inline constexpr const char *kParameterFormat = "fqvqe-parameters";
inline constexpr int kFormatVersion = 1;

[[nodiscard]] Json to_json(const GridSpec &grid);
[[nodiscard]] Json to_json(const MoleculeSpec &molecule);
[[nodiscard]] Json to_json(const RegisterLayout &layout);
[[nodiscard]] Json to_json(const Architecture &arch);
[[nodiscard]] Json to_json(const OptimizerConfig &config);
[[nodiscard]] Json to_json(const EnergyBreakdown &energy);

// Readers fill unspecified keys with defaults and throw ConfigError naming
// `path` + "." + key for wrong types or invalid values.
[[nodiscard]] GridSpec grid_from_json(const Json &j, const std::string &path = "grid");
[[nodiscard]] MoleculeSpec molecule_from_json(const Json &j,
                                              const std::string &path = "molecule");
[[nodiscard]] RegisterLayout layout_from_json(const Json &j,
                                              const std::string &path = "layout");
[[nodiscard]] Architecture architecture_from_json(const Json &j,
                                                  const std::string &path = "architecture");
[[nodiscard]] OptimizerConfig optimizer_from_json(const Json &j,
                                                  const std::string &path = "optimizer");

struct StateHeader {
    RegisterLayout layout;
    GridSpec grid;
    MoleculeSpec molecule;
    /// Free-form extra fields (architecture, energy, ...).
    Json metadata = Json::object();
};

struct StateFile {
    StateHeader header;
    StateVector state;
};

void write_state(std::ostream &out, const StateVector &state, const StateHeader &header);
void write_state(const std::filesystem::path &path, const StateVector &state,
                 const StateHeader &header);
/// Throws FormatError on a malformed header, wrong amplitude count or a
/// norm off by more than 1e-8.
[[nodiscard]] StateFile read_state(std::istream &in);
[[nodiscard]] StateFile read_state(const std::filesystem::path &path);

struct ParameterFile {
    Architecture architecture;
    GridSpec grid;
    MoleculeSpec molecule;
    std::vector<double> theta;
    std::uint64_t seed = 0;
    double energy = 0.0;
};

[[nodiscard]] Json to_json(const ParameterFile &params);
[[nodiscard]] ParameterFile parameters_from_json(const Json &j);
void write_parameters(const std::filesystem::path &path, const ParameterFile &params);
[[nodiscard]] ParameterFile read_parameters(const std::filesystem::path &path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    bool operator==(const CsvTable &) const = default;
};

/// Values are written with %.17g.
void write_csv(std::ostream &out, const CsvTable &table);
void write_csv(const std::filesystem::path &path, const CsvTable &table);
[[nodiscard]] CsvTable read_csv(std::istream &in);
[[nodiscard]] CsvTable read_csv(const std::filesystem::path &path);

/// step, energy, grad_norm
[[nodiscard]] CsvTable trace_table(const RunTrace &trace);

[[nodiscard]] std::string format_double(double value);

void write_json(const std::filesystem::path &path, const Json &j);
[[nodiscard]] Json read_json(const std::filesystem::path &path);

} // namespace fqvqe::io
