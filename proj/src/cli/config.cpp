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

#include "fqvqe/cli/config.hpp"

#include "fqvqe/error.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace fqvqe::cli {
namespace {

using io::Json;

void check_keys(const Json &j, const std::string &path,
                std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
        throw ConfigError(path, "expected an object");
    }
    for (const auto &item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw ConfigError(path.empty() ? item.key() : path + "." + item.key(),
                              "unknown key");
        }
    }
}

bool is_count(const Json &v) {
    return v.is_number_integer() && (v.is_number_unsigned() || v.get<std::int64_t>() >= 0);
}

std::vector<Variant> parse_architectures(const Json &j) {
    std::vector<std::string> names;
    if (j.is_string()) {
        std::istringstream ss(j.get<std::string>());
        std::string item;
        while (std::getline(ss, item, ',')) {
            names.push_back(item);
        }
    } else if (j.is_array()) {
        for (const auto &v : j) {
            if (!v.is_string()) {
                throw ConfigError("sweep.architectures", "expected strings");
            }
            names.push_back(v.get<std::string>());
        }
    } else {
        throw ConfigError("sweep.architectures", "expected a list of names");
    }
    std::vector<Variant> out;
    for (const auto &n : names) {
        try {
            out.push_back(parse_variant(n));
        } catch (const DomainError &e) {
            throw ConfigError("sweep.architectures", e.what());
        }
    }
    if (out.empty()) {
        throw ConfigError("sweep.architectures", "empty");
    }
    return out;
}

std::size_t checked_multiple(const GridSpec &grid, double distance, const std::string &path) {
    try {
        return grid_multiple(grid, distance);
    } catch (const DomainError &e) {
        throw ConfigError(path, e.what());
    }
}

void parse_molecule(const Json &j, RunConfig &cfg) {
    check_keys(j, "molecule", {"distance", "protons", "electrons"});
    const bool has_distance = j.contains("distance");
    const bool has_protons = j.contains("protons");
    if (has_distance && has_protons) {
        throw ConfigError("molecule", "give either 'distance' or 'protons', not both");
    }
    MoleculeSpec mol;
    if (has_distance) {
        if (!j["distance"].is_number()) {
            throw ConfigError("molecule.distance", "expected a number");
        }
        const std::size_t m =
            checked_multiple(cfg.grid, j["distance"].get<double>(), "molecule.distance");
        cfg.multiple = m;
        mol = MoleculeSpec::hydrogen_pair(cfg.grid, m);
        if (j.contains("electrons")) {
            mol.electrons = io::molecule_from_json(
                                Json{{"protons", Json::array()}, {"electrons", j["electrons"]}})
                                .electrons;
        }
    } else if (has_protons) {
        mol = io::molecule_from_json(j, "molecule");
    } else {
        return;
    }
    try {
        mol.validate(cfg.grid);
    } catch (const DomainError &e) {
        throw ConfigError("molecule", e.what());
    }
    cfg.molecule = std::move(mol);
}

void parse_sweep(const Json &j, RunConfig &cfg) {
    check_keys(j, "sweep", {"distances", "multiples", "architectures", "jobs"});
    if (j.contains("distances") && j.contains("multiples")) {
        throw ConfigError("sweep", "give either 'distances' or 'multiples', not both");
    }
    if (j.contains("distances")) {
        const Json &d = j["distances"];
        if (!d.is_array() || d.empty()) {
            throw ConfigError("sweep.distances", "expected a non-empty array");
        }
        cfg.sweep.distances.clear();
        for (const auto &v : d) {
            if (!v.is_number()) {
                throw ConfigError("sweep.distances", "expected numbers");
            }
            const std::size_t m =
                checked_multiple(cfg.grid, v.get<double>(), "sweep.distances");
            cfg.sweep.distances.push_back(static_cast<double>(m) * cfg.grid.delta_r());
        }
    }
    if (j.contains("multiples")) {
        const Json &d = j["multiples"];
        if (!d.is_array() || d.empty()) {
            throw ConfigError("sweep.multiples", "expected a non-empty array");
        }
        cfg.sweep.distances.clear();
        for (const auto &v : d) {
            if (!is_count(v) || v.get<std::uint64_t>() == 0) {
                throw ConfigError("sweep.multiples", "expected positive integers");
            }
            cfg.sweep.distances.push_back(static_cast<double>(v.get<std::uint64_t>()) *
                                          cfg.grid.delta_r());
        }
    }
    if (j.contains("architectures")) {
        cfg.sweep.architectures = parse_architectures(j["architectures"]);
    }
    if (j.contains("jobs")) {
        if (!is_count(j["jobs"]) || j["jobs"].get<std::uint64_t>() == 0) {
            throw ConfigError("sweep.jobs", "expected a positive integer");
        }
        cfg.sweep.jobs = j["jobs"].get<std::size_t>();
    }
}

} // namespace

Json load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot read " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw ConfigError("config", path.string() + ": " + e.what());
    }
}

void apply_override(Json &document, std::string_view dotted_key, std::string_view value) {
    if (dotted_key.empty()) {
        throw ConfigError("<override>", "empty key");
    }
    if (!document.is_object()) {
        throw ConfigError("config", "expected an object");
    }
    Json *node = &document;
    std::string path;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = dotted_key.find('.', start);
        const std::string key(dotted_key.substr(start, dot - start));
        if (key.empty()) {
            throw ConfigError(std::string(dotted_key), "empty path component");
        }
        path += (path.empty() ? "" : ".") + key;
        if (dot == std::string_view::npos) {
            Json parsed;
            try {
                parsed = Json::parse(value);
            } catch (const Json::parse_error &) {
                parsed = std::string(value);
            }
            (*node)[key] = std::move(parsed);
            return;
        }
        Json &child = (*node)[key];
        if (child.is_null()) {
            child = Json::object();
        } else if (!child.is_object()) {
            throw ConfigError(path, "not a section");
        }
        node = &child;
        start = dot + 1;
    }
}

RunConfig parse_run_config(const Json &document, const std::vector<std::string> &required) {
    check_keys(document, "",
               {"grid", "molecule", "architecture", "optimizer", "sweep", "output", "seed"});
    for (const auto &key : required) {
        if (!document.contains(key)) {
            throw ConfigError(key, "missing key");
        }
    }
    RunConfig cfg;
    cfg.document = document;
    if (document.contains("grid")) {
        check_keys(document["grid"], "grid", {"qubits_per_dim", "r_min", "r_max", "epsilon"});
        cfg.grid = io::grid_from_json(document["grid"], "grid");
    } else {
        cfg.grid = GridSpec::default_experiment();
    }
    if (document.contains("architecture")) {
        check_keys(document["architecture"], "architecture",
                   {"variant", "he_layers", "sn_blocks", "one_body_blocks", "two_body_blocks",
                    "two_body_gate"});
        cfg.architecture = io::architecture_from_json(document["architecture"], "architecture");
    }
    if (document.contains("optimizer")) {
        check_keys(document["optimizer"], "optimizer",
                   {"steps", "learning_rate", "beta1", "beta2", "epsilon", "seed", "init_scale",
                    "restarts"});
        cfg.optimizer = io::optimizer_from_json(document["optimizer"], "optimizer");
    }
    if (document.contains("seed")) {
        const Json &s = document["seed"];
        if (!is_count(s)) {
            throw ConfigError("seed", "expected a non-negative integer");
        }
        cfg.optimizer.seed = s.get<std::uint64_t>();
    }
    if (document.contains("output")) {
        if (!document["output"].is_string() || document["output"].get<std::string>().empty()) {
            throw ConfigError("output", "expected a directory name");
        }
        cfg.output_dir = document["output"].get<std::string>();
    }
    if (document.contains("molecule")) {
        parse_molecule(document["molecule"], cfg);
    }
    cfg.sweep.distances = default_distances(cfg.grid);
    if (document.contains("sweep")) {
        parse_sweep(document["sweep"], cfg);
    }
    return cfg;
}

std::vector<double> default_distances(const GridSpec &grid) {
    std::vector<double> d;
    for (std::size_t m = 1; m <= 16; ++m) {
        d.push_back(static_cast<double>(m) * grid.delta_r());
    }
    return d;
}

Json default_config() {
    const GridSpec grid = GridSpec::default_experiment();
    Json j;
    j["grid"] = io::to_json(grid);
    j["molecule"] = Json{{"distance", 16 * grid.delta_r()}};
    j["architecture"] = io::to_json(Architecture{});
    j["optimizer"] = io::to_json(OptimizerConfig{});
    Json multiples = Json::array();
    for (int m = 1; m <= 16; ++m) {
        multiples.push_back(m);
    }
    j["sweep"] = Json{{"multiples", multiples}, {"architectures", {"HF", "MC"}}, {"jobs", 1}};
    j["output"] = "out";
    return j;
}

} // namespace fqvqe::cli
