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

#include "fqvqe/io.hpp"

#include "fqvqe/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fqvqe::io {
namespace {

std::string join(const std::string &path, const char *key) {
    return path.empty() ? std::string(key) : path + "." + key;
}

void require_object(const Json &j, const std::string &path) {
    if (!j.is_object()) {
        throw ConfigError(path, "expected an object");
    }
}

const Json *find(const Json &j, const char *key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double read_double(const Json &j, const std::string &path, const char *key, double fallback) {
    const Json *v = find(j, key);
    if (v == nullptr) {
        return fallback;
    }
    if (!v->is_number()) {
        throw ConfigError(join(path, key), "expected a number");
    }
    const double x = v->get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError(join(path, key), "not finite");
    }
    return x;
}

std::uint64_t read_uint(const Json &j, const std::string &path, const char *key,
                        std::uint64_t fallback) {
    const Json *v = find(j, key);
    if (v == nullptr) {
        return fallback;
    }
    if (!v->is_number_integer() || (v->is_number_integer() && !v->is_number_unsigned() &&
                                     v->get<std::int64_t>() < 0)) {
        throw ConfigError(join(path, key), "expected a non-negative integer");
    }
    return v->get<std::uint64_t>();
}

std::string read_string(const Json &j, const std::string &path, const char *key,
                        const std::string &fallback) {
    const Json *v = find(j, key);
    if (v == nullptr) {
        return fallback;
    }
    if (!v->is_string()) {
        throw ConfigError(join(path, key), "expected a string");
    }
    return v->get<std::string>();
}

template <class F> auto validated(const std::string &path, F &&make) {
    try {
        return make();
    } catch (const DomainError &e) {
        throw ConfigError(path, e.what());
    }
}

std::ifstream open_in(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    return in;
}

std::ofstream open_out(const std::filesystem::path &path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path.string());
    }
    return out;
}

double parse_double(const std::string &token, std::size_t line) {
    char *end = nullptr;
    const double x = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size()) {
        throw FormatError("line " + std::to_string(line) + ": bad number '" + token + "'");
    }
    return x;
}

} // namespace

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

Json to_json(const GridSpec &grid) {
    return Json{{"qubits_per_dim", grid.qubits_per_dim},
                {"r_min", grid.r_min},
                {"r_max", grid.r_max},
                {"epsilon", grid.epsilon}};
}

Json to_json(const MoleculeSpec &molecule) {
    Json protons = Json::array();
    for (const auto &p : molecule.protons) {
        protons.push_back(Json{{"position", p.position}, {"charge", p.charge}});
    }
    return Json{{"protons", protons}, {"electrons", molecule.electrons}};
}

Json to_json(const RegisterLayout &layout) {
    return Json{{"electrons", layout.electrons}, {"spatial_qubits", layout.spatial_qubits}};
}

Json to_json(const Architecture &arch) {
    return Json{{"variant", std::string(variant_name(arch.variant))},
                {"he_layers", arch.he_layers},
                {"sn_blocks", arch.sn_blocks},
                {"one_body_blocks", arch.one_body_blocks},
                {"two_body_blocks", arch.two_body_blocks},
                {"two_body_gate", std::string(two_body_gate_name(arch.two_body_gate))}};
}

Json to_json(const OptimizerConfig &config) {
    return Json{{"steps", config.steps},
                {"learning_rate", config.learning_rate},
                {"beta1", config.beta1},
                {"beta2", config.beta2},
                {"epsilon", config.epsilon},
                {"seed", config.seed},
                {"init_scale", config.init_scale},
                {"restarts", config.restarts}};
}

Json to_json(const EnergyBreakdown &energy) {
    return Json{{"kinetic", energy.kinetic},
                {"electron_nuclear", energy.electron_nuclear},
                {"electron_electron", energy.electron_electron},
                {"nuclear_nuclear", energy.nuclear_nuclear},
                {"total", energy.total}};
}

GridSpec grid_from_json(const Json &j, const std::string &path) {
    require_object(j, path);
    GridSpec g;
    g.qubits_per_dim = read_uint(j, path, "qubits_per_dim", g.qubits_per_dim);
    g.r_min = read_double(j, path, "r_min", g.r_min);
    g.r_max = read_double(j, path, "r_max", g.r_max);
    const bool has_eps = find(j, "epsilon") != nullptr;
    if (!has_eps) {
        g.epsilon = 0.5 * g.delta_r();
    }
    g.epsilon = read_double(j, path, "epsilon", g.epsilon);
    return validated(path, [&] {
        g.validate();
        return g;
    });
}

MoleculeSpec molecule_from_json(const Json &j, const std::string &path) {
    require_object(j, path);
    MoleculeSpec m;
    const Json *protons = find(j, "protons");
    if (protons == nullptr) {
        throw ConfigError(join(path, "protons"), "missing key");
    }
    if (!protons->is_array()) {
        throw ConfigError(join(path, "protons"), "expected an array");
    }
    for (std::size_t i = 0; i < protons->size(); ++i) {
        const std::string p = join(path, "protons") + "[" + std::to_string(i) + "]";
        const Json &entry = (*protons)[i];
        require_object(entry, p);
        if (find(entry, "position") == nullptr) {
            throw ConfigError(p + ".position", "missing key");
        }
        m.protons.push_back(Proton{read_double(entry, p, "position", 0.0),
                                   read_double(entry, p, "charge", 1.0)});
    }
    m.electrons = read_uint(j, path, "electrons", m.electrons);
    return m;
}

RegisterLayout layout_from_json(const Json &j, const std::string &path) {
    require_object(j, path);
    RegisterLayout l;
    l.electrons = read_uint(j, path, "electrons", l.electrons);
    l.spatial_qubits = read_uint(j, path, "spatial_qubits", l.spatial_qubits);
    return l;
}

Architecture architecture_from_json(const Json &j, const std::string &path) {
    require_object(j, path);
    Architecture a;
    const std::string variant = read_string(j, path, "variant", "MC");
    a.variant = validated(join(path, "variant"), [&] { return parse_variant(variant); });
    a.he_layers = read_uint(j, path, "he_layers", a.he_layers);
    a.sn_blocks = read_uint(j, path, "sn_blocks", a.sn_blocks);
    a.one_body_blocks = read_uint(j, path, "one_body_blocks", a.one_body_blocks);
    a.two_body_blocks = read_uint(j, path, "two_body_blocks", a.one_body_blocks - 1);
    const std::string gate = read_string(j, path, "two_body_gate", "RSP");
    a.two_body_gate =
        validated(join(path, "two_body_gate"), [&] { return parse_two_body_gate(gate); });
    return validated(path, [&] {
        a.validate();
        return a;
    });
}

OptimizerConfig optimizer_from_json(const Json &j, const std::string &path) {
    require_object(j, path);
    OptimizerConfig c;
    c.steps = read_uint(j, path, "steps", c.steps);
    c.learning_rate = read_double(j, path, "learning_rate", c.learning_rate);
    c.beta1 = read_double(j, path, "beta1", c.beta1);
    c.beta2 = read_double(j, path, "beta2", c.beta2);
    c.epsilon = read_double(j, path, "epsilon", c.epsilon);
    c.seed = read_uint(j, path, "seed", c.seed);
    c.init_scale = read_double(j, path, "init_scale", c.init_scale);
    c.restarts = read_uint(j, path, "restarts", c.restarts);
    return validated(path, [&] {
        c.validate();
        return c;
    });
}

void write_state(std::ostream &out, const StateVector &state, const StateHeader &header) {
    Json h{{"format", kStateFormat},
           {"version", kFormatVersion},
           {"num_qubits", state.num_qubits()},
           {"layout", to_json(header.layout)},
           {"grid", to_json(header.grid)},
           {"molecule", to_json(header.molecule)},
           {"metadata", header.metadata}};
    out << h.dump() << '\n';
    for (const cplx &a : state.amplitudes()) {
        out << format_double(a.real()) << ' ' << format_double(a.imag()) << '\n';
    }
}

void write_state(const std::filesystem::path &path, const StateVector &state,
                 const StateHeader &header) {
    auto out = open_out(path);
    write_state(out, state, header);
}

StateFile read_state(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("state dump: missing header");
    }
    Json h;
    try {
        h = Json::parse(line);
    } catch (const Json::parse_error &e) {
        throw FormatError(std::string("state dump: header is not JSON: ") + e.what());
    }
    StateHeader header;
    std::size_t nq = 0;
    try {
        require_object(h, "header");
        if (read_string(h, "header", "format", "") != kStateFormat) {
            throw ConfigError("header.format", "expected '" + std::string(kStateFormat) + "'");
        }
        if (read_uint(h, "header", "version", 0) != kFormatVersion) {
            throw ConfigError("header.version", "unsupported version");
        }
        nq = read_uint(h, "header", "num_qubits", 0);
        for (const char *key : {"layout", "grid", "molecule"}) {
            if (find(h, key) == nullptr) {
                throw ConfigError(join("header", key), "missing key");
            }
        }
        header.layout = layout_from_json(h["layout"], "header.layout");
        header.grid = grid_from_json(h["grid"], "header.grid");
        header.molecule = molecule_from_json(h["molecule"], "header.molecule");
        if (const Json *meta = find(h, "metadata")) {
            header.metadata = *meta;
        }
    } catch (const ConfigError &e) {
        throw FormatError(std::string("state dump: ") + e.what());
    }
    if (nq == 0 || nq > 26) {
        throw FormatError("state dump: num_qubits out of range");
    }
    if (header.layout.total_qubits() != nq ||
        header.layout.spatial_qubits != header.grid.qubits_per_dim) {
        throw FormatError("state dump: layout does not match num_qubits or grid");
    }
    const std::size_t dim = std::size_t{1} << nq;
    std::vector<cplx> amps;
    amps.reserve(dim);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string re, im, extra;
        if (!(ls >> re >> im) || (ls >> extra)) {
            throw FormatError("state dump: line " + std::to_string(line_no) +
                              ": expected 're im'");
        }
        amps.emplace_back(parse_double(re, line_no), parse_double(im, line_no));
    }
    if (amps.size() != dim) {
        throw FormatError("state dump: expected " + std::to_string(dim) + " amplitudes, found " +
                          std::to_string(amps.size()));
    }
    try {
        return StateFile{std::move(header), StateVector::from_amplitudes(std::move(amps), 1e-8)};
    } catch (const DomainError &e) {
        throw FormatError(std::string("state dump: ") + e.what());
    }
}

StateFile read_state(const std::filesystem::path &path) {
    auto in = open_in(path);
    return read_state(in);
}

Json to_json(const ParameterFile &params) {
    return Json{{"format", kParameterFormat},
                {"version", kFormatVersion},
                {"architecture", to_json(params.architecture)},
                {"grid", to_json(params.grid)},
                {"molecule", to_json(params.molecule)},
                {"seed", params.seed},
                {"energy", params.energy},
                {"theta", params.theta}};
}

ParameterFile parameters_from_json(const Json &j) {
    try {
        require_object(j, "");
        if (read_string(j, "", "format", "") != kParameterFormat) {
            throw ConfigError("format", "expected '" + std::string(kParameterFormat) + "'");
        }
        for (const char *key : {"architecture", "grid", "molecule", "theta"}) {
            if (find(j, key) == nullptr) {
                throw ConfigError(key, "missing key");
            }
        }
        ParameterFile p;
        p.architecture = architecture_from_json(j["architecture"]);
        p.grid = grid_from_json(j["grid"]);
        p.molecule = molecule_from_json(j["molecule"]);
        p.seed = read_uint(j, "", "seed", 0);
        p.energy = read_double(j, "", "energy", 0.0);
        const Json &theta = j["theta"];
        if (!theta.is_array()) {
            throw ConfigError("theta", "expected an array");
        }
        for (const auto &v : theta) {
            if (!v.is_number()) {
                throw ConfigError("theta", "expected numbers");
            }
            p.theta.push_back(v.get<double>());
        }
        return p;
    } catch (const ConfigError &e) {
        throw FormatError(std::string("parameter file: ") + e.what());
    }
}

void write_parameters(const std::filesystem::path &path, const ParameterFile &params) {
    write_json(path, to_json(params));
}

ParameterFile read_parameters(const std::filesystem::path &path) {
    return parameters_from_json(read_json(path));
}

void write_csv(std::ostream &out, const CsvTable &table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out << (i ? "," : "") << table.header[i];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_double(row[i]);
        }
        out << '\n';
    }
}

void write_csv(const std::filesystem::path &path, const CsvTable &table) {
    auto out = open_out(path);
    write_csv(out, table);
}

CsvTable read_csv(std::istream &in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("csv: missing header");
    }
    {
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            table.header.push_back(cell);
        }
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            row.push_back(parse_double(cell, line_no));
        }
        if (row.size() != table.header.size()) {
            throw FormatError("csv: line " + std::to_string(line_no) + ": column count");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path &path) {
    auto in = open_in(path);
    return read_csv(in);
}

CsvTable trace_table(const RunTrace &trace) {
    CsvTable t{{"step", "energy", "grad_norm"}, {}};
    t.rows.reserve(trace.energies.size());
    for (std::size_t i = 0; i < trace.energies.size(); ++i) {
        t.rows.push_back({static_cast<double>(i), trace.energies[i], trace.gradient_norms[i]});
    }
    return t;
}

void write_json(const std::filesystem::path &path, const Json &j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

Json read_json(const std::filesystem::path &path) {
    auto in = open_in(path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

} // namespace fqvqe::io
