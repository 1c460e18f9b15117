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
 * Batch commands. Each returns a process exit code: 0 on success, 2 for
 * configuration or file-format errors, 1 for any other failure.
 */
#pragma once

#include "fqvqe/cli/config.hpp"
#include "fqvqe/error.hpp"

#include <exception>
#include <filesystem>
#include <ostream>

namespace fqvqe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// trace.csv, summary.json, state.txt and theta.json in the output directory.
int cmd_vqe(const RunConfig &config, std::ostream &log);

/// exact.json plus one fermionic ground-state dump per distance.
int cmd_exact(const RunConfig &config, std::ostream &log);

/// curve.csv, entropy.csv, pec.json and the best state per point.
int cmd_pec(const RunConfig &config, std::ostream &log);

struct AnalyzeOptions {
    std::filesystem::path state;
    std::filesystem::path output_dir = "analysis";
    std::size_t max_orbitals = 4;
};

/// Swap test, spin blocks, Schmidt spectra, entropy and orbital tables of a
/// saved state.
int cmd_analyze(const AnalyzeOptions &options, std::ostream &log);

/// Runs `body`, mapping exceptions to exit codes and writing the message to
/// `err`.
template <class F> int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError &e) {
        err << "format error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace fqvqe::cli
