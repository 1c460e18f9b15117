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

#include <stdexcept>
#include <string>

namespace fqvqe {

/// Violated precondition (bad index, mismatched sizes, invalid spec).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Request outside the supported configuration space (e.g. more than two
/// electrons).
class UnsupportedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid or incomplete run configuration. `key_path()` names the
/// offending dotted key.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key_path, const std::string &message)
        : std::runtime_error(key_path + ": " + message),
          key_path_(std::move(key_path)) {}

    [[nodiscard]] const std::string &key_path() const noexcept {
        return key_path_;
    }

  private:
    std::string key_path_;
};

/// Malformed input file (state dump, parameter file).
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure (non-finite values, eigensolver trouble).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace fqvqe
