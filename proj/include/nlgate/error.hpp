// Copyright 2026 The nlgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace nlgate {

/// Coarse error category; the CLI maps each to its own exit code.
enum class ErrorKind {
    parse,       // malformed input text
    validation,  // well-formed input violating a structural constraint
    domain,      // parameter outside the mathematical domain of an operation
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string &what) { return Error(ErrorKind::parse, what); }
inline Error validation_error(const std::string &what) { return Error(ErrorKind::validation, what); }
inline Error domain_error(const std::string &what) { return Error(ErrorKind::domain, what); }

}  // namespace nlgate
