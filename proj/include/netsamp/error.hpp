// Copyright 2026 The netsamp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETSAMP_ERROR_HPP_
#define NETSAMP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace netsamp {

// Broad failure class; the CLI maps it to an exit code.
enum class ErrorKind {
  kUsage = 2,    // invalid argument or configuration
  kData = 3,     // malformed or inconsistent input data
  kNumeric = 4,  // numeric degeneracy (zero variance, overflow, ...)
};

// Every library failure carries a stable code name (e.g. "DisconnectedPattern").
class Error : public std::runtime_error {
 public:
  Error(std::string code, ErrorKind kind, const std::string& message)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        kind_(kind) {}

  const std::string& code() const { return code_; }
  ErrorKind kind() const { return kind_; }

 private:
  std::string code_;
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(const std::string& code, ErrorKind kind,
                              const std::string& message) {
  throw Error(code, kind, message);
}

}  // namespace netsamp

#endif  // NETSAMP_ERROR_HPP_
