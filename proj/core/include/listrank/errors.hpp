// Copyright 2026 The listrank Authors.
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

#ifndef LISTRANK_ERRORS_HPP_
#define LISTRANK_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace listrank {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown candidate id.
class LookupError : public Error {
 public:
  explicit LookupError(const std::string& id)
      : Error("unknown id " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Malformed inputs: out-of-range indices, duplicates, size mismatches.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration or judge/pool incompatibility.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class NumericalDivergence : public Error {
 public:
  explicit NumericalDivergence(int step)
      : Error("non-finite objective at ascent step " + std::to_string(step)),
        step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

// A judge could not produce a valid permutation.
class JudgeFailure : public Error {
 public:
  JudgeFailure(const std::string& what, std::string diagnostics = {})
      : Error(what), diagnostics_(std::move(diagnostics)) {}
  const std::string& diagnostics() const { return diagnostics_; }

 private:
  std::string diagnostics_;
};

// Failure to decode a file. line is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace listrank

#endif  // LISTRANK_ERRORS_HPP_
