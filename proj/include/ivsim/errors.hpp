// Copyright 2026 The ivsim Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid domain inputs: reversed interval endpoints, division by an
// interval containing zero, midpoint of an unbounded interval.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Lexical, syntactic or semantic failure in a model or literal, with the
// 1-based character position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(0) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Failure while evaluating a model: missing history, division by zero.
// Simulators attach the iteration index at which evaluation failed.
class EvalError : public Error {
 public:
  explicit EvalError(const std::string& what) : Error(what), step_(-1) {}
  EvalError(const std::string& what, long step)
      : Error(what + " (at n=" + std::to_string(step) + ")"), step_(step) {}
  long step() const { return step_; }  // -1 when not attached

 private:
  long step_;
};

// Invalid simulation or CLI configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ivsim
