// Copyright 2026 The fermap Authors
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

#include <stdexcept>
#include <string>

namespace fermap {

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix() : std::runtime_error("matrix is singular over F2") {}
};

/// Malformed text input (Pauli strings, matrices, trees, mapping files).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a Fock state is requested for a mapping with an entangled vacuum.
class NonProductVacuum : public std::runtime_error {
 public:
  NonProductVacuum() : std::runtime_error("vacuum is not a product state") {}
};

}  // namespace fermap
