// Copyright 2026 The qcorr Authors
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

namespace qcorr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions are incompatible or outside {2, 3, 4}.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violated a documented precondition (e.g. a non-Hermitian matrix
/// passed to a Hermitian-only routine).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A state or state parameter is invalid. `invariant()` names the violated
/// condition, e.g. "positive_semidefinite" or "rho_d.s_max".
class InvalidState : public Error {
 public:
  InvalidState(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// A closed form hit a vanishing denominator outside its known degenerate set.
class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcorr
