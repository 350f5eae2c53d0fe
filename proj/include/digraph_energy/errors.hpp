// Copyright 2026 The digraph-energy Authors
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

namespace digraph_energy {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid edge-list input. `line()` is 1-based, 0 when the
/// problem is not tied to a single line (e.g. an empty document).
class InputError : public Error {
 public:
  InputError(const std::string& what, int line) : Error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Text that does not follow the edge-list grammar.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed text describing something that is not a simple digraph
/// (loop, vertex out of range).
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Argument outside the domain of an operation (n = 0 for an average, an
/// enumeration size over the cap, a probability outside [0, 1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The walk-ratio bound q = sum(t2^2)/sum(c2^2) exceeded the arc count, so
/// the energy bound built on it has a negative radicand.
class BoundInapplicable : public Error {
 public:
  using Error::Error;
};

/// An internal numerical consistency check failed (e.g. rho^2 > a beyond
/// tolerance). Indicates a solver or formula defect, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The eigensolver did not converge, or its two routes disagree.
class EigenSolverError : public Error {
 public:
  using Error::Error;
};

/// The Coulson integrand has a pole on the imaginary axis.
class PurelyImaginaryEigenvalue : public Error {
 public:
  PurelyImaginaryEigenvalue(const std::string& what, double abscissa)
      : Error(what), abscissa_(abscissa) {}
  /// The x at which Phi(ix) vanishes.
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Unknown check name or other invalid verification setup.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

}  // namespace digraph_energy
