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

// Univariate polynomials with arbitrary-precision integer coefficients:
// exact gcd and square-free decomposition over Z[x], plus Aberth-Ehrlich
// simultaneous root finding for the numeric side.

#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace digraph_energy {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients are stored low degree first and kept trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }
  /// Coefficient of x^k, zero beyond the degree.
  BigInt operator[](int k) const;

  bool operator==(const IntPolynomial&) const = default;

  /// Human form, e.g. "x^3 - 3x - 2".
  std::string to_string(char variable = 'x') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial derivative(const IntPolynomial& p);

/// gcd of the coefficients (non-negative; zero for the zero polynomial).
BigInt content(const IntPolynomial& p);

/// p / content(p) with a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Pseudo-remainder of a by b (b non-zero): lc(b)^(deg a - deg b + 1) a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
/// gcd(0, 0) is 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// a / b when b divides a in Z[x]; throws std::domain_error otherwise.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Yun's algorithm: p = c * prod f_i^(m_i) with the f_i primitive,
/// square-free, pairwise coprime and non-constant. Returned in increasing
/// multiplicity. The zero polynomial is rejected with std::domain_error.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

std::complex<double> evaluate(const IntPolynomial& p, std::complex<double> z);

/// p(z) and p'(z) in extended precision.
std::pair<std::complex<long double>, std::complex<long double>> evaluate_with_derivative(
    const IntPolynomial& p, std::complex<long double> z);

struct RootFindOptions {
  int max_iterations = 2000;
};

/// All deg(p) complex roots by Aberth-Ehrlich iteration followed by a
/// Newton polish. Intended for square-free input; repeated roots converge
/// only to about eps^(1/m). Throws std::runtime_error on non-convergence,
/// naming the roots that converged.
std::vector<std::complex<double>> find_roots(const IntPolynomial& p, RootFindOptions options = {});

}  // namespace digraph_energy
