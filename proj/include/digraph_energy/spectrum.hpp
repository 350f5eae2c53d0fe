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

// Adjacency spectra of digraphs.
//
// Eigenvalues come from two routes that must agree: a Hessenberg/shifted-QR
// solve of the adjacency matrix, and the roots of the exact integer
// characteristic polynomial. The polynomial is split into square-free
// factors first, so repeated eigenvalues (which QR only resolves to about
// eps^(1/m)) are located to full precision and carry exact multiplicities.
// The returned values are the polynomial-route roots.

#pragma once

#include <complex>
#include <vector>

#include "digraph_energy/digraph.hpp"
#include "digraph_energy/polynomial.hpp"

namespace digraph_energy {

/// Phi_D(x) = det(xI - A) = sum coeffs[k] x^k; monic of degree n.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  IntPolynomial polynomial() const { return IntPolynomial(coeffs); }
  std::string to_string() const { return polynomial().to_string(); }
  bool operator==(const CharPoly&) const = default;
};

/// Exact coefficients by the Faddeev-LeVerrier recurrence, run in checked
/// 64-bit arithmetic and redone in arbitrary precision on overflow.
CharPoly characteristic_polynomial(const Digraph& d);

struct Spectrum {
  /// Sorted by (Re desc, Im desc); non-real values come in exact conjugate
  /// pairs.
  std::vector<std::complex<double>> eigenvalues;
  double rho = 0;
  double energy = 0;
  double sum_re_sq = 0;
  double sum_im_sq = 0;
  /// max_i |Phi_D(z_i)| / (1 + rho)^n for the returned values.
  double residual = 0;
};

struct SpectrumOptions {
  /// Eigenvalues with |Im| <= snap_tolerance * (1 + rho) are made real.
  double snap_tolerance = 1e-10;
  /// Largest accepted normalized residual.
  double residual_tolerance = 1e-8;
};

Spectrum eigenvalues(const Digraph& d, SpectrumOptions options = {});

double spectral_radius(const Digraph& d);
double energy(const Digraph& d);

/// Largest eigenvalue modulus of a symmetric real matrix (e.g. S(A) or
/// S(A)^2), by a symmetric eigensolver.
double symmetric_spectral_radius(const AdjacencyMatrix& s);

/// S(A)^2 as a dense matrix.
AdjacencyMatrix square(const AdjacencyMatrix& m);

struct MomentIdentities {
  double sum_re_sq = 0;
  double sum_im_sq = 0;
  double lemma_i_residual = 0;  // (sum Re^2 - sum Im^2) - c2, ~0
  double lemma_ii_slack = 0;    // a - (sum Re^2 + sum Im^2), >= 0
};

MomentIdentities moment_identities(const Digraph& d);
MomentIdentities moment_identities(const Spectrum& s, const ClosedWalkProfile& p);

// ---------------------------------------------------------------------------
// Coulson-type integral

/// (1/pi) * integral over R of (n - ix Phi'(ix) / Phi(ix)) dx, evaluated from
/// the characteristic polynomial alone (no eigenvalues) by the substitution
/// x = tan(theta) and adaptive Gauss-Legendre quadrature.
///
/// Throws PurelyImaginaryEigenvalue when Phi has a root iy with y != 0 real
/// (the integrand then has a pole at x = y), and DomainError unless
/// rel_tol is in (0, 1).
double coulson_energy(const Digraph& d, double rel_tol = 1e-6);
double coulson_energy(const CharPoly& phi, double rel_tol = 1e-6);

/// Real y != 0 with Phi(iy) = 0, found from the exact gcd of the real and
/// imaginary parts of Phi(iy). Sorted ascending.
std::vector<double> imaginary_axis_poles(const CharPoly& phi);

}  // namespace digraph_energy
