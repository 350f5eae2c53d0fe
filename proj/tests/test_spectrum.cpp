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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "digraph_energy/errors.hpp"
#include "digraph_energy/families.hpp"
#include "digraph_energy/oracle.hpp"
#include "digraph_energy/spectrum.hpp"

namespace de = digraph_energy;
using de::Digraph;

namespace {

Digraph sym(const de::Graph& g) { return de::symmetric_digraph(g); }
Digraph c3() { return de::families::directed_cycle(3); }

de::CharPoly poly(std::initializer_list<long long> coeffs) {
  de::CharPoly p;
  for (long long c : coeffs) p.coeffs.emplace_back(c);
  return p;
}

}  // namespace

TEST(CharacteristicPolynomial, Examples) {
  EXPECT_EQ(de::characteristic_polynomial(sym(de::families::complete(2))), poly({-1, 0, 1}));
  EXPECT_EQ(de::characteristic_polynomial(c3()), poly({-1, 0, 0, 1}));
  const de::CharPoly k3 = de::characteristic_polynomial(sym(de::families::complete(3)));
  EXPECT_EQ(k3, poly({-2, -3, 0, 1}));
  EXPECT_EQ(k3.to_string(), "x^3 - 3x - 2");
  EXPECT_EQ(de::characteristic_polynomial(Digraph(3)), poly({0, 0, 0, 1}));
}

// Faddeev-LeVerrier traces overflow 64 bits here; the result must still be
// (x - 21)(x + 1)^21.
TEST(CharacteristicPolynomial, ExactBeyondInt64) {
  const int n = 22;
  de::IntPolynomial expected{-(n - 1), 1};
  for (int k = 0; k < n - 1; ++k) expected = expected * de::IntPolynomial{1, 1};
  const de::CharPoly phi = de::characteristic_polynomial(sym(de::families::complete(n)));
  EXPECT_EQ(phi.polynomial(), expected);
}

TEST(Eigenvalues, CompletePair) {
  const de::Spectrum s = de::eigenvalues(sym(de::families::complete(2)));
  ASSERT_EQ(s.eigenvalues.size(), 2U);
  EXPECT_NEAR(s.eigenvalues[0].real(), 1.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1].real(), -1.0, 1e-12);
  EXPECT_NEAR(s.rho, 1.0, 1e-12);
  EXPECT_NEAR(s.energy, 2.0, 1e-12);
}

TEST(Eigenvalues, DirectedTriangleSortedAndConjugate) {
  const de::Spectrum s = de::eigenvalues(c3());
  ASSERT_EQ(s.eigenvalues.size(), 3U);
  EXPECT_NEAR(s.eigenvalues[0].real(), 1.0, 1e-12);
  EXPECT_EQ(s.eigenvalues[0].imag(), 0.0);
  EXPECT_NEAR(s.eigenvalues[1].real(), -0.5, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1].imag(), std::sqrt(3.0) / 2, 1e-12);
  EXPECT_EQ(s.eigenvalues[2], std::conj(s.eigenvalues[1]));
  EXPECT_NEAR(s.rho, 1.0, 1e-12);
  EXPECT_NEAR(s.energy, 2.0, 1e-12);
}

TEST(Eigenvalues, CompleteTriangle) {
  const de::Spectrum s = de::eigenvalues(sym(de::families::complete(3)));
  EXPECT_NEAR(s.eigenvalues[0].real(), 2.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1].real(), -1.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[2].real(), -1.0, 1e-12);
  EXPECT_NEAR(s.energy, 4.0, 1e-12);
}

TEST(Eigenvalues, NilpotentPath) {
  const de::Spectrum s = de::eigenvalues(de::families::directed_path(3));
  for (const auto& z : s.eigenvalues) EXPECT_EQ(z, std::complex<double>(0, 0));
  EXPECT_EQ(s.energy, 0.0);
}

TEST(Eigenvalues, DefectiveMatrixWithStalledQr) {
  // Jordan blocks at 1 and -1; plain shifted QR stalls on this matrix.
  const Digraph d(5, {{0, 1}, {1, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 2}, {4, 0}});
  const de::Spectrum s = de::eigenvalues(d);
  EXPECT_NEAR(s.rho, 1.0, 1e-12);
  EXPECT_NEAR(s.energy, 4.0, 1e-12);
}

TEST(SpectralRadius, Examples) {
  EXPECT_EQ(de::spectral_radius(Digraph(3)), 0.0);
  EXPECT_NEAR(de::spectral_radius(c3()), 1.0, 1e-12);
  EXPECT_NEAR(de::spectral_radius(sym(de::families::complete_bipartite(1, 2))), std::sqrt(2.0),
              1e-12);
}

TEST(Energy, Examples) {
  EXPECT_NEAR(de::energy(sym(de::families::complete(3))), 4.0, 1e-12);
  EXPECT_NEAR(de::energy(c3()), 2.0, 1e-12);
  EXPECT_EQ(de::energy(de::families::directed_path(3)), 0.0);
}

TEST(Eigenvalues, AgreesWithSymmetricSolverOnGraphs) {
  for (const de::Graph& g : {de::families::petersen(), de::families::cycle(7),
                             de::families::rook(3), de::families::path(6)}) {
    const Digraph d = sym(g);
    EXPECT_NEAR(de::spectral_radius(d), de::symmetric_spectral_radius(de::adjacency_matrix(d)),
                1e-10);
  }
}

TEST(MomentIdentities, Examples) {
  const de::MomentIdentities k2 = de::moment_identities(sym(de::families::complete(2)));
  EXPECT_NEAR(k2.sum_re_sq, 2.0, 1e-12);
  EXPECT_NEAR(k2.sum_im_sq, 0.0, 1e-12);
  EXPECT_NEAR(k2.lemma_i_residual, 0.0, 1e-12);
  EXPECT_NEAR(k2.lemma_ii_slack, 0.0, 1e-12);

  const de::MomentIdentities c = de::moment_identities(c3());
  EXPECT_NEAR(c.sum_re_sq, 1.5, 1e-12);
  EXPECT_NEAR(c.sum_im_sq, 1.5, 1e-12);
  EXPECT_NEAR(c.lemma_i_residual, 0.0, 1e-12);
  EXPECT_NEAR(c.lemma_ii_slack, 0.0, 1e-12);

  const de::MomentIdentities tail = de::moment_identities(Digraph(3, {{0, 1}, {1, 0}, {1, 2}}));
  EXPECT_NEAR(tail.lemma_i_residual, 0.0, 1e-12);
  EXPECT_NEAR(tail.lemma_ii_slack, 1.0, 1e-12);
}

TEST(Coulson, Examples) {
  EXPECT_NEAR(de::coulson_energy(sym(de::families::complete(2))), 2.0, 2e-6);
  EXPECT_NEAR(de::coulson_energy(sym(de::families::complete(3))), 4.0, 4e-6);
  EXPECT_NEAR(de::coulson_energy(c3()), 2.0, 2e-6);
  EXPECT_EQ(de::coulson_energy(Digraph(3)), 0.0);
  EXPECT_NEAR(de::coulson_energy(sym(de::families::petersen())),
              de::energy(sym(de::families::petersen())), 1e-5);
}

TEST(Coulson, DirectedFourCycleHasPole) {
  try {
    de::coulson_energy(de::families::directed_cycle(4));
    FAIL() << "no pole reported";
  } catch (const de::PurelyImaginaryEigenvalue& e) {
    EXPECT_NEAR(std::fabs(e.abscissa()), 1.0, 1e-9);
    EXPECT_NE(std::string(e.what()).find("PurelyImaginaryEigenvalue"), std::string::npos);
  }
  const auto poles = de::imaginary_axis_poles(de::characteristic_polynomial(
      de::families::directed_cycle(4)));
  ASSERT_EQ(poles.size(), 2U);
  EXPECT_NEAR(poles[0], -1.0, 1e-9);
  EXPECT_NEAR(poles[1], 1.0, 1e-9);
}

TEST(Coulson, RejectsBadTolerance) {
  EXPECT_THROW(de::coulson_energy(c3(), 0.0), de::DomainError);
  EXPECT_THROW(de::coulson_energy(c3(), 1.0), de::DomainError);
}

TEST(Coulson, MatchesEnergyOnRandomDigraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph d = de::random_digraph(7, 0.35, seed);
    const de::Spectrum s = de::eigenvalues(d);
    if (!de::imaginary_axis_poles(de::characteristic_polynomial(d)).empty()) continue;
    EXPECT_NEAR(de::coulson_energy(d), s.energy, 1e-6 * std::max(1.0, s.energy)) << seed;
  }
}
