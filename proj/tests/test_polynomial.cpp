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

#include <algorithm>
#include <cmath>

#include "digraph_energy/polynomial.hpp"

namespace de = digraph_energy;
using de::IntPolynomial;

TEST(IntPolynomial, TrimsAndPrints) {
  const IntPolynomial p{-2, -3, 0, 1, 0, 0};
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.to_string(), "x^3 - 3x - 2");
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
  EXPECT_EQ((IntPolynomial{0, -1}).to_string(), "-x");
}

TEST(IntPolynomial, Arithmetic) {
  const IntPolynomial a{1, 1};   // x + 1
  const IntPolynomial b{-1, 1};  // x - 1
  EXPECT_EQ(a * b, (IntPolynomial{-1, 0, 1}));
  EXPECT_EQ(a - b, (IntPolynomial{2}));
  EXPECT_EQ(de::derivative(IntPolynomial{-2, -3, 0, 1}), (IntPolynomial{-3, 0, 3}));
}

TEST(IntPolynomial, ContentAndPrimitivePart) {
  const IntPolynomial p{-6, 4, -2};
  EXPECT_EQ(de::content(p), 2);
  EXPECT_EQ(de::primitive_part(p), (IntPolynomial{3, -2, 1}));
}

TEST(IntPolynomial, Gcd) {
  const IntPolynomial x_plus_1{1, 1};
  const IntPolynomial x_minus_2{-2, 1};
  const IntPolynomial x2_plus_1{1, 0, 1};
  EXPECT_EQ(de::gcd(x_plus_1 * x_plus_1 * x_minus_2, x_plus_1 * x2_plus_1), x_plus_1);
  EXPECT_EQ(de::gcd(x_minus_2, x2_plus_1).degree(), 0);
}

TEST(IntPolynomial, ExactQuotient) {
  const IntPolynomial a{1, 1};
  const IntPolynomial b{-2, 1};
  EXPECT_EQ(de::exact_quotient(a * b, b), a);
  EXPECT_THROW(de::exact_quotient(IntPolynomial{1, 0, 1}, b), std::domain_error);
}

TEST(SquarefreeDecomposition, CompleteGraphPolynomial) {
  // (x - 2)(x + 1)^2
  const auto parts = de::squarefree_decomposition(IntPolynomial{-2, -3, 0, 1});
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0], (std::pair{IntPolynomial{-2, 1}, 1}));
  EXPECT_EQ(parts[1], (std::pair{IntPolynomial{1, 1}, 2}));
}

TEST(SquarefreeDecomposition, ReassemblesProduct) {
  const IntPolynomial x{0, 1};
  const IntPolynomial q{-1, 0, 1};
  const IntPolynomial p = x * q * q * q;
  IntPolynomial product{1};
  for (const auto& [factor, multiplicity] : de::squarefree_decomposition(p))
    for (int k = 0; k < multiplicity; ++k) product = product * factor;
  EXPECT_EQ(product, p);
  EXPECT_THROW(de::squarefree_decomposition(IntPolynomial{}), std::domain_error);
}

TEST(FindRoots, UnitRoots) {
  auto roots = de::find_roots(IntPolynomial{-1, 0, 0, 0, 1});
  ASSERT_EQ(roots.size(), 4U);
  for (const auto& z : roots) {
    EXPECT_NEAR(std::abs(z), 1.0, 1e-14);
    EXPECT_LT(std::abs(de::evaluate(IntPolynomial{-1, 0, 0, 0, 1}, z)), 1e-13);
  }
}

TEST(FindRoots, RealRootsOfCubic) {
  auto roots = de::find_roots(IntPolynomial{0, -2, 0, 1});  // x^3 - 2x
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.real() < b.real(); });
  EXPECT_NEAR(roots[0].real(), -std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(roots[1].real(), 0.0, 1e-14);
  EXPECT_NEAR(roots[2].real(), std::sqrt(2.0), 1e-14);
  for (const auto& z : roots) EXPECT_NEAR(z.imag(), 0.0, 1e-14);
}

TEST(FindRoots, ConstantHasNone) { EXPECT_TRUE(de::find_roots(IntPolynomial{5}).empty()); }
