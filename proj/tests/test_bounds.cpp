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

#include "digraph_energy/bounds.hpp"
#include "digraph_energy/errors.hpp"
#include "digraph_energy/families.hpp"
#include "digraph_energy/oracle.hpp"

namespace de = digraph_energy;
using de::Digraph;

namespace {

constexpr double kTol = 1e-9;

Digraph sym(const de::Graph& g) { return de::symmetric_digraph(g); }
Digraph k2() { return sym(de::families::complete(2)); }
Digraph k3() { return sym(de::families::complete(3)); }
Digraph star12() { return sym(de::families::complete_bipartite(1, 2)); }
Digraph c3() { return de::families::directed_cycle(3); }

de::ClosedWalkProfile profile(const Digraph& d) { return de::walk_profile(d); }

}  // namespace

TEST(BoundNames, RoundTrip) {
  for (de::BoundId id : de::kAllBounds) EXPECT_EQ(de::bound_from_name(de::bound_name(id)), id);
  EXPECT_FALSE(de::bound_from_name("nope"));
}

TEST(RhoLower, Examples) {
  EXPECT_NEAR(de::rho_lower_gr(profile(k3()), 3), 2.0, kTol);
  EXPECT_NEAR(de::rho_lower_gr(profile(c3()), 3), 0.0, kTol);
  EXPECT_NEAR(de::rho_lower_gr(profile(star12()), 3), 4.0 / 3.0, kTol);

  EXPECT_NEAR(de::rho_lower_tc(profile(k3()), 3), 2.0, kTol);
  EXPECT_NEAR(de::rho_lower_tc(profile(star12()), 3), std::sqrt(2.0), kTol);
  EXPECT_NEAR(de::rho_lower_tc(profile(c3()), 3), 0.0, kTol);

  EXPECT_NEAR(de::rho_lower_new(profile(k3())), 2.0, kTol);
  EXPECT_NEAR(de::rho_lower_new(profile(star12())), std::sqrt(2.0), kTol);
  const Digraph c4_pendant = de::families::with_arcs(sym(de::families::cycle(4)), 1, {{0, 4}});
  EXPECT_NEAR(de::rho_lower_new(profile(c4_pendant)), 2.0, kTol);
}

TEST(RhoLower, ZeroVerticesRejected) {
  EXPECT_THROW(de::rho_lower_gr(de::ClosedWalkProfile{}, 0), de::DomainError);
  EXPECT_THROW(de::rho_lower_tc(de::ClosedWalkProfile{}, 0), de::DomainError);
}

TEST(EnergyUpper, McClelland) {
  EXPECT_NEAR(de::e_upper_mcclelland(profile(k2()), 2), 2.0, kTol);
  EXPECT_NEAR(de::e_upper_mcclelland(profile(k3()), 3), std::sqrt(18.0), kTol);
  EXPECT_NEAR(de::e_upper_mcclelland(profile(Digraph(3)), 3), 0.0, kTol);
}

TEST(EnergyUpper, Rho) {
  EXPECT_NEAR(de::e_upper_rho(k2()), 2.0, kTol);
  EXPECT_NEAR(de::e_upper_rho(k3()), 4.0, kTol);
  EXPECT_NEAR(de::e_upper_rho(c3()), 3.0, kTol);
  EXPECT_THROW(de::e_upper_rho(3.0, 3, 4), de::ConsistencyError);
}

TEST(EnergyUpper, Gr) {
  EXPECT_NEAR(de::e_upper_gr(profile(k3()), 3), 4.0, kTol);
  EXPECT_NEAR(de::e_upper_gr(profile(k2()), 2), 2.0, kTol);
  EXPECT_NEAR(de::e_upper_gr(profile(c3()), 3), std::sqrt(6.0), kTol);
}

TEST(EnergyUpper, Tc) {
  EXPECT_NEAR(de::e_upper_tc(profile(k3()), 3), 4.0, kTol);
  EXPECT_NEAR(de::e_upper_tc(profile(star12()), 3), std::sqrt(2.0) + 2.0, kTol);
  EXPECT_NEAR(de::e_upper_tc(profile(Digraph(2)), 2), 0.0, kTol);
}

TEST(EnergyUpper, New) {
  EXPECT_NEAR(de::e_upper_new(profile(k3()), 3), 4.0, kTol);
  EXPECT_NEAR(de::e_upper_new(profile(k2()), 2), 2.0, kTol);
  const double star = de::e_upper_new(profile(star12()), 3);
  EXPECT_NEAR(star, std::sqrt(2.0) + 2.0, kTol);
  EXPECT_GT(star, 2.0 * std::sqrt(2.0));
}

TEST(EnergyUpper, NewRejectsWalkRatioAboveArcCount) {
  // Not a digraph profile; q = 16 > a = 1.
  de::ClosedWalkProfile p;
  p.c2_seq = {1, 1};
  p.t2_seq = {4, 4};
  p.a = 1;
  p.c2_total = 2;
  p.sum_c2_sq = 2;
  p.sum_t2_sq = 32;
  EXPECT_THROW(de::e_upper_new(p, 2), de::BoundInapplicable);
}

TEST(EnergyEnvelope, ShapeOnFixedArguments) {
  const int n = 5;
  const double a = 8;
  const double peak = std::sqrt(a / n);
  EXPECT_NEAR(de::energy_envelope(peak, n, a), std::sqrt(n * a), kTol);
  EXPECT_LT(de::energy_envelope(0.5 * peak, n, a), de::energy_envelope(peak, n, a));
  EXPECT_LT(de::energy_envelope(std::sqrt(a), n, a), de::energy_envelope(1.5 * peak, n, a));
}

TEST(BoundChainReport, CompleteTriangle) {
  const de::BoundReport r = de::bound_chain_report(k3());
  EXPECT_TRUE(r.in_gamma);
  EXPECT_TRUE(r.chain_ok);
  for (auto x : {r.e_upper_rho, r.e_upper_gr, r.e_upper_tc, r.e_upper_new}) {
    ASSERT_TRUE(x);
    EXPECT_NEAR(*x, 4.0, kTol);
  }
  EXPECT_NEAR(r.q, 4.0, kTol);
  EXPECT_TRUE(r.absent.empty());
}

TEST(BoundChainReport, DirectedTriangle) {
  const de::BoundReport r = de::bound_chain_report(c3());
  EXPECT_FALSE(r.in_gamma);
  EXPECT_TRUE(r.chain_ok);
  EXPECT_EQ(*r.rho_lower_gr, 0.0);
  EXPECT_EQ(*r.rho_lower_tc, 0.0);
  EXPECT_EQ(*r.rho_lower_new, 0.0);
}

TEST(BoundChainReport, Star) {
  const de::BoundReport r = de::bound_chain_report(star12());
  EXPECT_TRUE(r.in_gamma);  // 4 * 3 = 12 < 16
  EXPECT_NEAR(*r.e_upper_new, std::sqrt(2.0) + 2.0, kTol);
  EXPECT_NEAR(*r.e_upper_tc, std::sqrt(2.0) + 2.0, kTol);
  EXPECT_NEAR(*r.e_upper_gr, 4.0 / 3.0 + std::sqrt(2.0 * (4.0 - 16.0 / 9.0)), kTol);
  EXPECT_LT(*r.e_upper_tc, *r.e_upper_gr);
}

TEST(BoundChainReport, FaultIsReportedAsChainFailure) {
  de::BoundOptions opts;
  opts.fault = de::BoundFault{de::BoundId::kRhoLowerNew, 1e-3};
  const de::BoundReport r = de::bound_chain_report(k3(), opts);
  EXPECT_FALSE(r.chain_ok);
  EXPECT_FALSE(r.chain_failures.empty());
}

// Remark-2 ordering and the Gamma-family chain on every digraph with n <= 4.
TEST(BoundChainReport, ExhaustiveOrdering) {
  for (int n = 1; n <= 4; ++n) {
    de::enumerate_digraphs(n, [&](std::uint64_t mask, const Digraph& d) {
      const de::BoundReport r = de::bound_chain_report(d);
      ASSERT_TRUE(r.chain_ok) << "mask " << mask << ": " << r.chain_failures.front();
      ASSERT_TRUE(r.absent.empty()) << "mask " << mask;
      ASSERT_TRUE(de::leq_tol(*r.rho_lower_tc, *r.rho_lower_new, 1e-8));
      if (r.in_gamma) {
        ASSERT_TRUE(de::leq_tol(*r.e_upper_new, *r.e_upper_tc, 1e-8));
        ASSERT_TRUE(de::leq_tol(*r.e_upper_tc, *r.e_upper_gr, 1e-8));
      }
    });
  }
}
