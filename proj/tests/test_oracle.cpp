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

#include <set>
#include <string>

#include "digraph_energy/errors.hpp"
#include "digraph_energy/families.hpp"
#include "digraph_energy/oracle.hpp"

namespace de = digraph_energy;
using de::Digraph;

TEST(SplitMix64, ReferenceOutputs) {
  // First outputs for seed 0 of the reference implementation.
  de::SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(Enumerate, Counts) {
  for (auto [n, expected] : {std::pair{1, 1ULL}, {2, 4ULL}, {3, 64ULL}}) {
    std::uint64_t seen = 0;
    std::set<std::string> distinct;
    de::enumerate_digraphs(n, [&](std::uint64_t mask, const Digraph& d) {
      EXPECT_EQ(mask, seen);
      ++seen;
      distinct.insert(de::serialize_edge_list(d));
    });
    EXPECT_EQ(seen, expected);
    EXPECT_EQ(distinct.size(), expected);
  }
  EXPECT_EQ(de::digraph_count(4), 4096U);
  EXPECT_THROW(de::digraph_count(0), de::DomainError);
  EXPECT_THROW(de::digraph_count(6), de::DomainError);
}

TEST(Enumerate, MaskOrder) {
  EXPECT_EQ(de::digraph_from_mask(3, 0), Digraph(3));
  EXPECT_EQ(de::digraph_from_mask(3, 1), Digraph(3, {{0, 1}}));
  EXPECT_EQ(de::digraph_from_mask(3, 0b100), Digraph(3, {{1, 0}}));
  EXPECT_EQ(de::digraph_from_mask(3, 63), de::symmetric_digraph(de::families::complete(3)));
}

TEST(RandomDigraph, Examples) {
  EXPECT_EQ(de::random_digraph(3, 0.0, 12345), Digraph(3));
  EXPECT_EQ(de::random_digraph(3, 1.0, 12345), de::symmetric_digraph(de::families::complete(3)));
  EXPECT_EQ(de::random_digraph(4, 0.5, 42), de::random_digraph(4, 0.5, 42));
  EXPECT_NE(de::random_digraph(8, 0.5, 1), de::random_digraph(8, 0.5, 2));
  EXPECT_THROW(de::random_digraph(3, 1.5, 0), de::DomainError);
}

TEST(VerifyAll, ExhaustiveThreeAllChecks) {
  const de::VerificationReport r = de::verify_all(3, {}, de::ExhaustiveMode{});
  EXPECT_EQ(r.digraphs_checked, 64U);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.checks.size(), de::all_check_names().size());
  for (const auto& [name, tally] : r.checks) {
    EXPECT_EQ(tally.passed, 64U) << name;
    EXPECT_EQ(tally.failed, 0U) << name;
  }
  EXPECT_TRUE(r.ok());
}

TEST(VerifyAll, ExhaustiveFourRhoChain) {
  const de::VerificationReport r = de::verify_all(4, {"rho_chain"}, de::ExhaustiveMode{});
  EXPECT_EQ(r.digraphs_checked, 4096U);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.checks.size(), 1U);
}

TEST(VerifyAll, RandomLemmas) {
  const de::VerificationReport r =
      de::verify_all(8, {"lemma_i", "lemma_ii"}, de::RandomMode{1000, 0.3, 7});
  EXPECT_EQ(r.digraphs_checked, 1000U);
  EXPECT_TRUE(r.violations.empty());
}

TEST(VerifyAll, Limits) {
  EXPECT_THROW(de::verify_all(9, {}, de::ExhaustiveMode{}), de::ConfigurationError);
  EXPECT_THROW(de::verify_all(5, {}, de::ExhaustiveMode{}), de::ConfigurationError);
  EXPECT_THROW(de::verify_all(0, {}, de::ExhaustiveMode{}), de::ConfigurationError);
  EXPECT_THROW(de::verify_all(13, {}, de::RandomMode{}), de::ConfigurationError);
  EXPECT_THROW(de::verify_all(3, {"no_such_check"}, de::ExhaustiveMode{}), de::ConfigurationError);
}

TEST(VerifyAll, DeterministicAcrossWorkerCounts) {
  de::VerifyOptions one;
  de::VerifyOptions four;
  four.workers = 4;
  // A fault guarantees a non-empty violation list to compare.
  one.fault = four.fault = de::BoundFault{de::BoundId::kRhoLowerNew, 1e-3};
  const auto a = de::verify_all(4, {"rho_chain", "equality_iff_rho"}, de::ExhaustiveMode{}, one);
  const auto b = de::verify_all(4, {"rho_chain", "equality_iff_rho"}, de::ExhaustiveMode{}, four);
  ASSERT_FALSE(a.violations.empty());
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.checks, b.checks);
}

TEST(VerifyAll, RandomModeIsReproducible) {
  de::VerifyOptions opts;
  opts.fault = de::BoundFault{de::BoundId::kEnergyUpperMcClelland, -1e-3};
  const de::RandomMode mode{50, 0.5, 99};
  const auto a = de::verify_all(6, {"energy_bounds"}, mode, opts);
  const auto b = de::verify_all(6, {"energy_bounds"}, mode, opts);
  ASSERT_FALSE(a.violations.empty());
  EXPECT_EQ(a.violations, b.violations);
}

using FaultParam = std::tuple<de::BoundId, double>;

class FaultInjection : public ::testing::TestWithParam<FaultParam> {};

std::string fault_name(const ::testing::TestParamInfo<FaultParam>& info) {
  const double delta = std::get<1>(info.param);
  return std::string(de::bound_name(std::get<0>(info.param))) + (delta > 0 ? "_up" : "_down");
}

TEST_P(FaultInjection, DetectedOnExhaustiveThree) {
  const auto [id, delta] = GetParam();
  de::VerifyOptions opts;
  opts.fault = de::BoundFault{id, delta};
  const de::VerificationReport r = de::verify_all(3, {}, de::ExhaustiveMode{}, opts);
  EXPECT_FALSE(r.violations.empty()) << de::bound_name(id) << " " << delta;
}

INSTANTIATE_TEST_SUITE_P(AllBounds, FaultInjection,
                         ::testing::Combine(::testing::ValuesIn(de::kAllBounds),
                                            ::testing::Values(1e-3, -1e-3)),
                         fault_name);
