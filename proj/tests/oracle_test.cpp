#include <gtest/gtest.h>

#include <random>

#include "dsv/oracle.hpp"
#include "test_support.hpp"

namespace dsv {
namespace {

using oracle::to_worlds;
using oracle::WorldSet;

// Worlds are numbered by their truth assignment: bit i set means atom i holds.
WorldSet worlds_where(const Frame& f, auto pred) {
  auto s = WorldSet::none(f);
  for (std::size_t w = 0; w < (std::size_t{1} << f.size()); ++w)
    if (pred(static_cast<AtomMask>(w))) s.bits.set(w);
  return s;
}

TEST(ToWorlds, Literals) {
  const Frame f{"a", "b"};
  EXPECT_EQ(to_worlds(f, Clause::atom(f, "a")), worlds_where(f, [](AtomMask w) { return (w & 1) != 0; }));
  EXPECT_EQ(to_worlds(f, Clause::atom(f, "b", Polarity::Negative)),
            worlds_where(f, [](AtomMask w) { return (w & 2) == 0; }));
  EXPECT_EQ(to_worlds(f, Clause::theta(f)).count(), 4u);
  EXPECT_EQ(to_worlds(f, Clause::disjunction(f, {pos("a"), pos("b")})).count(), 3u);
}

TEST(ToWorlds, MatchesTruthTableForEveryClause) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto f = testing::frame_of(n);
    for (const auto& c : testing::all_cubes(f)) {
      const auto expect = worlds_where(f, [&](AtomMask w) { return (w & c.positive()) == c.positive() && (w & c.negative()) == 0; });
      EXPECT_EQ(to_worlds(f, c), expect);
    }
    for (const auto& c : testing::all_disjunctions(f))
      EXPECT_EQ(to_worlds(f, c), worlds_where(f, [&](AtomMask w) { return (w & c.positive()) != 0; }));
  }
}

TEST(ClauseAlgebra, ExhaustiveSubsetAgreement) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto f = testing::frame_of(n);
    const auto cubes = testing::all_cubes(f);
    auto targets = cubes;
    for (const auto& d : testing::all_disjunctions(f)) targets.push_back(d);
    for (const auto& a : cubes) {
      const auto wa = to_worlds(f, a);
      for (const auto& b : targets) EXPECT_EQ(clause_subset(a, b), wa.subset_of(to_worlds(f, b)));
    }
  }
}

TEST(ClauseAlgebra, ExhaustiveIntersectAgreement) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto f = testing::frame_of(n);
    const auto cubes = testing::all_cubes(f);
    for (const auto& a : cubes) {
      for (const auto& b : cubes) {
        const auto expect = to_worlds(f, a) & to_worlds(f, b);
        const auto got = clause_intersect(a, b);
        ASSERT_EQ(got.has_value(), !expect.empty());
        if (got) EXPECT_EQ(to_worlds(f, *got), expect);
      }
    }
  }
}

TEST(Oracle, ShutterEvidenceCombination) {
  const Frame f{"long", "low", "next-to"};
  auto acc = oracle::to_oracle(simple_support(f, "long", 0.6));
  acc = oracle::oracle_combine(acc, oracle::to_oracle(simple_support(f, "low", 0.7))).result;
  acc = oracle::oracle_combine(acc, oracle::to_oracle(simple_support(f, "next-to", 0.5))).result;
  const auto fast = combine_all({simple_support(f, "long", 0.6), simple_support(f, "low", 0.7),
                                 simple_support(f, "next-to", 0.5)})
                        .result;
  ASSERT_EQ(acc.focals.size(), fast.size());
  for (const auto& [c, m] : fast.focals()) EXPECT_NEAR(acc.focals.at(to_worlds(f, c)), m, 1e-12);
  EXPECT_NEAR(oracle::oracle_belief(acc, to_worlds(f, Clause::atom(f, "long"))), 0.60, 1e-12);
}

TEST(Oracle, TotalConflict) {
  const Frame f{"a"};
  EXPECT_THROW(oracle::oracle_combine(oracle::to_oracle(simple_support(f, "a", 1.0)),
                                      oracle::to_oracle(simple_support(f, "a", 1.0, Polarity::Negative))),
               Error);
}

TEST(Oracle, RandomizedEquivalence) {
  std::mt19937_64 rng(testing::kSeed);
  std::uniform_int_distribution<std::size_t> atoms(1, 4);
  int conflicted = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = testing::frame_of(atoms(rng));
    const auto a = testing::random_mass(f, rng);
    const auto b = testing::random_mass(f, rng);
    const auto ks = testing::random_knowledge(f, rng);
    const auto target = testing::random_cube(f, rng);
    const auto oa = oracle::to_oracle(a);

    EXPECT_NEAR(belief(a, target), oracle::oracle_belief(oa, to_worlds(f, target)), 1e-9);
    EXPECT_NEAR(verify(a, ks).bel, oracle::oracle_verify(oa, oracle::to_oracle(ks)), 1e-9);

    bool fast_failed = false, slow_failed = false;
    std::optional<CombineOutcome> fast;
    std::optional<oracle::OracleCombineOutcome> slow;
    try {
      fast = combine(a, b);
    } catch (const Error&) {
      fast_failed = true;
    }
    try {
      slow = oracle::oracle_combine(oa, oracle::to_oracle(b));
    } catch (const Error&) {
      slow_failed = true;
    }
    ASSERT_EQ(fast_failed, slow_failed);
    if (fast_failed) {
      ++conflicted;
      continue;
    }
    EXPECT_NEAR(fast->conflict, slow->conflict, 1e-9);
    const auto converted = oracle::to_oracle(fast->result);
    ASSERT_EQ(converted.focals.size(), slow->result.focals.size());
    for (const auto& [w, m] : slow->result.focals) EXPECT_NEAR(converted.focals.at(w), m, 1e-9);
  }
  EXPECT_LT(conflicted, 1000);
}

}  // namespace
}  // namespace dsv
