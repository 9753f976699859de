#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dsv/mass.hpp"
#include "dsv/text_format.hpp"
#include "test_support.hpp"

namespace dsv {
namespace {

using testing::kSeed;

constexpr double kTol = 1e-9;

bool same_mass(const MassFunction& a, const MassFunction& b, double tol = kTol) {
  for (const auto& [c, m] : a.focals())
    if (std::abs(m - b.mass(c)) > tol) return false;
  for (const auto& [c, m] : b.focals())
    if (std::abs(m - a.mass(c)) > tol) return false;
  return true;
}

const Frame& shutter() {
  static const Frame f{"long", "low", "next-to"};
  return f;
}

MassFunction shutter_mass() {
  const auto& f = shutter();
  return combine_all({simple_support(f, "long", 0.6), simple_support(f, "low", 0.7), simple_support(f, "next-to", 0.5)})
      .result;
}

TEST(SimpleSupport, Shape) {
  const auto m = simple_support(shutter(), "long", 0.6);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_DOUBLE_EQ(m.mass(Clause::atom(shutter(), "long")), 0.6);
  EXPECT_DOUBLE_EQ(m.mass(Clause::theta(shutter())), 0.4);
}

TEST(SimpleSupport, ZeroIsVacuous) {
  const auto m = simple_support(shutter(), "long", 0.0);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.mass(Clause::theta(shutter())), 1.0);
}

TEST(SimpleSupport, OutOfRange) {
  EXPECT_THROW(simple_support(shutter(), "long", 1.2), Error);
  EXPECT_THROW(simple_support(shutter(), "long", -0.1), Error);
}

TEST(MassFunction, MakeRejectsBadInput) {
  const auto& f = shutter();
  try {
    MassFunction::make(f, {{Clause::atom(f, "long"), 0.5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NormalizationError);
  }
  try {
    MassFunction::make(f, {{Clause::atom(f, "long"), -0.5}, {Clause::theta(f), 1.5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidMass);
  }
}

TEST(MassFunction, ValidateFindsProblems) {
  const auto& f = shutter();
  EXPECT_TRUE(validate(simple_support(f, "low", 0.3)).empty());
  const std::pair<Clause, double> bad[] = {{Clause::atom(f, "low"), 0.3}};
  EXPECT_FALSE(validate(MassFunction::unchecked(f, bad)).empty());
}

TEST(Belief, ShutterEvidenceLong) { EXPECT_NEAR(belief(shutter_mass(), Clause::atom(shutter(), "long")), 0.60, kTol); }

TEST(Belief, VacuousGivesZeroExceptTheta) {
  const auto v = MassFunction::vacuous(shutter());
  EXPECT_EQ(belief(v, Clause::atom(shutter(), "low")), 0.0);
  EXPECT_EQ(belief(v, Clause::theta(shutter())), 1.0);
}

TEST(Combine, ShutterEvidenceMasses) {
  const auto& f = shutter();
  const auto m = shutter_mass();
  EXPECT_EQ(m.size(), 8u);
  const std::pair<const char*, double> expected[] = {
      {"long&low&next-to", 0.21}, {"low&next-to", 0.14}, {"long&next-to", 0.09}, {"next-to", 0.06},
      {"long&low", 0.21},         {"low", 0.14},         {"long", 0.09},         {"THETA", 0.06}};
  for (const auto& [text, mass] : expected) EXPECT_NEAR(m.mass(parse_clause(f, text)), mass, kTol) << text;
}

TEST(Combine, WindowAgainstNonWindow) {
  const Frame f{"window"};
  const auto out = combine(simple_support(f, "window", 0.335), simple_support(f, "window", 0.5, Polarity::Negative));
  EXPECT_NEAR(out.conflict, 0.1675, kTol);
  EXPECT_NEAR(out.result.mass(Clause::atom(f, "window")), 0.2012, 5e-5);
  EXPECT_NEAR(out.result.mass(Clause::atom(f, "window", Polarity::Negative)), 0.3994, 5e-5);
  EXPECT_NEAR(out.result.mass(Clause::theta(f)), 0.3994, 5e-5);
}

TEST(Combine, TotalConflict) {
  const Frame f{"a"};
  try {
    combine(simple_support(f, "a", 1.0), simple_support(f, "a", 1.0, Polarity::Negative));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TotalConflict);
  }
}

TEST(Combine, NearTotalConflictStillCombines) {
  const Frame f{"a"};
  const auto out = combine(simple_support(f, "a", 1.0), simple_support(f, "a", 1.0 - 1e-9, Polarity::Negative));
  EXPECT_NEAR(out.conflict, 1.0 - 1e-9, 1e-15);
  EXPECT_NEAR(out.result.mass(Clause::atom(f, "a")), 1.0, 1e-6);
}

TEST(Combine, FrameMismatch) {
  EXPECT_THROW(combine(simple_support(Frame{"a"}, "a", 0.5), simple_support(Frame{"b"}, "b", 0.5)), Error);
}

TEST(CombineAll, ProductFormFourFeatures) {
  // Four independent supports on distinct atoms: every subset of atoms gets
  // the product of its supports and of the others' complements.
  const Frame f{"elong", "text", "lt-bound", "rt-bound"};
  const double s[] = {0.5, 0.4, 0.6, 0.6};
  std::vector<MassFunction> ms;
  for (std::size_t i = 0; i < 4; ++i) ms.push_back(simple_support(f, f.atom(i), s[i]));
  const auto out = combine_all(ms);
  EXPECT_EQ(out.conflict, 0.0);
  EXPECT_EQ(out.result.size(), 16u);
  for (AtomMask p = 0; p < 16; ++p) {
    double expect = 1;
    for (std::size_t i = 0; i < 4; ++i) expect *= (p >> i & 1) ? s[i] : 1 - s[i];
    EXPECT_NEAR(out.result.mass(Clause::from_masks(f, ClauseKind::Conjunction, p, 0)), expect, kTol);
  }
}

TEST(CombineAll, EmptyInputIsError) { EXPECT_THROW(combine_all(std::span<const MassFunction>{}), Error); }

TEST(CombineAll, AggregateConflict) {
  const Frame f{"a"};
  const auto out = combine_all({simple_support(f, "a", 0.5), simple_support(f, "a", 0.5, Polarity::Negative),
                                simple_support(f, "a", 0.5, Polarity::Negative)});
  const double k1 = 0.25;
  const auto first = combine(simple_support(f, "a", 0.5), simple_support(f, "a", 0.5, Polarity::Negative));
  const auto second = combine(first.result, simple_support(f, "a", 0.5, Polarity::Negative));
  EXPECT_NEAR(first.conflict, k1, kTol);
  EXPECT_NEAR(out.conflict, 1 - (1 - k1) * (1 - second.conflict), kTol);
}

TEST(CombineAll, ShutterPermutationsAgree) {
  const auto& f = shutter();
  std::vector<MassFunction> ms{simple_support(f, "long", 0.6), simple_support(f, "low", 0.7),
                               simple_support(f, "next-to", 0.5)};
  std::vector<int> idx{0, 1, 2};
  const auto ref = shutter_mass();
  do {
    EXPECT_TRUE(same_mass(combine_all({ms[idx[0]], ms[idx[1]], ms[idx[2]]}).result, ref));
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST(MassText, RoundTrip) {
  const auto m = shutter_mass();
  const auto text = format_mass_function(m);
  EXPECT_TRUE(same_mass(parse_mass_function(text), m));
  EXPECT_EQ(text.substr(0, 5), "frame");
}

TEST(MassText, Errors) {
  EXPECT_THROW(parse_mass_function("focal a 1\n"), Error);
  EXPECT_THROW(parse_mass_function("frame a\nfocal a 0.5\n"), Error);
  EXPECT_THROW(parse_mass_function("frame a\nfocal a zero\n"), Error);
}

class MassProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{kSeed};
  std::uniform_int_distribution<std::size_t> atoms{1, 4};

  // Skips draws whose combination is totally conflicting.
  template <class F>
  void repeat(int n, F&& body) {
    for (int i = 0; i < n; ++i) {
      const auto f = testing::frame_of(atoms(rng));
      try {
        body(f);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TotalConflict) throw;
      }
    }
  }
};

TEST_F(MassProperties, Commutative) {
  repeat(300, [&](const Frame& f) {
    const auto a = testing::random_mass(f, rng), b = testing::random_mass(f, rng);
    const auto ab = combine(a, b), ba = combine(b, a);
    EXPECT_TRUE(same_mass(ab.result, ba.result));
    EXPECT_NEAR(ab.conflict, ba.conflict, kTol);
  });
}

TEST_F(MassProperties, Associative) {
  repeat(300, [&](const Frame& f) {
    const auto a = testing::random_mass(f, rng), b = testing::random_mass(f, rng), c = testing::random_mass(f, rng);
    const auto left = combine(combine(a, b).result, c).result;
    const auto right = combine(a, combine(b, c).result).result;
    EXPECT_TRUE(same_mass(left, right));
  });
}

TEST_F(MassProperties, VacuousIsIdentity) {
  repeat(300, [&](const Frame& f) {
    const auto a = testing::random_mass(f, rng);
    const auto out = combine(a, MassFunction::vacuous(f));
    EXPECT_EQ(out.conflict, 0.0);
    EXPECT_EQ(out.result.focals(), a.focals());
  });
}

TEST_F(MassProperties, ResultIsNormalized) {
  repeat(300, [&](const Frame& f) {
    const auto out = combine(testing::random_mass(f, rng), testing::random_mass(f, rng));
    EXPECT_NEAR(out.result.total(), 1.0, kTol);
    EXPECT_GE(out.conflict, 0.0);
    EXPECT_LT(out.conflict, 1.0);
    EXPECT_TRUE(validate(out.result).empty());
  });
}

TEST_F(MassProperties, BeliefMonotoneUnderSubset) {
  repeat(300, [&](const Frame& f) {
    const auto m = testing::random_mass(f, rng);
    const auto a = testing::random_cube(f, rng);
    for (const auto& b : testing::all_cubes(f))
      if (clause_subset(a, b)) EXPECT_LE(belief(m, a), belief(m, b) + kTol);
  });
}

TEST_F(MassProperties, SupportsOnDistinctAtomsMultiply) {
  repeat(100, [&](const Frame& f) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> s(f.size());
    std::vector<MassFunction> ms;
    for (std::size_t i = 0; i < f.size(); ++i) ms.push_back(simple_support(f, f.atom(i), s[i] = u(rng)));
    const auto out = combine_all(ms).result;
    for (AtomMask p = 0; p <= f.all_atoms(); ++p) {
      double expect = 1;
      for (std::size_t i = 0; i < f.size(); ++i) expect *= (p >> i & 1) ? s[i] : 1 - s[i];
      EXPECT_NEAR(out.mass(Clause::from_masks(f, ClauseKind::Conjunction, p, 0)), expect, kTol);
    }
  });
}

}  // namespace
}  // namespace dsv
