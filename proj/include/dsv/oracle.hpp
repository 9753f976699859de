#ifndef DSV_ORACLE_HPP
#define DSV_ORACLE_HPP

#include <cmath>
#include <map>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "dsv/error.hpp"
#include "dsv/frame.hpp"
#include "dsv/knowledge.hpp"
#include "dsv/mass.hpp"

// Brute-force reference semantics. Every clause becomes an explicit set of
// worlds (bit w set iff truth assignment w belongs to it); combination and
// belief are then plain set algebra. Deliberately naive: this is what the
// cube algebra in frame.hpp / mass.hpp is checked against.

namespace dsv::oracle {

/// A subset of the 2^n worlds of a frame.
struct WorldSet {
  boost::dynamic_bitset<> bits;

  static WorldSet none(const Frame& frame) { return {boost::dynamic_bitset<>(std::size_t{1} << frame.size())}; }
  static WorldSet all(const Frame& frame) {
    auto s = none(frame);
    s.bits.set();
    return s;
  }

  bool empty() const { return bits.none(); }
  std::size_t count() const { return bits.count(); }
  bool subset_of(const WorldSet& other) const { return bits.is_subset_of(other.bits); }

  friend WorldSet operator&(const WorldSet& a, const WorldSet& b) { return {a.bits & b.bits}; }
  friend WorldSet operator|(const WorldSet& a, const WorldSet& b) { return {a.bits | b.bits}; }
  friend bool operator==(const WorldSet& a, const WorldSet& b) { return a.bits == b.bits; }
  friend bool operator<(const WorldSet& a, const WorldSet& b) { return a.bits < b.bits; }
};

/// Worlds where a single literal holds: world w sets atom i true iff bit i of w is 1.
inline WorldSet literal_worlds(const Frame& frame, std::size_t atom, Polarity polarity) {
  auto s = WorldSet::none(frame);
  const std::size_t n_worlds = std::size_t{1} << frame.size();
  for (std::size_t w = 0; w < n_worlds; ++w) {
    const bool truth = ((w >> atom) & 1u) != 0;
    if (truth == (polarity == Polarity::Positive)) s.bits.set(w);
  }
  return s;
}

inline WorldSet to_worlds(const Frame& frame, const Clause& c) {
  require_same_frame(frame, c.frame());
  const auto lits = c.literals();
  if (c.is_conjunction()) {
    auto s = WorldSet::all(frame);
    for (const auto& lit : lits) s = s & literal_worlds(frame, frame.index_of(lit.atom), lit.polarity);
    return s;
  }
  auto s = WorldSet::none(frame);
  for (const auto& lit : lits) s = s | literal_worlds(frame, frame.index_of(lit.atom), lit.polarity);
  return s;
}

/// Mass over arbitrary world sets.
struct OracleMass {
  Frame frame;
  std::map<WorldSet, double> focals;
};

inline OracleMass to_oracle(const MassFunction& m) {
  OracleMass out{m.frame(), {}};
  for (const auto& [clause, mass] : m.focals()) out.focals[to_worlds(m.frame(), clause)] += mass;
  return out;
}

inline OracleMass oracle_vacuous(const Frame& frame) { return {frame, {{WorldSet::all(frame), 1.0}}}; }

inline OracleMass to_oracle(const KnowledgeSource& ks) {
  OracleMass out{ks.frame(), {}};
  for (const auto& [clause, mass] : ks.focals()) out.focals[to_worlds(ks.frame(), clause)] += mass;
  if (ks.theta_mass() > 0) out.focals[WorldSet::all(ks.frame())] += ks.theta_mass();
  return out;
}

struct OracleCombineOutcome {
  OracleMass result;
  double conflict = 0;
};

inline OracleCombineOutcome oracle_combine(const OracleMass& m1, const OracleMass& m2) {
  require_same_frame(m1.frame, m2.frame);
  OracleMass out{m1.frame, {}};
  double conflict = 0;
  for (const auto& [a, ma] : m1.focals) {
    for (const auto& [b, mb] : m2.focals) {
      auto c = a & b;
      if (c.empty())
        conflict += ma * mb;
      else
        out.focals[c] += ma * mb;
    }
  }
  if (conflict >= 1.0 - kConflictLimit)
    throw Error(ErrorCode::TotalConflict, "conflict K = " + std::to_string(conflict));
  for (auto& [_, mass] : out.focals) mass /= 1.0 - conflict;
  return {std::move(out), conflict};
}

inline double oracle_belief(const OracleMass& m, const WorldSet& a) {
  double bel = 0;
  for (const auto& [b, mass] : m.focals)
    if (b.subset_of(a)) bel += mass;
  return bel;
}

/// Hypothesis verification by brute force: sum of m_e(A) m_s(B) over
/// A contained in B, B not the whole frame.
inline double oracle_verify(const OracleMass& evidence, const OracleMass& knowledge) {
  require_same_frame(evidence.frame, knowledge.frame);
  const auto theta = WorldSet::all(evidence.frame);
  double bel = 0;
  for (const auto& [b, mb] : knowledge.focals) {
    if (b == theta) continue;
    for (const auto& [a, ma] : evidence.focals)
      if (a.subset_of(b)) bel += ma * mb;
  }
  return bel;
}

}  // namespace dsv::oracle

#endif  // DSV_ORACLE_HPP
