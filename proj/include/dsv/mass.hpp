#ifndef DSV_MASS_HPP
#define DSV_MASS_HPP

#include <cmath>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsv/error.hpp"
#include "dsv/frame.hpp"

namespace dsv {

inline constexpr double kMassTolerance = 1e-9;
inline constexpr double kConflictLimit = 1e-12;

/// Basic probability assignment over cube focals. Keys are conjunction clauses
/// of the owning frame; THETA is the empty cube.
class MassFunction {
 public:
  using Focals = std::map<Clause, double>;

  /// Checked construction: drops zero masses, merges duplicate focals and
  /// rejects anything `validate` would flag.
  static MassFunction make(const Frame& frame, std::span<const std::pair<Clause, double>> focals);
  static MassFunction make(const Frame& frame, std::initializer_list<std::pair<Clause, double>> focals) {
    return make(frame, std::span<const std::pair<Clause, double>>(focals.begin(), focals.size()));
  }

  /// Stores the focals as given, for inspection by `validate`.
  static MassFunction unchecked(const Frame& frame, std::span<const std::pair<Clause, double>> focals) {
    MassFunction m(frame);
    for (const auto& [clause, mass] : focals) m.focals_[clause] += mass;
    return m;
  }

  static MassFunction unchecked(const Frame& frame, Focals focals) {
    MassFunction m(frame);
    m.focals_ = std::move(focals);
    return m;
  }

  static MassFunction vacuous(const Frame& frame) {
    MassFunction m(frame);
    m.focals_.emplace(Clause::theta(frame), 1.0);
    return m;
  }

  const Frame& frame() const noexcept { return frame_; }
  const Focals& focals() const noexcept { return focals_; }
  std::size_t size() const noexcept { return focals_.size(); }

  /// Mass on exactly this focal, 0 if absent.
  double mass(const Clause& focal) const {
    auto it = focals_.find(focal);
    return it == focals_.end() ? 0.0 : it->second;
  }

  double total() const noexcept {
    double s = 0;
    for (const auto& [_, mass] : focals_) s += mass;
    return s;
  }

  /// Rescales to unit total; only happens when asked for.
  MassFunction normalized() const {
    const double t = total();
    if (!(t > 0)) throw Error(ErrorCode::InvalidMass, "cannot renormalize a mass function with no mass");
    MassFunction m(frame_);
    for (const auto& [clause, mass] : focals_)
      if (mass > 0) m.focals_.emplace(clause, mass / t);
    return m;
  }

 private:
  explicit MassFunction(Frame frame) : frame_(std::move(frame)) {}

  Frame frame_;
  Focals focals_;
};

/// Problems found in a mass function; empty when it is a valid assignment.
inline std::vector<std::string> validate(const MassFunction& m) {
  std::vector<std::string> findings;
  for (const auto& [clause, mass] : m.focals()) {
    if (!(clause.frame() == m.frame())) findings.push_back("focal from a foreign frame");
    if (!clause.is_conjunction()) findings.push_back("evidence focal is not a conjunction");
    if (!(mass > 0)) findings.push_back("non-positive mass " + std::to_string(mass));
  }
  const double total = m.total();
  if (std::abs(total - 1.0) > kMassTolerance)
    findings.push_back("masses sum to " + std::to_string(total) + ", not 1");
  return findings;
}

inline MassFunction MassFunction::make(const Frame& frame, std::span<const std::pair<Clause, double>> focals) {
  MassFunction m(frame);
  for (const auto& [clause, mass] : focals) {
    if (!(clause.frame() == frame)) throw Error(ErrorCode::FrameMismatch, "focal from a foreign frame");
    if (!clause.is_conjunction()) throw Error(ErrorCode::InvalidClause, "evidence focals must be conjunctions");
    if (!(mass >= 0) || mass > 1.0 + kMassTolerance)
      throw Error(ErrorCode::InvalidMass, "mass " + std::to_string(mass) + " outside [0, 1]");
    if (mass > 0) m.focals_[clause] += mass;
  }
  const double total = m.total();
  if (std::abs(total - 1.0) > kMassTolerance)
    throw Error(ErrorCode::NormalizationError, "masses sum to " + std::to_string(total));
  return m;
}

/// Mass s on `focal`, the rest on THETA.
inline MassFunction simple_support(const Frame& frame, const Clause& focal, double s) {
  require_same_frame(frame, focal.frame());
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfRange, "support " + std::to_string(s) + " outside [0, 1]");
  if (!focal.is_conjunction()) throw Error(ErrorCode::InvalidClause, "simple support needs a conjunction focal");
  if (focal.is_theta() || s == 0.0) return MassFunction::vacuous(frame);
  MassFunction::Focals f;
  f.emplace(focal, s);
  if (s < 1.0) f.emplace(Clause::theta(frame), 1.0 - s);
  return MassFunction::unchecked(frame, std::move(f));
}

inline MassFunction simple_support(const Frame& frame, std::string_view atom, double s,
                                   Polarity polarity = Polarity::Positive) {
  return simple_support(frame, Clause::atom(frame, atom, polarity), s);
}

/// Total mass committed to subsets of `a`.
inline double belief(const MassFunction& m, const Clause& a) {
  require_same_frame(m.frame(), a.frame());
  double bel = 0;
  for (const auto& [focal, mass] : m.focals())
    if (clause_subset(focal, a)) bel += mass;
  return bel;
}

struct CombineOutcome {
  MassFunction result;
  double conflict = 0;  // K, the mass lost to empty intersections
};

/// Dempster's orthogonal sum.
inline CombineOutcome combine(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  MassFunction::Focals acc;
  double conflict = 0;
  for (const auto& [a, ma] : m1.focals()) {
    for (const auto& [b, mb] : m2.focals()) {
      const double product = ma * mb;
      if (auto c = clause_intersect(a, b))
        acc[*c] += product;
      else
        conflict += product;
    }
  }
  if (conflict >= 1.0 - kConflictLimit)
    throw Error(ErrorCode::TotalConflict, "conflict K = " + std::to_string(conflict));
  const double scale = 1.0 - conflict;
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second > 0) {
      it->second /= scale;
      ++it;
    } else {
      it = acc.erase(it);
    }
  }
  auto result = MassFunction::unchecked(m1.frame(), std::move(acc));
  if (std::abs(result.total() - 1.0) > kMassTolerance)
    throw Error(ErrorCode::NormalizationError, "combination lost normalization");
  return {std::move(result), conflict};
}

/// Left fold of `combine`. The reported conflict is 1 - prod(1 - K_step).
inline CombineOutcome combine_all(std::span<const MassFunction> ms) {
  if (ms.empty()) throw Error(ErrorCode::InvalidParams, "combine_all needs at least one mass function");
  CombineOutcome acc{ms.front(), 0.0};
  double kept = 1.0;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    auto step = combine(acc.result, ms[i]);
    kept *= 1.0 - step.conflict;
    acc.result = std::move(step.result);
  }
  acc.conflict = 1.0 - kept;
  return acc;
}

inline CombineOutcome combine_all(std::initializer_list<MassFunction> ms) {
  return combine_all(std::span<const MassFunction>(ms.begin(), ms.size()));
}

}  // namespace dsv

#endif  // DSV_MASS_HPP
