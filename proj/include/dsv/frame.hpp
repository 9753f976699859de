#ifndef DSV_FRAME_HPP
#define DSV_FRAME_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsv/error.hpp"

namespace dsv {

/// Bit i stands for the i-th atom of a frame.
using AtomMask = std::uint32_t;

/// A frame of discernment given as a vocabulary of binary feature atoms. The
/// worlds of the frame are the 2^n truth assignments to the atoms. Copies share
/// the atom table, so passing frames around is cheap.
class Frame {
 public:
  static constexpr std::size_t kMaxAtoms = 16;

  explicit Frame(std::vector<std::string> atoms) {
    if (atoms.empty()) throw Error(ErrorCode::EmptyName, "a frame needs at least one atom");
    if (atoms.size() > kMaxAtoms)
      throw Error(ErrorCode::TooManyAtoms,
                  std::to_string(atoms.size()) + " atoms, limit is " + std::to_string(kMaxAtoms));
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].empty()) throw Error(ErrorCode::EmptyName, "atom " + std::to_string(i) + " has no name");
      for (std::size_t j = 0; j < i; ++j)
        if (atoms[j] == atoms[i]) throw Error(ErrorCode::DuplicateAtom, atoms[i]);
    }
    atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
  }

  Frame(std::initializer_list<std::string> atoms) : Frame(std::vector<std::string>(atoms)) {}

  std::size_t size() const noexcept { return atoms_->size(); }
  std::span<const std::string> atoms() const noexcept { return *atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_->at(i); }

  /// Mask with one bit per atom set.
  AtomMask all_atoms() const noexcept { return static_cast<AtomMask>((1u << size()) - 1u); }

  std::optional<std::size_t> find(std::string_view name) const noexcept {
    auto it = std::find(atoms_->begin(), atoms_->end(), name);
    if (it == atoms_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - atoms_->begin());
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error(ErrorCode::UnknownAtom, std::string(name));
  }

  friend bool operator==(const Frame& a, const Frame& b) noexcept {
    return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

inline Frame make_frame(std::vector<std::string> atom_names) { return Frame(std::move(atom_names)); }

inline void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) throw Error(ErrorCode::FrameMismatch, "operands live on different frames");
}

enum class Polarity { Positive, Negative };

struct Literal {
  std::string atom;
  Polarity polarity = Polarity::Positive;

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(std::string atom) { return {std::move(atom), Polarity::Positive}; }
inline Literal neg(std::string atom) { return {std::move(atom), Polarity::Negative}; }

enum class ClauseKind { Conjunction, Disjunction };

/// A focal element. Conjunctions are literal cubes (the empty cube is THETA);
/// disjunctions are non-empty unions of positive atoms. Contradictory cubes
/// denote the empty set and are never constructed.
class Clause {
 public:
  static Clause theta(const Frame& frame) { return Clause(frame, ClauseKind::Conjunction, 0, 0); }

  static Clause conjunction(const Frame& frame, std::span<const Literal> literals) {
    auto [p, n] = masks_of(frame, literals);
    return from_masks(frame, ClauseKind::Conjunction, p, n);
  }
  static Clause conjunction(const Frame& frame, std::initializer_list<Literal> literals) {
    return conjunction(frame, std::span<const Literal>(literals.begin(), literals.size()));
  }

  static Clause disjunction(const Frame& frame, std::span<const Literal> literals) {
    auto [p, n] = masks_of(frame, literals);
    return from_masks(frame, ClauseKind::Disjunction, p, n);
  }
  static Clause disjunction(const Frame& frame, std::initializer_list<Literal> literals) {
    return disjunction(frame, std::span<const Literal>(literals.begin(), literals.size()));
  }

  /// Single-literal cube.
  static Clause atom(const Frame& frame, std::string_view name, Polarity polarity = Polarity::Positive) {
    const AtomMask bit = AtomMask{1} << frame.index_of(name);
    return polarity == Polarity::Positive ? Clause(frame, ClauseKind::Conjunction, bit, 0)
                                          : Clause(frame, ClauseKind::Conjunction, 0, bit);
  }

  static Clause from_masks(const Frame& frame, ClauseKind kind, AtomMask positive, AtomMask negative) {
    const AtomMask all = frame.all_atoms();
    if ((positive | negative) & ~all) throw Error(ErrorCode::UnknownAtom, "mask names atoms outside the frame");
    if (kind == ClauseKind::Conjunction && (positive & negative))
      throw Error(ErrorCode::InvalidClause, "conjunction holds an atom with both polarities (empty set)");
    if (kind == ClauseKind::Disjunction) {
      if (negative) throw Error(ErrorCode::InvalidClause, "disjunctions take positive atoms only");
      if (!positive) throw Error(ErrorCode::InvalidClause, "empty disjunction denotes the empty set");
      // A one-atom disjunction is the same set as the one-atom cube.
      if (std::has_single_bit(positive)) kind = ClauseKind::Conjunction;
    }
    return Clause(frame, kind, positive, negative);
  }

  const Frame& frame() const noexcept { return frame_; }
  ClauseKind kind() const noexcept { return kind_; }
  bool is_conjunction() const noexcept { return kind_ == ClauseKind::Conjunction; }
  bool is_theta() const noexcept { return is_conjunction() && positive_ == 0 && negative_ == 0; }
  AtomMask positive() const noexcept { return positive_; }
  AtomMask negative() const noexcept { return negative_; }
  std::size_t literal_count() const noexcept { return std::popcount(positive_ | negative_); }

  /// Literals in atom-index order.
  std::vector<Literal> literals() const {
    std::vector<Literal> out;
    for (std::size_t i = 0; i < frame_.size(); ++i) {
      const AtomMask bit = AtomMask{1} << i;
      if (positive_ & bit) out.push_back(pos(frame_.atom(i)));
      if (negative_ & bit) out.push_back(neg(frame_.atom(i)));
    }
    return out;
  }

  friend bool operator==(const Clause& a, const Clause& b) noexcept {
    return a.kind_ == b.kind_ && a.positive_ == b.positive_ && a.negative_ == b.negative_ && a.frame_ == b.frame_;
  }

  /// Canonical order within one frame.
  friend bool operator<(const Clause& a, const Clause& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.positive_ != b.positive_) return a.positive_ < b.positive_;
    return a.negative_ < b.negative_;
  }

 private:
  Clause(Frame frame, ClauseKind kind, AtomMask p, AtomMask n)
      : frame_(std::move(frame)), kind_(kind), positive_(p), negative_(n) {}

  static std::pair<AtomMask, AtomMask> masks_of(const Frame& frame, std::span<const Literal> literals) {
    AtomMask p = 0, n = 0;
    for (const auto& lit : literals) {
      const AtomMask bit = AtomMask{1} << frame.index_of(lit.atom);
      (lit.polarity == Polarity::Positive ? p : n) |= bit;
    }
    return {p, n};
  }

  Frame frame_;
  ClauseKind kind_;
  AtomMask positive_;
  AtomMask negative_;
};

/// True iff the world set of cube `a` lies inside the world set of `b`.
inline bool clause_subset(const Clause& a, const Clause& b) {
  require_same_frame(a.frame(), b.frame());
  if (!a.is_conjunction()) throw Error(ErrorCode::InvalidClause, "subset test needs a conjunction on the left");
  if (b.is_conjunction())
    return (b.positive() & ~a.positive()) == 0 && (b.negative() & ~a.negative()) == 0;
  // A cube sits inside a positive union only if it forces one of the atoms true.
  return (a.positive() & b.positive()) != 0;
}

/// Intersection of two cubes; nullopt when the result is empty.
inline std::optional<Clause> clause_intersect(const Clause& a, const Clause& b) {
  require_same_frame(a.frame(), b.frame());
  if (!a.is_conjunction() || !b.is_conjunction())
    throw Error(ErrorCode::InvalidClause, "intersection is defined on conjunctions");
  const AtomMask p = a.positive() | b.positive();
  const AtomMask n = a.negative() | b.negative();
  if (p & n) return std::nullopt;
  return Clause::from_masks(a.frame(), ClauseKind::Conjunction, p, n);
}

}  // namespace dsv

#endif  // DSV_FRAME_HPP
