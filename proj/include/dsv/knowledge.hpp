#ifndef DSV_KNOWLEDGE_HPP
#define DSV_KNOWLEDGE_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "dsv/error.hpp"
#include "dsv/frame.hpp"
#include "dsv/mass.hpp"
#include "dsv/text_format.hpp"

namespace dsv {

/// Stored expectation for one hypothesis: how much each expected feature (or
/// combination of features) counts toward believing the object is present.
class KnowledgeSource {
 public:
  KnowledgeSource(std::string name, Frame frame, std::vector<std::pair<Clause, double>> focals, double theta_mass)
      : name_(std::move(name)), frame_(std::move(frame)), theta_mass_(theta_mass) {
    if (!(theta_mass >= 0.0 && theta_mass <= 1.0))
      throw Error(ErrorCode::InvalidMass, "THETA mass " + std::to_string(theta_mass) + " outside [0, 1]");
    double total = theta_mass;
    for (auto& [clause, mass] : focals) {
      require_same_frame(frame_, clause.frame());
      if (clause.negative() != 0)
        throw Error(ErrorCode::NegativeLiteralInKnowledge, name_ + ": " + format_clause(clause));
      if (!(mass > 0.0) || mass > 1.0) throw Error(ErrorCode::InvalidMass, name_ + ": focal mass must lie in (0, 1]");
      if (clause.is_theta()) {
        theta_mass_ += mass;
      } else {
        auto it = std::find_if(focals_.begin(), focals_.end(), [&](const auto& f) { return f.first == clause; });
        if (it != focals_.end())
          it->second += mass;
        else
          focals_.emplace_back(clause, mass);
      }
      total += mass;
    }
    if (std::abs(total - 1.0) > kMassTolerance)
      throw Error(ErrorCode::NormalizationError, name_ + ": masses sum to " + std::to_string(total));
  }

  const std::string& name() const noexcept { return name_; }
  const Frame& frame() const noexcept { return frame_; }
  /// Non-THETA focals in declaration order.
  const std::vector<std::pair<Clause, double>>& focals() const noexcept { return focals_; }
  double theta_mass() const noexcept { return theta_mass_; }

 private:
  std::string name_;
  Frame frame_;
  std::vector<std::pair<Clause, double>> focals_;
  double theta_mass_;
};

struct VerificationResult {
  std::string hypothesis;
  double bel = 0;    // belief committed to the object
  double theta = 1;  // 1 - bel
};

/// Maps accumulated evidence onto belief in the hypothesised object: every
/// pair of evidence focal A and non-THETA knowledge focal B with A inside B
/// contributes m_e(A) m_s(B). The result is a simple belief function.
inline VerificationResult verify(const MassFunction& evidence, const KnowledgeSource& ks) {
  require_same_frame(evidence.frame(), ks.frame());
  double bel = 0;
  for (const auto& [a, ma] : evidence.focals()) {
    double covered = 0;
    for (const auto& [b, mb] : ks.focals())
      if (clause_subset(a, b)) covered += mb;
    bel += ma * covered;
  }
  return {ks.name(), bel, 1.0 - bel};
}

/// Re-injects a verified hypothesis as a simple support on `target`.
inline MassFunction to_simple_support(const VerificationResult& v, const Clause& target, const Frame& frame) {
  require_same_frame(frame, target.frame());
  if (!target.is_conjunction() || target.negative() != 0 || target.literal_count() != 1)
    throw Error(ErrorCode::InvalidClause, "target must be a single positive atom");
  return simple_support(frame, target, v.bel);
}

/// Reads a knowledge file:
///
///   hypothesis shutter
///   frame long low next-to
///   focal long 0.25
///   focal THETA 0.2
inline KnowledgeSource parse_knowledge(std::string_view content) {
  auto doc = parse_focal_document(content);
  if (!doc.hypothesis) throw Error(ErrorCode::ParseError, "knowledge file has no hypothesis line");
  if (!doc.frame) throw Error(ErrorCode::ParseError, "knowledge file has no frame line");
  Frame frame(*doc.frame);
  std::vector<std::pair<Clause, double>> focals;
  double theta = 0;
  for (const auto& f : doc.focals) {
    auto syntax = parse_clause_syntax(f.clause);
    for (const auto& lit : syntax.literals)
      if (lit.polarity == Polarity::Negative)
        throw Error(ErrorCode::NegativeLiteralInKnowledge, f.clause + " (line " + std::to_string(f.line) + ")");
    auto clause = parse_clause(frame, f.clause);
    if (clause.is_theta())
      theta += f.mass;
    else
      focals.emplace_back(std::move(clause), f.mass);
  }
  return KnowledgeSource(*doc.hypothesis, std::move(frame), std::move(focals), theta);
}

inline std::string format_knowledge(const KnowledgeSource& ks) {
  std::string out = "hypothesis " + ks.name() + "\nframe";
  for (const auto& a : ks.frame().atoms()) out += " " + a;
  out += '\n';
  for (const auto& [clause, mass] : ks.focals()) out += "focal " + format_clause(clause) + " " + text::exact(mass) + "\n";
  if (ks.theta_mass() > 0) out += "focal THETA " + text::exact(ks.theta_mass()) + "\n";
  return out;
}

}  // namespace dsv

#endif  // DSV_KNOWLEDGE_HPP
