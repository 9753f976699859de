#ifndef DSV_WINDOW_STAGES_HPP
#define DSV_WINDOW_STAGES_HPP

#include <vector>

#include "dsv/assessment.hpp"
#include "dsv/knowledge.hpp"
#include "dsv/knowledge_library.hpp"
#include "dsv/mass.hpp"

// The three verification stages a window candidate goes through.
//
//   A: shape, texture and both boundaries, checked against the window source.
//   B: A's belief plus aligned neighbours, checked against the facade source.
//   C: as B, plus conflicting "not a window" evidence for areas outside the
//      building outline.

namespace dsv {

inline MassFunction window_feature_evidence(const FeatureBeliefs& b, const Frame& f) {
  const MassFunction supports[] = {
      simple_support(f, library::kElong, b.elongation),
      simple_support(f, library::kText, b.texture),
      simple_support(f, library::kLeftBound, b.left_boundary),
      simple_support(f, library::kRightBound, b.right_boundary),
  };
  return combine_all(supports).result;
}

inline double stage_a_belief(const FeatureBeliefs& b, const KnowledgeSource& window_ks) {
  return verify(window_feature_evidence(b, window_ks.frame()), window_ks).bel;
}

/// Evidence on the facade frame. `non_window` goes onto the negated window atom.
inline MassFunction facade_evidence(double window, double v_sibling, double h_sibling, double non_window,
                                    const Frame& f) {
  std::vector<MassFunction> supports{
      simple_support(f, library::kWindow, window),
      simple_support(f, library::kVSibling, v_sibling),
      simple_support(f, library::kHSibling, h_sibling),
  };
  if (non_window > 0) supports.push_back(simple_support(f, library::kWindow, non_window, Polarity::Negative));
  return combine_all(supports).result;
}

inline double stage_b_belief(double bel_a, double v_sibling, double h_sibling, const KnowledgeSource& sibling_ks) {
  return verify(facade_evidence(bel_a, v_sibling, h_sibling, 0.0, sibling_ks.frame()), sibling_ks).bel;
}

/// Normalisation inside the combination absorbs the window / non-window conflict.
inline double stage_c_belief(double bel_a, double non_window, double v_sibling, double h_sibling,
                             const KnowledgeSource& sibling_ks) {
  return verify(facade_evidence(bel_a, v_sibling, h_sibling, non_window, sibling_ks.frame()), sibling_ks).bel;
}

/// Feature beliefs and stage outcomes of one candidate, laid out like a
/// column of the belief table.
struct StagedBeliefs {
  FeatureBeliefs features;
  double bel_a = 0;
  double v_sibling = 0;
  double h_sibling = 0;
  double bel_b = 0;
  double non_window = 0;
  double bel_c = 0;
};

/// Runs all three stages from already-assessed feature beliefs and the given
/// sibling / non-window supports.
inline StagedBeliefs run_stages(const FeatureBeliefs& features, double v_sibling, double h_sibling, double non_window,
                                const KnowledgeSource& window_ks, const KnowledgeSource& sibling_ks) {
  StagedBeliefs s{features, 0, v_sibling, h_sibling, 0, non_window, 0};
  s.bel_a = stage_a_belief(features, window_ks);
  s.bel_b = stage_b_belief(s.bel_a, v_sibling, h_sibling, sibling_ks);
  s.bel_c = stage_c_belief(s.bel_a, non_window, v_sibling, h_sibling, sibling_ks);
  return s;
}

}  // namespace dsv

#endif  // DSV_WINDOW_STAGES_HPP
