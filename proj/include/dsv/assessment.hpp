#ifndef DSV_ASSESSMENT_HPP
#define DSV_ASSESSMENT_HPP

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "dsv/error.hpp"

namespace dsv {

/// Parameters of the step goodness function: full credit within `inner` of
/// the typical value, `plateau` credit out to `outer`, nothing beyond.
struct StepFunctionParams {
  double typical = 0;
  double inner = 0;
  double outer = 0;
  double plateau = 0.5;

  void check() const {
    if (!(inner > 0 && inner <= outer)) throw Error(ErrorCode::InvalidParams, "step function needs 0 < inner <= outer");
    if (!(plateau > 0 && plateau < 1)) throw Error(ErrorCode::InvalidParams, "step plateau must lie in (0, 1)");
  }
};

/// Goodness of a feature value against the typical value: 1, plateau or 0.
inline double step_mu(double v, const StepFunctionParams& p) {
  p.check();
  const double d = std::abs(v - p.typical);
  if (d <= p.inner) return 1.0;
  if (d <= p.outer) return p.plateau;
  return 0.0;
}

/// Folds feature goodness and input-data quality into one mass (their product).
inline double assess_feature(double goodness, double quality_weight = 1.0) {
  if (!(goodness >= 0 && goodness <= 1)) throw Error(ErrorCode::OutOfRange, "goodness outside [0, 1]");
  if (!(quality_weight >= 0 && quality_weight <= 1)) throw Error(ErrorCode::OutOfRange, "quality weight outside [0, 1]");
  return goodness * quality_weight;
}

/// Raw measurements of a candidate window area.
struct FeatureMeasurements {
  double elongation = 1;  // max side / min side
  double edgedness = 0;   // interior micro-edges per pixel
  double hv_d = std::numeric_limits<double>::infinity();  // axis-aligned / diagonal edge count
  double left_boundary = 0;   // fraction of the left side backed by vertical edges
  double right_boundary = 0;  // same for the right side
};

struct ElongationTable {
  double squat_limit = 3;   // elongation <= this: squat_value
  double medium_limit = 5;  // elongation <= this: medium_value
  double squat_value = 0.5;
  double medium_value = 0.3;
  double other_value = 0;
};

struct TextureTable {
  double sparse_edgedness = 0.1;  // below this the area counts as plain
  double sparse_value = 0.4;
  double strong_hvd = 4;
  double strong_value = 0.4;
  double weak_hvd = 2;
  double weak_value = 0.2;
  double other_value = 0;
};

/// Coverage thresholds, highest first, with the support each one earns.
struct BoundaryTable {
  std::array<double, 3> coverage = {0.75, 0.4, 0.15};
  std::array<double, 3> value = {0.6, 0.3, 0.1};
  double other_value = 0;
};

struct BeliefTables {
  ElongationTable elongation;
  TextureTable texture;
  BoundaryTable boundary;
};

inline double elongation_belief(double e, const ElongationTable& t = {}) {
  if (!(e >= 1)) throw Error(ErrorCode::OutOfRange, "elongation " + std::to_string(e) + " below 1");
  if (e <= t.squat_limit) return t.squat_value;
  if (e <= t.medium_limit) return t.medium_value;
  return t.other_value;
}

/// Plain interiors and interiors dominated by horizontal/vertical structure
/// both look like windows. Branches are tried in order.
inline double texture_belief(double edgedness, double hv_d, const TextureTable& t = {}) {
  if (!(edgedness >= 0) || !(hv_d >= 0)) throw Error(ErrorCode::OutOfRange, "texture inputs must be non-negative");
  if (edgedness < t.sparse_edgedness) return t.sparse_value;
  if (hv_d >= t.strong_hvd) return t.strong_value;
  if (hv_d >= t.weak_hvd) return t.weak_value;
  return t.other_value;
}

inline double boundary_belief(double support, const BoundaryTable& t = {}) {
  if (!(support >= 0 && support <= 1)) throw Error(ErrorCode::OutOfRange, "boundary support outside [0, 1]");
  for (std::size_t i = 0; i < t.coverage.size(); ++i)
    if (support >= t.coverage[i]) return t.value[i];
  return t.other_value;
}

/// Support masses for the four window features.
struct FeatureBeliefs {
  double elongation = 0;
  double texture = 0;
  double left_boundary = 0;
  double right_boundary = 0;
};

inline FeatureBeliefs assess(const FeatureMeasurements& m, const BeliefTables& tables = {},
                             double quality_weight = 1.0) {
  return {assess_feature(elongation_belief(m.elongation, tables.elongation), quality_weight),
          assess_feature(texture_belief(m.edgedness, m.hv_d, tables.texture), quality_weight),
          assess_feature(boundary_belief(m.left_boundary, tables.boundary), quality_weight),
          assess_feature(boundary_belief(m.right_boundary, tables.boundary), quality_weight)};
}

}  // namespace dsv

#endif  // DSV_ASSESSMENT_HPP
