#ifndef DSV_FIXTURES_HPP
#define DSV_FIXTURES_HPP

#include <array>
#include <string_view>
#include <vector>

#include "dsv/assessment.hpp"
#include "dsv/knowledge_library.hpp"
#include "dsv/mass.hpp"
#include "dsv/report.hpp"
#include "dsv/window_stages.hpp"

// Bundled evidence for the office-building window study and the shutter
// example, so both evidential chains can be replayed without the images.

namespace dsv::fixtures {

/// Per-area inputs: single-feature beliefs, sibling supports, non-window support.
struct WindowAreaInputs {
  std::string_view label;
  FeatureBeliefs features;
  double v_sibling;
  double h_sibling;
  double non_window;
};

/// The 13 areas of the office-building belief table: W1-6 share one column,
/// the rest are the real windows W7..W12 and the false areas 4, 5, 9, 15, 17, 18.
inline constexpr std::array<WindowAreaInputs, 13> kOfficeBuildingAreas = {{
    {"W1-6", {0.5, 0.4, 0.6, 0.6}, 0.6, 0.6, 0.0},
    {"W7", {0.5, 0.2, 0.6, 0.6}, 0.6, 0.6, 0.0},
    {"W8", {0.5, 0.4, 0.6, 0.6}, 0.6, 0.6, 0.0},
    {"W9", {0.5, 0.4, 0.6, 0.3}, 0.6, 0.6, 0.0},
    {"W10", {0.5, 0.4, 0.6, 0.1}, 0.6, 0.6, 0.0},
    {"W11", {0.5, 0.4, 0.6, 0.6}, 0.6, 0.6, 0.0},
    {"W12", {0.5, 0.4, 0.6, 0.6}, 0.6, 0.6, 0.0},
    {"4", {0.3, 0.4, 0.0, 0.6}, 0.0, 0.0, 0.5},
    {"5", {0.5, 0.0, 0.1, 0.3}, 0.0, 0.6, 0.5},
    {"9", {0.5, 0.4, 0.0, 0.3}, 0.6, 0.0, 0.0},
    {"15", {0.3, 0.4, 0.0, 0.6}, 0.0, 0.0, 0.0},
    {"17", {0.5, 0.0, 0.6, 0.0}, 0.6, 0.0, 0.0},
    {"18", {0.5, 0.0, 0.3, 0.1}, 0.6, 0.0, 0.5},
}};

inline constexpr bool is_real_window(std::string_view label) { return !label.empty() && label.front() == 'W'; }

inline std::vector<ReportRow> office_building_rows(const KnowledgeSource& window_ks = library::window_knowledge(),
                                                   const KnowledgeSource& sibling_ks = library::sibling_knowledge()) {
  std::vector<ReportRow> rows;
  int id = 0;
  for (const auto& a : kOfficeBuildingAreas)
    rows.push_back({++id, std::string(a.label), std::nullopt,
                    run_stages(a.features, a.v_sibling, a.h_sibling, a.non_window, window_ks, sibling_ks)});
  return rows;
}

/// Supports whose combination is the accumulated shutter evidence.
inline constexpr double kShutterLong = 0.6;
inline constexpr double kShutterLow = 0.7;
inline constexpr double kShutterNextTo = 0.5;

inline MassFunction shutter_evidence(const Frame& f = library::shutter_frame()) {
  return combine_all({simple_support(f, "long", kShutterLong), simple_support(f, "low", kShutterLow),
                      simple_support(f, "next-to", kShutterNextTo)})
      .result;
}

}  // namespace dsv::fixtures

#endif  // DSV_FIXTURES_HPP
