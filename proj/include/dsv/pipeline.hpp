#ifndef DSV_PIPELINE_HPP
#define DSV_PIPELINE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsv/assessment.hpp"
#include "dsv/candidates.hpp"
#include "dsv/error.hpp"
#include "dsv/knowledge.hpp"
#include "dsv/knowledge_library.hpp"
#include "dsv/parallel.hpp"
#include "dsv/pyramid.hpp"
#include "dsv/text_format.hpp"
#include "dsv/window_stages.hpp"

namespace dsv {

struct PipelineConfig {
  int edge_threshold = 32;
  int short_support = 2;
  int long_support = 2;
  PairingParams pairing;
  SiblingParams siblings;
  double non_window_support = 0.5;
  int cluster_gap = 2;  // long-level cells
  double quality_weight = 1.0;
  BeliefTables tables;
};

/// Reads `key = value` lines ('#' comments). Unknown keys are errors.
inline PipelineConfig parse_pipeline_config(std::string_view content) {
  PipelineConfig cfg;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    ++lineno;
    const auto line = text::strip_comment(content.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected 'key = value'" + where);
    const auto key = text::trim(line.substr(0, eq));
    const auto values = text::split_ws(text::trim(line.substr(eq + 1)));
    auto number = [&](std::size_t i = 0) {
      if (values.size() <= i) throw Error(ErrorCode::ParseError, std::string(key) + " needs a value" + where);
      return text::parse_number(values[i], key);
    };
    auto integer = [&] {
      const double v = number();
      if (v != static_cast<int>(v)) throw Error(ErrorCode::ParseError, std::string(key) + " must be an integer" + where);
      return static_cast<int>(v);
    };
    auto& t = cfg.tables;
    if (key == "edge_threshold") cfg.edge_threshold = integer();
    else if (key == "short_support") cfg.short_support = integer();
    else if (key == "long_support") cfg.long_support = integer();
    else if (key == "pair_min_sep") cfg.pairing.min_separation = integer();
    else if (key == "pair_max_sep") cfg.pairing.max_separation = integer();
    else if (key == "survivor_threshold") cfg.siblings.survivor_threshold = number();
    else if (key == "sibling_tolerance") cfg.siblings.tolerance_cells = integer();
    else if (key == "sibling_support") cfg.siblings.support = number();
    else if (key == "non_window_support") cfg.non_window_support = number();
    else if (key == "cluster_gap") cfg.cluster_gap = integer();
    else if (key == "quality_weight") cfg.quality_weight = number();
    else if (key == "elong_squat_limit") t.elongation.squat_limit = number();
    else if (key == "elong_medium_limit") t.elongation.medium_limit = number();
    else if (key == "elong_squat") t.elongation.squat_value = number();
    else if (key == "elong_medium") t.elongation.medium_value = number();
    else if (key == "elong_other") t.elongation.other_value = number();
    else if (key == "text_sparse_edgedness") t.texture.sparse_edgedness = number();
    else if (key == "text_sparse") t.texture.sparse_value = number();
    else if (key == "text_strong_hvd") t.texture.strong_hvd = number();
    else if (key == "text_strong") t.texture.strong_value = number();
    else if (key == "text_weak_hvd") t.texture.weak_hvd = number();
    else if (key == "text_weak") t.texture.weak_value = number();
    else if (key == "text_other") t.texture.other_value = number();
    else if (key == "bound_coverage" || key == "bound_values") {
      auto& target = key == "bound_coverage" ? t.boundary.coverage : t.boundary.value;
      if (values.size() != target.size())
        throw Error(ErrorCode::ParseError, std::string(key) + " takes 3 numbers" + where);
      for (std::size_t i = 0; i < target.size(); ++i) target[i] = number(i);
    } else if (key == "bound_other") t.boundary.other_value = number();
    else throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'" + where);
    if (values.size() > 1 && key != "bound_coverage" && key != "bound_values")
      throw Error(ErrorCode::ParseError, std::string(key) + " takes one value" + where);
  }
  if (cfg.pairing.min_separation < 2 || cfg.pairing.min_separation > cfg.pairing.max_separation)
    throw Error(ErrorCode::InvalidParams, "need 2 <= pair_min_sep <= pair_max_sep");
  return cfg;
}

/// Every intermediate product of one run, stage by stage.
struct PipelineResult {
  Pyramid pyramid;
  MicroEdgeMap micro;
  std::vector<EdgeSegment> short_edges;
  std::vector<EdgeSegment> long_edges;
  std::vector<EdgeLine> lines;
  std::optional<Rect> building;
  std::vector<CandidateArea> candidates;
};

/// The full window pipeline. Each stage finishes on every cell (or candidate)
/// before the next one starts; per-item work inside a stage is spread over the
/// executor's workers.
inline PipelineResult run_pipeline(const GrayImage& image, const PipelineConfig& cfg,
                                   const KnowledgeSource& window_ks = library::window_knowledge(),
                                   const KnowledgeSource& sibling_ks = library::sibling_knowledge(),
                                   const LevelExecutor& exec = LevelExecutor{}) {
  PipelineResult res;
  res.pyramid = build_pyramid(image, exec);
  res.micro = extract_micro_edges(res.pyramid, cfg.edge_threshold, exec);
  res.short_edges = aggregate_short_edges(res.pyramid, res.micro, cfg.short_support, exec);
  res.long_edges = aggregate_long_edges(res.pyramid, res.short_edges, cfg.long_support, exec);
  res.lines = link_horizontal_edges(res.pyramid, res.micro, res.long_edges);
  res.candidates = find_window_candidates(res.lines, cfg.pairing);

  auto& cands = res.candidates;
  exec.for_each(cands.size(), [&](std::size_t i) {
    auto& c = cands[i];
    c.measurements = measure_features(res.micro, c.rect);
    c.beliefs = assess(c.measurements, cfg.tables, cfg.quality_weight);
    c.bel_a = stage_a_belief(c.beliefs, window_ks);
  });

  const auto flags = sibling_search(cands, long_cell_size(res.pyramid), cfg.siblings, exec);
  exec.for_each(cands.size(), [&](std::size_t i) {
    auto& c = cands[i];
    c.siblings = flags[i];
    c.bel_b = stage_b_belief(c.bel_a, c.siblings.vertical, c.siblings.horizontal, sibling_ks);
  });

  res.building = building_region(res.pyramid, res.long_edges, cfg.cluster_gap);
  const auto non_window = building_boundary(res.building, cands, cfg.non_window_support);
  exec.for_each(cands.size(), [&](std::size_t i) {
    auto& c = cands[i];
    c.non_window = non_window[i];
    c.bel_c = stage_c_belief(c.bel_a, c.non_window, c.siblings.vertical, c.siblings.horizontal, sibling_ks);
  });
  return res;
}

}  // namespace dsv

#endif  // DSV_PIPELINE_HPP
