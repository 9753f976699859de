#ifndef DSV_CANDIDATES_HPP
#define DSV_CANDIDATES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "dsv/assessment.hpp"
#include "dsv/error.hpp"
#include "dsv/grid.hpp"
#include "dsv/parallel.hpp"
#include "dsv/pyramid.hpp"
#include "dsv/window_stages.hpp"

namespace dsv {

/// Base-level pixels covered by one cell of the long-edge level.
inline int long_cell_size(const Pyramid& p) { return 1 << (p.base_level - p.long_level()); }

/// A connected run of horizontal long edges of one direction, localised to
/// base-level pixels from the micro-edges underneath it.
struct EdgeLine {
  Direction direction = 0;
  int boundary_row = 0;  // first pixel row below the intensity step
  int x_begin = 0;       // pixel columns [x_begin, x_end)
  int x_end = 0;
  int cell_col_begin = 0;  // long-level columns, inclusive
  int cell_col_end = 0;
  int cell_count = 0;
};

/// Groups horizontal long edges (directions 2 and 6) into 4-connected runs per
/// direction and measures where each run's step actually sits.
inline std::vector<EdgeLine> link_horizontal_edges(const Pyramid& p, const MicroEdgeMap& micro,
                                                   const std::vector<EdgeSegment>& longs) {
  const int side = static_cast<int>(p.level(p.long_level()).rows());
  const int cell = long_cell_size(p);
  const int base_side = static_cast<int>(micro.cols());
  std::vector<EdgeLine> lines;
  for (const Direction d : {2, 6}) {
    Grid<char> present(side, side, 0);
    for (const auto& s : longs)
      if (s.direction == d) present(s.row, s.col) = 1;
    Grid<char> seen(side, side, 0);
    for (int r0 = 0; r0 < side; ++r0) {
      for (int c0 = 0; c0 < side; ++c0) {
        if (!present(r0, c0) || seen(r0, c0)) continue;
        std::vector<std::pair<int, int>> stack{{r0, c0}}, cells;
        seen(r0, c0) = 1;
        while (!stack.empty()) {
          auto [r, c] = stack.back();
          stack.pop_back();
          cells.emplace_back(r, c);
          const int nbr[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
          for (const auto& n : nbr)
            if (present.contains(n[0], n[1]) && present(n[0], n[1]) && !seen(n[0], n[1])) {
              seen(n[0], n[1]) = 1;
              stack.push_back({n[0], n[1]});
            }
        }
        EdgeLine line;
        line.direction = d;
        line.cell_count = static_cast<int>(cells.size());
        line.cell_col_begin = side;
        line.cell_col_end = -1;
        long row_sum = 0, n_edges = 0;
        int x_min = std::numeric_limits<int>::max(), x_max = -1;
        std::set<int> rows;
        for (auto [r, c] : cells) {
          line.cell_col_begin = std::min(line.cell_col_begin, c);
          line.cell_col_end = std::max(line.cell_col_end, c);
          for (int y = r * cell; y < (r + 1) * cell; ++y)
            for (int x = c * cell; x < (c + 1) * cell; ++x)
              if (const auto& e = micro(y, x); e && e->direction == d) {
                row_sum += y;
                ++n_edges;
                rows.insert(y);
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
              }
        }
        if (n_edges == 0) continue;
        // The run's cells may stop short of the step's ends; follow the
        // micro-edges sideways along the same rows.
        auto any_at = [&](int x) {
          if (x < 0 || x >= base_side) return false;
          for (int y : rows)
            if (const auto& e = micro(y, x); e && e->direction == d) return true;
          return false;
        };
        while (any_at(x_min - 1)) --x_min;
        while (any_at(x_max + 1)) ++x_max;
        // A step between rows y-1 and y marks both; their mean is y - 0.5.
        line.boundary_row = static_cast<int>(std::lround(static_cast<double>(row_sum) / n_edges + 0.5));
        line.x_begin = x_min;
        line.x_end = x_max + 1;
        lines.push_back(line);
      }
    }
  }
  std::sort(lines.begin(), lines.end(), [](const EdgeLine& a, const EdgeLine& b) {
    return std::tie(a.boundary_row, a.x_begin, a.direction, a.x_end) <
           std::tie(b.boundary_row, b.x_begin, b.direction, b.x_end);
  });
  return lines;
}

struct SiblingFlags {
  double vertical = 0;
  double horizontal = 0;
};

/// A hypothesised window area and everything learned about it.
struct CandidateArea {
  int id = 0;
  Rect rect;
  int top_line = -1;  // indices into the edge-line list
  int bottom_line = -1;
  FeatureMeasurements measurements;
  FeatureBeliefs beliefs;
  double bel_a = 0;
  SiblingFlags siblings;
  double bel_b = 0;
  double non_window = 0;
  double bel_c = 0;
};

struct PairingParams {
  int min_separation = 4;  // base-level pixels
  int max_separation = 48;
};

/// Pairs horizontal edge lines of opposite contrast that overlap by at least
/// one long-level cell. Of two candidates sharing a top or bottom line, the
/// one enclosing the other is dropped. Ids follow raster order.
inline std::vector<CandidateArea> find_window_candidates(const std::vector<EdgeLine>& lines,
                                                         const PairingParams& params = {}) {
  std::vector<CandidateArea> all;
  for (std::size_t t = 0; t < lines.size(); ++t) {
    for (std::size_t b = 0; b < lines.size(); ++b) {
      const auto& top = lines[t];
      const auto& bottom = lines[b];
      if (bottom.direction != opposite(top.direction)) continue;
      const int sep = bottom.boundary_row - top.boundary_row;
      if (sep < params.min_separation || sep > params.max_separation) continue;
      const int overlap_cells = std::min(top.cell_col_end, bottom.cell_col_end) -
                                std::max(top.cell_col_begin, bottom.cell_col_begin) + 1;
      if (overlap_cells < 1) continue;
      const int left = std::max(top.x_begin, bottom.x_begin);
      const int right = std::min(top.x_end, bottom.x_end);
      if (right - left < 2) continue;
      CandidateArea c;
      c.rect = Rect{top.boundary_row, left, sep, right - left};
      c.top_line = static_cast<int>(t);
      c.bottom_line = static_cast<int>(b);
      all.push_back(c);
    }
  }
  std::vector<CandidateArea> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < all.size() && !drop; ++j) {
      if (i == j) continue;
      if (all[i].rect == all[j].rect) {
        drop = j < i;  // keep the first of identical rectangles
        continue;
      }
      const bool shares = all[i].top_line == all[j].top_line || all[i].bottom_line == all[j].bottom_line;
      drop = shares && all[i].rect.contains(all[j].rect);
    }
    if (!drop) kept.push_back(all[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const CandidateArea& a, const CandidateArea& b) { return a.rect < b.rect; });
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i].id = static_cast<int>(i + 1);
  return kept;
}

/// Shape, interior texture and side support of a rectangle. The interior
/// excludes a one-pixel ring so the rectangle's own outline is not counted as
/// texture.
inline FeatureMeasurements measure_features(const MicroEdgeMap& micro, const Rect& r) {
  if (r.height < 2 || r.width < 2 || r.top < 0 || r.left < 0 || r.bottom() > static_cast<int>(micro.rows()) ||
      r.right() > static_cast<int>(micro.cols()))
    throw Error(ErrorCode::RectOutOfBounds, "rectangle outside the base level or thinner than 2 pixels");
  FeatureMeasurements m;
  m.elongation = static_cast<double>(std::max(r.height, r.width)) / std::min(r.height, r.width);

  long axis = 0, diagonal = 0;
  for (int y = r.top + 1; y < r.bottom() - 1; ++y)
    for (int x = r.left + 1; x < r.right() - 1; ++x)
      if (const auto& e = micro(y, x)) (is_diagonal(e->direction) ? diagonal : axis) += 1;
  m.edgedness = static_cast<double>(axis + diagonal) / (static_cast<double>(r.height) * r.width);
  m.hv_d = diagonal == 0 ? std::numeric_limits<double>::infinity() : static_cast<double>(axis) / diagonal;

  auto side_support = [&](int col) {
    int covered = 0;
    for (int y = r.top; y < r.bottom(); ++y) {
      bool hit = false;
      for (int x = col - 1; x <= col + 1 && !hit; ++x)
        if (micro.contains(y, x))
          if (const auto& e = micro(y, x); e && is_vertical_edge(e->direction)) hit = true;
      covered += hit;
    }
    return static_cast<double>(covered) / r.height;
  };
  m.left_boundary = side_support(r.left);
  m.right_boundary = side_support(r.right() - 1);
  return m;
}

struct SiblingParams {
  double survivor_threshold = 0.3;
  int tolerance_cells = 2;  // long-level cells
  double support = 0.6;
};

/// Lateral search among candidates whose stage-A belief survives: a
/// horizontal sibling sits at about the same height without overlapping
/// horizontally, a vertical sibling at about the same column without
/// overlapping vertically.
inline std::vector<SiblingFlags> sibling_search(const std::vector<CandidateArea>& cands, int cell_size,
                                                const SiblingParams& params = {},
                                                const LevelExecutor& exec = LevelExecutor{}) {
  std::vector<SiblingFlags> flags(cands.size());
  const double tol = static_cast<double>(params.tolerance_cells) * cell_size;
  auto survives = [&](const CandidateArea& c) { return c.bel_a >= params.survivor_threshold; };
  exec.for_each(cands.size(), [&](std::size_t i) {
    const auto& a = cands[i];
    if (!survives(a)) return;
    bool h = false, v = false;
    for (std::size_t j = 0; j < cands.size(); ++j) {
      if (j == i || !survives(cands[j])) continue;
      const Rect& o = cands[j].rect;
      const bool cols_disjoint = a.rect.right() <= o.left || o.right() <= a.rect.left;
      const bool rows_disjoint = a.rect.bottom() <= o.top || o.bottom() <= a.rect.top;
      h = h || (std::abs(a.rect.center_row() - o.center_row()) <= tol && cols_disjoint);
      v = v || (std::abs(a.rect.center_col() - o.center_col()) <= tol && rows_disjoint);
    }
    flags[i] = {v ? params.support : 0.0, h ? params.support : 0.0};
  });
  return flags;
}

/// Outline of the building: the bounding box of the largest cluster of long
/// edges, where edges within `gap_cells` (Chebyshev distance, long-level
/// cells) of each other belong to one cluster. Ties go to the cluster that
/// starts first in raster order. nullopt when there are no long edges.
inline std::optional<Rect> building_region(const Pyramid& p, const std::vector<EdgeSegment>& longs, int gap_cells = 2) {
  if (longs.empty()) return std::nullopt;
  const int side = static_cast<int>(p.level(p.long_level()).rows());
  std::vector<int> parent(longs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  Grid<int> first_at(side, side, -1);
  for (std::size_t i = 0; i < longs.size(); ++i) {
    int& slot = first_at(longs[i].row, longs[i].col);
    if (slot < 0)
      slot = static_cast<int>(i);
    else
      unite(slot, static_cast<int>(i));
  }
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      if (first_at(r, c) < 0) continue;
      for (int dr = -gap_cells; dr <= gap_cells; ++dr)
        for (int dc = -gap_cells; dc <= gap_cells; ++dc)
          if (first_at.contains(r + dr, c + dc) && first_at(r + dr, c + dc) >= 0)
            unite(first_at(r, c), first_at(r + dr, c + dc));
    }
  // Roots are the smallest member index, so scanning in index order gives
  // raster-order tie-breaking.
  std::vector<int> size(longs.size(), 0);
  for (std::size_t i = 0; i < longs.size(); ++i) ++size[find(static_cast<int>(i))];
  int best = 0;
  for (std::size_t i = 0; i < longs.size(); ++i)
    if (size[i] > size[best]) best = static_cast<int>(i);
  int r0 = side, r1 = -1, c0 = side, c1 = -1;
  for (std::size_t i = 0; i < longs.size(); ++i) {
    if (find(static_cast<int>(i)) != best) continue;
    r0 = std::min(r0, longs[i].row);
    r1 = std::max(r1, longs[i].row);
    c0 = std::min(c0, longs[i].col);
    c1 = std::max(c1, longs[i].col);
  }
  const int cell = long_cell_size(p);
  return Rect{r0 * cell, c0 * cell, (r1 - r0 + 1) * cell, (c1 - c0 + 1) * cell};
}

/// Non-window support per candidate: `support` when the centre lies outside
/// the building region, 0 inside or when no region was found.
inline std::vector<double> building_boundary(const std::optional<Rect>& region, const std::vector<CandidateArea>& cands,
                                             double support = 0.5) {
  std::vector<double> out(cands.size(), 0.0);
  if (!region) return out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (!region->contains_point(cands[i].rect.center_row(), cands[i].rect.center_col())) out[i] = support;
  return out;
}

}  // namespace dsv

#endif  // DSV_CANDIDATES_HPP
