#ifndef DSV_PYRAMID_HPP
#define DSV_PYRAMID_HPP

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <vector>

#include "dsv/error.hpp"
#include "dsv/grid.hpp"
#include "dsv/parallel.hpp"

namespace dsv {

/// Stack of square gray grids; level L is 2^L on a side and each cell of level
/// L-1 averages a 2x2 block of level L. The image lives at `base_level`.
struct Pyramid {
  int base_level = 0;
  std::vector<GrayImage> levels;  // indexed by level, 0 is the apex

  const GrayImage& base() const { return levels.at(base_level); }
  const GrayImage& level(int l) const { return levels.at(l); }
  int short_level() const noexcept { return base_level - 1; }
  int long_level() const noexcept { return base_level - 2; }
};

/// Input side that is reduced to the 128x128 working resolution.
inline constexpr std::size_t kFullResolution = 512;
inline constexpr std::size_t kWorkingResolution = 128;

namespace detail {

inline GrayImage block_average(const GrayImage& src, std::size_t factor, const LevelExecutor& exec) {
  const std::size_t side = src.rows() / factor;
  GrayImage out(side, side);
  const unsigned area = static_cast<unsigned>(factor * factor);
  exec.for_each(side * side, [&](std::size_t i) {
    const std::size_t r = i / side, c = i % side;
    unsigned sum = 0;
    for (std::size_t dr = 0; dr < factor; ++dr)
      for (std::size_t dc = 0; dc < factor; ++dc) sum += src(r * factor + dr, c * factor + dc);
    out(r, c) = static_cast<std::uint8_t>((sum + area / 2) / area);
  });
  return out;
}

}  // namespace detail

inline Pyramid build_pyramid(const GrayImage& image, const LevelExecutor& exec = LevelExecutor{}) {
  const std::size_t side = image.rows();
  if (image.cols() != side || side < 8 || !std::has_single_bit(side))
    throw Error(ErrorCode::BadDimensions, std::to_string(image.rows()) + "x" + std::to_string(image.cols()) +
                                              " is not a square power-of-two image of side >= 8");
  Pyramid p;
  GrayImage base = side == kFullResolution ? detail::block_average(image, kFullResolution / kWorkingResolution, exec)
                                           : image;
  p.base_level = std::countr_zero(base.rows());
  p.levels.resize(p.base_level + 1);
  p.levels[p.base_level] = std::move(base);
  for (int l = p.base_level - 1; l >= 0; --l) p.levels[l] = detail::block_average(p.levels[l + 1], 2, exec);
  return p;
}

/// Direction of a micro-edge: the gradient angle in steps of 45 degrees
/// (0 = pointing right, 2 = pointing down, image rows grow downward).
/// d and d+4 are the same edge orientation with opposite contrast.
using Direction = int;

inline constexpr bool is_diagonal(Direction d) noexcept { return d % 2 != 0; }
/// Gradient vertical, so the edge line itself runs horizontally.
inline constexpr bool is_horizontal_edge(Direction d) noexcept { return d == 2 || d == 6; }
inline constexpr bool is_vertical_edge(Direction d) noexcept { return d == 0 || d == 4; }
inline constexpr Direction opposite(Direction d) noexcept { return (d + 4) % 8; }

struct MicroEdge {
  int row = 0;
  int col = 0;
  Direction direction = 0;
  int magnitude = 0;  // |gx| + |gy|

  friend bool operator==(const MicroEdge&, const MicroEdge&) = default;
};

using MicroEdgeMap = Grid<std::optional<MicroEdge>>;

inline Direction quantize_direction(int gx, int gy) {
  const double steps = std::atan2(static_cast<double>(gy), static_cast<double>(gx)) / (std::numbers::pi / 4);
  return static_cast<Direction>(((std::lround(steps) % 8) + 8) % 8);
}

/// 3x3 gradient with 1-2-1 weights at every interior base-level cell.
inline MicroEdgeMap extract_micro_edges(const Pyramid& p, int threshold = 32,
                                        const LevelExecutor& exec = LevelExecutor{}) {
  const GrayImage& img = p.base();
  const std::size_t side = img.rows();
  MicroEdgeMap out(side, side);
  exec.for_each(side * side, [&](std::size_t i) {
    const std::size_t r = i / side, c = i % side;
    if (r == 0 || c == 0 || r + 1 == side || c + 1 == side) return;
    auto at = [&](std::size_t rr, std::size_t cc) { return static_cast<int>(img(rr, cc)); };
    const int gx = (at(r - 1, c + 1) + 2 * at(r, c + 1) + at(r + 1, c + 1)) -
                   (at(r - 1, c - 1) + 2 * at(r, c - 1) + at(r + 1, c - 1));
    const int gy = (at(r + 1, c - 1) + 2 * at(r + 1, c) + at(r + 1, c + 1)) -
                   (at(r - 1, c - 1) + 2 * at(r - 1, c) + at(r - 1, c + 1));
    const int magnitude = std::abs(gx) + std::abs(gy);
    if (magnitude == 0 || magnitude < threshold) return;
    out(r, c) = MicroEdge{static_cast<int>(r), static_cast<int>(c), quantize_direction(gx, gy), magnitude};
  });
  return out;
}

/// An aggregated edge held by one cell of a coarser level.
struct EdgeSegment {
  int level = 0;
  int row = 0;
  int col = 0;
  Direction direction = 0;
  int support_count = 0;  // children holding the same direction

  friend bool operator==(const EdgeSegment&, const EdgeSegment&) = default;
};

/// Per-cell bitmask of the directions present (bit d for direction d).
using DirectionMask = std::uint8_t;

inline Grid<DirectionMask> direction_masks(std::size_t side, const std::vector<EdgeSegment>& segments) {
  Grid<DirectionMask> masks(side, side, 0);
  for (const auto& s : segments) masks(s.row, s.col) |= static_cast<DirectionMask>(1u << s.direction);
  return masks;
}

namespace detail {

/// Runs `emit(r, c, segments_out)` for every cell of a `side`-square level and
/// concatenates the results in raster order.
template <class PerCell>
std::vector<EdgeSegment> per_cell_segments(std::size_t side, const LevelExecutor& exec, PerCell&& per_cell) {
  std::vector<std::vector<EdgeSegment>> cells(side * side);
  exec.for_each(side * side, [&](std::size_t i) { per_cell(static_cast<int>(i / side), static_cast<int>(i % side), cells[i]); });
  std::vector<EdgeSegment> out;
  for (auto& v : cells) out.insert(out.end(), v.begin(), v.end());
  return out;
}

/// The two child positions (dr, dc) of a 2x2 block that lie along an edge of
/// direction d, one pair per line through the block.
inline std::array<std::array<std::array<int, 2>, 2>, 2> collinear_pairs(Direction d) {
  using P = std::array<std::array<std::array<int, 2>, 2>, 2>;
  switch (d % 4) {
    case 2:  // horizontal edge line
      return P{{{{{0, 0}, {0, 1}}}, {{{1, 0}, {1, 1}}}}};
    case 0:  // vertical edge line
      return P{{{{{0, 0}, {1, 0}}}, {{{0, 1}, {1, 1}}}}};
    case 1:  // gradient down-right, edge runs up-right to down-left
      return P{{{{{0, 1}, {1, 0}}}, {{{0, 1}, {1, 0}}}}};
    default:  // 3: gradient down-left, edge runs up-left to down-right
      return P{{{{{0, 0}, {1, 1}}}, {{{0, 0}, {1, 1}}}}};
  }
}

}  // namespace detail

/// A cell one level above the base holds a short edge of direction d when at
/// least `min_support` of its four children carry a micro-edge of direction d.
inline std::vector<EdgeSegment> aggregate_short_edges(const Pyramid& p, const MicroEdgeMap& micro, int min_support = 2,
                                                      const LevelExecutor& exec = LevelExecutor{}) {
  const std::size_t side = p.level(p.short_level()).rows();
  return detail::per_cell_segments(side, exec, [&](int r, int c, std::vector<EdgeSegment>& out) {
    std::array<int, 8> counts{};
    for (int dr = 0; dr < 2; ++dr)
      for (int dc = 0; dc < 2; ++dc)
        if (const auto& e = micro(2 * r + dr, 2 * c + dc)) ++counts[e->direction];
    for (Direction d = 0; d < 8; ++d)
      if (counts[d] >= min_support) out.push_back({p.short_level(), r, c, d, counts[d]});
  });
}

/// A cell two levels above the base holds a long edge of direction d when at
/// least `min_support` children hold a short edge of direction d and two of
/// them sit next to each other along the edge's orientation.
inline std::vector<EdgeSegment> aggregate_long_edges(const Pyramid& p, const std::vector<EdgeSegment>& shorts,
                                                     int min_support = 2, const LevelExecutor& exec = LevelExecutor{}) {
  const std::size_t child_side = p.level(p.short_level()).rows();
  const auto masks = direction_masks(child_side, shorts);
  const std::size_t side = p.level(p.long_level()).rows();
  return detail::per_cell_segments(side, exec, [&](int r, int c, std::vector<EdgeSegment>& out) {
    auto holds = [&](int dr, int dc, Direction d) { return (masks(2 * r + dr, 2 * c + dc) >> d) & 1u; };
    for (Direction d = 0; d < 8; ++d) {
      int count = 0;
      for (int dr = 0; dr < 2; ++dr)
        for (int dc = 0; dc < 2; ++dc) count += holds(dr, dc, d);
      if (count < min_support) continue;
      bool collinear = false;
      for (const auto& pair : detail::collinear_pairs(d))
        collinear = collinear || (holds(pair[0][0], pair[0][1], d) && holds(pair[1][0], pair[1][1], d));
      if (collinear) out.push_back({p.long_level(), r, c, d, count});
    }
  });
}

}  // namespace dsv

#endif  // DSV_PYRAMID_HPP
