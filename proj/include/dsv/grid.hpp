#ifndef DSV_GRID_HPP
#define DSV_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dsv {

/// Row-major 2-D array.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  bool contains(long r, long c) const noexcept {
    return r >= 0 && c >= 0 && static_cast<std::size_t>(r) < rows_ && static_cast<std::size_t>(c) < cols_;
  }

  std::span<T> cells() noexcept { return cells_; }
  std::span<const T> cells() const noexcept { return cells_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

using GrayImage = Grid<std::uint8_t>;

/// Axis-aligned rectangle in base-level pixels.
struct Rect {
  int top = 0;
  int left = 0;
  int height = 0;
  int width = 0;

  int bottom() const noexcept { return top + height; }  // exclusive
  int right() const noexcept { return left + width; }   // exclusive
  double center_row() const noexcept { return top + height / 2.0; }
  double center_col() const noexcept { return left + width / 2.0; }

  bool contains(const Rect& o) const noexcept {
    return o.top >= top && o.left >= left && o.bottom() <= bottom() && o.right() <= right();
  }
  bool contains_point(double row, double col) const noexcept {
    return row >= top && row < bottom() && col >= left && col < right();
  }

  friend bool operator==(const Rect&, const Rect&) = default;
  friend auto operator<=>(const Rect&, const Rect&) = default;
};

}  // namespace dsv

#endif  // DSV_GRID_HPP
