#ifndef DSV_SYNTHETIC_HPP
#define DSV_SYNTHETIC_HPP

#include <cstdint>
#include <vector>

#include "dsv/grid.hpp"

namespace dsv::synthetic {

inline void paint(GrayImage& img, const Rect& r, std::uint8_t value) {
  for (int y = r.top; y < r.bottom(); ++y)
    for (int x = r.left; x < r.right(); ++x) img(y, x) = value;
}

struct Facade {
  GrayImage image;
  Rect building;
  std::vector<Rect> windows;  // row-major, top-left first
  Rect decoy;                 // window-like rectangle outside the building
};

struct FacadeSpec {
  int side = 128;
  std::uint8_t sky = 100;
  std::uint8_t wall = 200;
  std::uint8_t glass = 40;
  int rows = 3;
  int cols = 4;
  int window_height = 18;
  int window_width = 14;
  int row_pitch = 26;  // top-to-top distance
  int col_pitch = 22;
  int first_top = 30;
  int first_left = 10;
  Rect building{20, 4, 90, 92};
  Rect decoy{40, 110, 18, 14};
};

/// A bright wall with a grid of dark windows, on a mid-gray background, plus
/// one dark decoy rectangle well clear of the wall.
inline Facade make_facade(const FacadeSpec& s = {}) {
  Facade f{GrayImage(s.side, s.side, s.sky), s.building, {}, s.decoy};
  paint(f.image, s.building, s.wall);
  for (int r = 0; r < s.rows; ++r)
    for (int c = 0; c < s.cols; ++c) {
      const Rect w{s.first_top + r * s.row_pitch, s.first_left + c * s.col_pitch, s.window_height, s.window_width};
      paint(f.image, w, s.glass);
      f.windows.push_back(w);
    }
  paint(f.image, s.decoy, s.glass);
  return f;
}

}  // namespace dsv::synthetic

#endif  // DSV_SYNTHETIC_HPP
