#ifndef DSV_REPORT_HPP
#define DSV_REPORT_HPP

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dsv/candidates.hpp"
#include "dsv/grid.hpp"
#include "dsv/netpbm.hpp"
#include "dsv/text_format.hpp"
#include "dsv/window_stages.hpp"

namespace dsv {

/// One column of the belief table, as a report line.
struct ReportRow {
  int id = 0;
  std::string label;
  std::optional<Rect> rect;  // absent for table rows that never had pixels
  StagedBeliefs beliefs;
};

inline ReportRow to_report_row(const CandidateArea& c) {
  return {c.id,
          "C" + std::to_string(c.id),
          c.rect,
          {c.beliefs, c.bel_a, c.siblings.vertical, c.siblings.horizontal, c.bel_b, c.non_window, c.bel_c}};
}

inline std::vector<ReportRow> to_report_rows(const std::vector<CandidateArea>& cands) {
  std::vector<ReportRow> rows;
  rows.reserve(cands.size());
  for (const auto& c : cands) rows.push_back(to_report_row(c));
  return rows;
}

inline constexpr std::string_view kReportHeader =
    "id\tlabel\ttop\tleft\theight\twidth\telong\ttext\tlt_bound\trt_bound\tbel_wnd\tv_sibl\th_sibl\tbel1_wnd\t"
    "non_wnd\tbel2_wnd\n";

/// Tab-separated report, best final belief first, ties by id.
inline std::string format_report(std::vector<ReportRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.beliefs.bel_c != b.beliefs.bel_c) return a.beliefs.bel_c > b.beliefs.bel_c;
    return a.id < b.id;
  });
  std::string out(kReportHeader);
  for (const auto& r : rows) {
    const auto& b = r.beliefs;
    out += std::to_string(r.id) + '\t' + r.label;
    if (r.rect) {
      for (int v : {r.rect->top, r.rect->left, r.rect->height, r.rect->width}) out += '\t' + std::to_string(v);
    } else {
      out += "\t-\t-\t-\t-";
    }
    for (double v : {b.features.elongation, b.features.texture, b.features.left_boundary, b.features.right_boundary,
                     b.bel_a, b.v_sibling, b.h_sibling, b.bel_b, b.non_window, b.bel_c})
      out += '\t' + text::fixed(v);
    out += '\n';
  }
  return out;
}

inline void write_report(const std::vector<ReportRow>& rows, const std::filesystem::path& path) {
  detail::write_file(path, format_report(rows));
}

inline constexpr Rgb kHighBelief = {0, 255, 0};
inline constexpr Rgb kMidBelief = {255, 255, 0};
inline constexpr Rgb kLowBelief = {255, 0, 0};

inline Rgb belief_hue(double bel) {
  if (bel >= 0.4) return kHighBelief;
  if (bel >= 0.2) return kMidBelief;
  return kLowBelief;
}

/// Gray image with a 1-pixel outline per candidate, coloured by final belief.
/// Higher beliefs are drawn last so they stay visible where outlines cross.
inline RgbImage render_overlay(const GrayImage& image, const std::vector<CandidateArea>& cands) {
  RgbImage out(image.rows(), image.cols());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const auto g = image.cells()[i];
    out.cells()[i] = {g, g, g};
  }
  std::vector<const CandidateArea*> order;
  for (const auto& c : cands) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const CandidateArea* a, const CandidateArea* b) {
    if (a->bel_c != b->bel_c) return a->bel_c < b->bel_c;
    return a->id < b->id;
  });
  for (const auto* c : order) {
    const Rect& r = c->rect;
    if (r.top < 0 || r.left < 0 || r.bottom() > static_cast<int>(image.rows()) ||
        r.right() > static_cast<int>(image.cols()))
      throw Error(ErrorCode::RectOutOfBounds, "candidate " + std::to_string(c->id) + " leaves the image");
    const Rgb hue = belief_hue(c->bel_c);
    for (int x = r.left; x < r.right(); ++x) {
      out(r.top, x) = hue;
      out(r.bottom() - 1, x) = hue;
    }
    for (int y = r.top; y < r.bottom(); ++y) {
      out(y, r.left) = hue;
      out(y, r.right() - 1) = hue;
    }
  }
  return out;
}

inline void write_overlay(const GrayImage& image, const std::vector<CandidateArea>& cands,
                          const std::filesystem::path& path) {
  write_ppm(render_overlay(image, cands), path);
}

}  // namespace dsv

#endif  // DSV_REPORT_HPP
