#ifndef DSV_NETPBM_HPP
#define DSV_NETPBM_HPP

#include <array>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>

#include "dsv/error.hpp"
#include "dsv/grid.hpp"

namespace dsv {

using Rgb = std::array<std::uint8_t, 3>;
using RgbImage = Grid<Rgb>;

namespace detail {

class PnmCursor {
 public:
  explicit PnmCursor(std::string_view data) : data_(data) {}

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (std::isspace(static_cast<unsigned char>(data_[pos_]))) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::optional<long> integer() {
    skip_space_and_comments();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      v = v * 10 + (data_[pos_] - '0');
      if (v > 1'000'000'000) return std::nullopt;
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return v;
  }

  bool at_end() const { return pos_ >= data_.size(); }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  char peek() const { return data_[pos_]; }
  std::string_view rest() const { return data_.substr(pos_); }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
}

}  // namespace detail

/// Decodes a binary (P5) or ASCII (P2) graymap with maxval <= 255. Samples are
/// rescaled to 0..255 when maxval is smaller.
inline GrayImage parse_pgm(std::string_view data) {
  if (data.size() < 2 || data[0] != 'P') throw Error(ErrorCode::UnsupportedFormat, "not a netpbm file");
  const char kind = data[1];
  if (kind != '2' && kind != '5') throw Error(ErrorCode::UnsupportedFormat, std::string("netpbm type P") + kind);
  detail::PnmCursor cur(data.substr(2));
  const auto width = cur.integer();
  const auto height = cur.integer();
  const auto maxval = cur.integer();
  if (!width || !height || !maxval || *width == 0 || *height == 0 || *maxval == 0)
    throw Error(ErrorCode::CorruptHeader, "bad width, height or maxval");
  if (*maxval > 255) throw Error(ErrorCode::UnsupportedFormat, "maxval " + std::to_string(*maxval) + " above 255");

  GrayImage img(static_cast<std::size_t>(*height), static_cast<std::size_t>(*width));
  auto store = [&](std::size_t i, long v) {
    if (v > *maxval) throw Error(ErrorCode::CorruptHeader, "sample exceeds maxval");
    img.cells()[i] = static_cast<std::uint8_t>(*maxval == 255 ? v : (v * 255 + *maxval / 2) / *maxval);
  };
  if (kind == '5') {
    // Exactly one whitespace byte separates the header from the raster.
    if (cur.at_end() || !std::isspace(static_cast<unsigned char>(cur.peek())))
      throw Error(ErrorCode::CorruptHeader, "missing separator after maxval");
    cur.advance(1);
    const auto raster = cur.rest();
    if (raster.size() < img.size())
      throw Error(ErrorCode::TruncatedData, std::to_string(raster.size()) + " of " + std::to_string(img.size()) + " bytes");
    for (std::size_t i = 0; i < img.size(); ++i) store(i, static_cast<unsigned char>(raster[i]));
  } else {
    for (std::size_t i = 0; i < img.size(); ++i) {
      cur.skip_space_and_comments();
      if (cur.at_end()) throw Error(ErrorCode::TruncatedData, "ASCII raster ends at sample " + std::to_string(i));
      const auto v = cur.integer();
      if (!v) throw Error(ErrorCode::CorruptHeader, "non-numeric sample " + std::to_string(i));
      store(i, *v);
    }
  }
  return img;
}

inline GrayImage read_pgm(const std::filesystem::path& path) { return parse_pgm(detail::read_file(path)); }

inline std::string encode_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.cells().data()), img.size());
  return out;
}

inline void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  detail::write_file(path, encode_pgm(img));
}

inline std::string encode_ppm(const RgbImage& img) {
  std::string out = "P6\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n255\n";
  out.reserve(out.size() + img.size() * 3);
  for (const auto& px : img.cells()) out.append(reinterpret_cast<const char*>(px.data()), 3);
  return out;
}

inline void write_ppm(const RgbImage& img, const std::filesystem::path& path) {
  detail::write_file(path, encode_ppm(img));
}

}  // namespace dsv

#endif  // DSV_NETPBM_HPP
