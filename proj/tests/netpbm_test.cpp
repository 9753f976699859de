#include <gtest/gtest.h>

#include <filesystem>

#include "dsv/netpbm.hpp"
#include "dsv/report.hpp"

namespace dsv {
namespace {

ErrorCode parse_code(std::string_view data) {
  try {
    parse_pgm(data);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

TEST(ParsePgm, BinaryAndAsciiAgree) {
  const std::string p5 = std::string("P5\n# made by hand\n3 2\n255\n") + std::string("\x00\x10\x20\x30\x40\xff", 6);
  const std::string p2 = "P2\n3 2 255\n0 16 32\n48 64 255\n";
  const auto a = parse_pgm(p5);
  const auto b = parse_pgm(p2);
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a.cols(), 3u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a(1, 2), 255);
}

TEST(ParsePgm, SmallMaxvalIsRescaled) {
  const auto img = parse_pgm("P2 2 1 15\n0 15\n");
  EXPECT_EQ(img(0, 0), 0);
  EXPECT_EQ(img(0, 1), 255);
}

TEST(ParsePgm, Errors) {
  EXPECT_EQ(parse_code("P5\n2 2\n65535\n"), ErrorCode::UnsupportedFormat);
  EXPECT_EQ(parse_code("P6\n2 2\n255\n"), ErrorCode::UnsupportedFormat);
  EXPECT_EQ(parse_code("GIF89a"), ErrorCode::UnsupportedFormat);
  EXPECT_EQ(parse_code("P5\nx 2\n255\n"), ErrorCode::CorruptHeader);
  EXPECT_EQ(parse_code("P5\n0 2\n255\n"), ErrorCode::CorruptHeader);
  EXPECT_EQ(parse_code(std::string("P5\n2 2\n255\n") + "abc"), ErrorCode::TruncatedData);
  EXPECT_EQ(parse_code("P2\n2 2\n255\n1 2 3"), ErrorCode::TruncatedData);
  EXPECT_EQ(parse_code("P2\n1 1\n10\n11"), ErrorCode::CorruptHeader);
}

TEST(Pgm, RoundTripThroughFile) {
  GrayImage img(5, 7);
  for (std::size_t i = 0; i < img.size(); ++i) img.cells()[i] = static_cast<std::uint8_t>(i * 7);
  const auto path = std::filesystem::temp_directory_path() / "dsv_netpbm_roundtrip.pgm";
  write_pgm(img, path);
  EXPECT_EQ(read_pgm(path), img);
  std::filesystem::remove(path);
  EXPECT_THROW(read_pgm(path), Error);
}

TEST(Ppm, Encoding) {
  RgbImage img(1, 2);
  img(0, 0) = {1, 2, 3};
  img(0, 1) = {250, 251, 252};
  EXPECT_EQ(encode_ppm(img), std::string("P6\n2 1\n255\n\x01\x02\x03\xfa\xfb\xfc", 17));
}

TEST(Overlay, OutlineColouredByBelief) {
  GrayImage img(16, 16, 90);
  CandidateArea strong, weak;
  strong.id = 1;
  strong.rect = {2, 2, 6, 6};
  strong.bel_c = 0.49;
  weak.id = 2;
  weak.rect = {4, 4, 8, 8};
  weak.bel_c = 0.05;
  const auto out = render_overlay(img, {strong, weak});
  EXPECT_EQ(out(2, 2), kHighBelief);
  EXPECT_EQ(out(11, 11), kLowBelief);
  EXPECT_EQ(out(7, 4), kHighBelief);  // crossing point: the stronger outline wins
  EXPECT_EQ(out(0, 0), (Rgb{90, 90, 90}));
  EXPECT_EQ(out(5, 5), (Rgb{90, 90, 90}));

  weak.rect = {10, 10, 8, 8};
  EXPECT_THROW(render_overlay(img, {weak}), Error);
}

TEST(Overlay, Hues) {
  EXPECT_EQ(belief_hue(0.45), kHighBelief);
  EXPECT_EQ(belief_hue(0.25), kMidBelief);
  EXPECT_EQ(belief_hue(0.1), kLowBelief);
}

}  // namespace
}  // namespace dsv
