#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"

namespace dsv {
namespace {

namespace fs = std::filesystem;

const std::string kData = DSV_DATA_DIR;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dsvision");
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  fs::path dir = fs::temp_directory_path() / "dsv_cli_test";
  void SetUp() override { fs::create_directories(dir); }
  void TearDown() override { fs::remove_all(dir); }
  std::string put(const std::string& name, const std::string& content) {
    const auto p = dir / name;
    detail::write_file(p, content);
    return p.string();
  }
};

TEST(Cli, Shutter) {
  const auto r = run({"shutter"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Bel(shutter) = 0.443\nBel(THETA) = 0.557\n");
}

TEST(Cli, ShutterWithChimneyKnowledge) {
  const auto r = run({"shutter", "--knowledge", kData + "/knowledge/chimney.ks"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Bel(chimney) = 0.325\nBel(THETA) = 0.675\n");
}

TEST(Cli, Table1) {
  const auto r = run({"table1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, format_report(fixtures::office_building_rows()));
  EXPECT_NE(r.out.find("\tW1-6\t"), std::string::npos);
}

TEST(Cli, VerifyFromFiles) {
  const auto r = run({"verify", kData + "/shutter_evidence.mass", "--knowledge", kData + "/knowledge/shutter.ks"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Bel(shutter) = 0.443\nBel(THETA) = 0.557\n");
}

TEST_F(CliFiles, VerifyVacuousEvidence) {
  const auto ev = put("vacuous.mass", "frame long low next-to\nfocal THETA 1\n");
  const auto r = run({"verify", ev, "--knowledge", kData + "/knowledge/shutter.ks"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Bel(shutter) = 0.000\nBel(THETA) = 1.000\n");
}

TEST_F(CliFiles, CombineReproducesEvidenceFile) {
  const auto a = put("long.mass", "frame long low next-to\nfocal long 0.6\nfocal THETA 0.4\n");
  const auto b = put("low.mass", "frame long low next-to\nfocal low 0.7\nfocal THETA 0.3\n");
  const auto c = put("next.mass", "frame long low next-to\nfocal next-to 0.5\nfocal THETA 0.5\n");
  const auto out = (dir / "combined.mass").string();
  const auto r = run({"combine", a, b, c, "--out", out});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto text = detail::read_file(out);
  EXPECT_NE(text.find("# conflict 0"), std::string::npos);
  const auto combined = parse_mass_function(text);
  const auto expected = parse_mass_function(detail::read_file(kData + "/shutter_evidence.mass"));
  ASSERT_EQ(combined.size(), expected.size());
  for (const auto& [clause, m] : expected.focals()) EXPECT_NEAR(combined.mass(clause), m, 1e-9);
}

TEST_F(CliFiles, CombineTotalConflictFails) {
  const auto a = put("a.mass", "frame a\nfocal a 1\n");
  const auto b = put("b.mass", "frame a\nfocal !a 1\n");
  const auto r = run({"combine", a, b});
  EXPECT_EQ(r.status, cli::kExitInputError);
  EXPECT_NE(r.err.find("conflict"), std::string::npos);
}

TEST_F(CliFiles, PipelineWritesReportAndOverlay) {
  const auto image = put("facade.pgm", encode_pgm(synthetic::make_facade().image));
  const auto report = (dir / "report.tsv").string();
  const auto overlay = (dir / "overlay.ppm").string();
  const auto r = run({"pipeline", image, "--config", kData + "/pipeline.cfg", "--knowledge",
                      kData + "/knowledge/window.ks", "--knowledge", kData + "/knowledge/sibling.ks", "--out", report,
                      "--overlay", overlay, "--workers", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto text = detail::read_file(report);
  EXPECT_EQ(text.rfind(std::string(kReportHeader), 0), 0u);
  EXPECT_NE(text.find("\t30\t10\t18\t14\t"), std::string::npos);
  EXPECT_EQ(detail::read_file(overlay).rfind("P6\n128 128\n255\n", 0), 0u);
  EXPECT_EQ(run({"pipeline", image, "--workers", "8"}).out, text);
}

TEST_F(CliFiles, PipelineThresholdOverride) {
  const auto image = put("facade.pgm", encode_pgm(synthetic::make_facade().image));
  const auto r = run({"pipeline", image, "--threshold", "5000"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, std::string(kReportHeader));
}

TEST_F(CliFiles, InputErrorsExitWithTwo) {
  const auto bad_image = put("bad.pgm", "P5\n2 2\n65535\n");
  EXPECT_EQ(run({"pipeline", bad_image}).status, cli::kExitInputError);
  const auto odd_image = put("odd.pgm", encode_pgm(GrayImage(12, 12)));
  EXPECT_EQ(run({"pipeline", odd_image}).status, cli::kExitInputError);
  const auto bad_ks = put("bad.ks", "hypothesis x\nframe a\nfocal !a 1\n");
  EXPECT_EQ(run({"shutter", "--knowledge", bad_ks}).status, cli::kExitInputError);
  const auto bad_cfg = put("bad.cfg", "no_such_key = 1\n");
  const auto image = put("facade.pgm", encode_pgm(synthetic::make_facade().image));
  EXPECT_EQ(run({"pipeline", image, "--config", bad_cfg}).status, cli::kExitInputError);
  EXPECT_EQ(run({"verify", (dir / "missing.mass").string(), "--knowledge", bad_ks}).status, cli::kExitInputError);
  EXPECT_EQ(run({}).status, cli::kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).status, cli::kExitInputError);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("pipeline"), std::string::npos);
}

}  // namespace
}  // namespace dsv
