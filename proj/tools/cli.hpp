#ifndef DSV_TOOLS_CLI_HPP
#define DSV_TOOLS_CLI_HPP

#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsv.hpp"

namespace dsv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;

namespace detail {

inline void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << content;
  else
    dsv::detail::write_file(out_path, content);
}

inline KnowledgeSource load_knowledge(const std::string& path) {
  return parse_knowledge(dsv::detail::read_file(path));
}

/// Knowledge sources for the window stages: the first file replaces the
/// single-window source, the second the facade (sibling) source.
inline std::pair<KnowledgeSource, KnowledgeSource> stage_knowledge(const std::vector<std::string>& paths) {
  if (paths.size() > 2) throw Error(ErrorCode::InvalidParams, "at most two --knowledge files (window, sibling)");
  return {paths.size() > 0 ? load_knowledge(paths[0]) : library::window_knowledge(),
          paths.size() > 1 ? load_knowledge(paths[1]) : library::sibling_knowledge()};
}

inline std::string verification_lines(const VerificationResult& v) {
  return "Bel(" + v.hypothesis + ") = " + text::fixed(v.bel) + "\nBel(THETA) = " + text::fixed(v.theta) + "\n";
}

}  // namespace detail

/// Runs the command line `args` (program name first). Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evidential window detection on image pyramids", "dsvision"};
  app.require_subcommand(1);

  std::string out_path;
  std::string overlay_path;
  std::string config_path;
  std::vector<std::string> knowledge_paths;
  std::optional<double> threshold;
  unsigned workers = 1;

  auto* combine_cmd = app.add_subcommand("combine", "Combine mass files with Dempster's rule");
  std::vector<std::string> mass_paths;
  combine_cmd->add_option("masses", mass_paths, "Mass function files")->required()->check(CLI::ExistingFile);
  combine_cmd->add_option("--out", out_path, "Write the combined mass function here");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a hypothesis from accumulated evidence");
  std::string evidence_path;
  verify_cmd->add_option("evidence", evidence_path, "Evidence mass file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--knowledge", knowledge_paths, "Knowledge source file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--out", out_path, "Write the result here");

  auto* pipeline_cmd = app.add_subcommand("pipeline", "Detect windows in a PGM image");
  std::string image_path;
  pipeline_cmd->add_option("image", image_path, "Input PGM (P2 or P5)")->required()->check(CLI::ExistingFile);
  pipeline_cmd->add_option("--config", config_path, "Pipeline config (key = value)")->check(CLI::ExistingFile);
  pipeline_cmd->add_option("--knowledge", knowledge_paths, "Window then sibling knowledge files")
      ->check(CLI::ExistingFile);
  pipeline_cmd->add_option("--out", out_path, "Report TSV path (stdout when omitted)");
  pipeline_cmd->add_option("--overlay", overlay_path, "Overlay PPM path");
  pipeline_cmd->add_option("--threshold", threshold, "Micro-edge gradient threshold (overrides the config)");
  pipeline_cmd->add_option("--workers", workers, "Worker threads per stage")->check(CLI::PositiveNumber);

  auto* table_cmd = app.add_subcommand("table1", "Replay the bundled office-building belief table");
  table_cmd->add_option("--knowledge", knowledge_paths, "Window then sibling knowledge files")
      ->check(CLI::ExistingFile);
  table_cmd->add_option("--out", out_path, "Report TSV path (stdout when omitted)");

  auto* shutter_cmd = app.add_subcommand("shutter", "Replay the bundled shutter verification");
  shutter_cmd->add_option("--knowledge", knowledge_paths, "Shutter knowledge file")->check(CLI::ExistingFile);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dsvision: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (combine_cmd->parsed()) {
      std::vector<MassFunction> masses;
      for (const auto& p : mass_paths) {
        auto m = parse_mass_function(dsv::detail::read_file(p));
        if (!masses.empty() && !(m.frame() == masses.front().frame()))
          throw Error(ErrorCode::FrameMismatch, p + " uses a different frame");
        masses.push_back(std::move(m));
      }
      const auto outcome = combine_all(masses);
      detail::emit(format_mass_function(outcome.result) + "# conflict " + text::exact(outcome.conflict) + "\n",
                   out_path, out);
    } else if (verify_cmd->parsed()) {
      if (knowledge_paths.size() != 1) throw Error(ErrorCode::InvalidParams, "verify takes one --knowledge file");
      const auto ks = detail::load_knowledge(knowledge_paths.front());
      const auto evidence = parse_mass_function(dsv::detail::read_file(evidence_path), ks.frame());
      detail::emit(detail::verification_lines(verify(evidence, ks)), out_path, out);
    } else if (pipeline_cmd->parsed()) {
      auto cfg = config_path.empty() ? PipelineConfig{} : parse_pipeline_config(dsv::detail::read_file(config_path));
      if (threshold) {
        if (*threshold < 0) throw Error(ErrorCode::InvalidParams, "--threshold must be non-negative");
        cfg.edge_threshold = static_cast<int>(std::lround(*threshold));
      }
      const auto [window_ks, sibling_ks] = detail::stage_knowledge(knowledge_paths);
      const auto image = read_pgm(image_path);
      const auto res = run_pipeline(image, cfg, window_ks, sibling_ks, LevelExecutor(workers));
      detail::emit(format_report(to_report_rows(res.candidates)), out_path, out);
      if (!overlay_path.empty()) write_overlay(res.pyramid.base(), res.candidates, overlay_path);
    } else if (table_cmd->parsed()) {
      const auto [window_ks, sibling_ks] = detail::stage_knowledge(knowledge_paths);
      detail::emit(format_report(fixtures::office_building_rows(window_ks, sibling_ks)), out_path, out);
    } else if (shutter_cmd->parsed()) {
      if (knowledge_paths.size() > 1) throw Error(ErrorCode::InvalidParams, "shutter takes one --knowledge file");
      const auto ks = knowledge_paths.empty() ? library::shutter_knowledge() : detail::load_knowledge(knowledge_paths[0]);
      out << detail::verification_lines(verify(fixtures::shutter_evidence(ks.frame()), ks));
    }
  } catch (const Error& e) {
    err << "dsvision: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace dsv::cli

#endif  // DSV_TOOLS_CLI_HPP
