#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dgs/experiments.hpp"
#include "dgs/probspec.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"backtrack search in symmetric groups over labelled digraph stacks"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve a search problem from a JSON spec");
  std::string spec_path, mode_flag, goal_flag, stats_out;
  bool with_oracle = false;
  solve->add_option("--spec", spec_path, "problem spec file (JSON)")->required();
  solve->add_option("--mode", mode_flag, "leon|orbital|strong|full (overrides the spec)");
  solve->add_option("--goal", goal_flag, "all|single|group (overrides the spec)");
  solve->add_flag("--oracle", with_oracle, "verify against brute force (degree <= 8)");
  solve->add_option("--stats-out", stats_out, "also write the report JSON to this file");

  // experiment grid / subdirect
  auto* experiment = app.add_subcommand("experiment", "run an experiment suite, CSV output");
  experiment->require_subcommand(1);
  auto* grid = experiment->add_subcommand("grid", "stabiliser problems in the n x n grid group");
  int grid_n = 4, grid_kind = 3, grid_count = 50;
  std::uint64_t grid_seed = 1;
  std::string grid_mode = "strong", grid_out;
  grid->add_option("--n", grid_n, "grid side length")->required();
  grid->add_option("--kind", grid_kind, "problem kind: 1, 2, or 3")->required();
  grid->add_option("--count", grid_count, "number of instances");
  grid->add_option("--mode", grid_mode, "leon|orbital|strong|full");
  grid->add_option("--seed", grid_seed, "experiment seed");
  grid->add_option("--out", grid_out, "CSV output file (default stdout)");

  auto* subdirect =
      experiment->add_subcommand("subdirect", "coset intersections of (k,n)-subdirect products");
  int sd_k = 2, sd_n = 3, sd_count = 50;
  std::uint64_t sd_seed = 1;
  std::string sd_out;
  subdirect->add_option("--k", sd_k, "number of factors")->required();
  subdirect->add_option("--n", sd_n, "factor degree")->required();
  subdirect->add_option("--count", sd_count, "number of instances");
  subdirect->add_option("--seed", sd_seed, "experiment seed");
  subdirect->add_option("--out", sd_out, "CSV output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      dgs::ProblemSpec spec = dgs::parse_problem_spec(read_file(spec_path));
      if (!mode_flag.empty()) spec.mode = dgs::mode_from_string(mode_flag);
      if (!goal_flag.empty()) spec.goal = dgs::goal_from_string(goal_flag);
      if (with_oracle && spec.degree > 8)
        throw std::runtime_error("--oracle requires degree <= 8");
      dgs::RunReport report = dgs::run(spec);
      if (with_oracle) {
        report.oracle_checked = true;
        report.oracle_agrees = dgs::oracle_matches(spec, report);
      }
      std::string json = dgs::report_to_json(report);
      std::cout << json << "\n";
      if (!stats_out.empty()) write_output(stats_out, json + "\n");
      if (with_oracle && !report.oracle_agrees) return 2;
      return 0;
    }
    if (grid->parsed()) {
      auto rows = dgs::grid_experiments(grid_n, grid_count, grid_kind,
                                        dgs::mode_from_string(grid_mode), grid_seed);
      write_output(grid_out, dgs::to_csv(rows));
      return 0;
    }
    if (subdirect->parsed()) {
      auto rows = dgs::subdirect_experiments(sd_k, sd_n, sd_count, sd_seed);
      write_output(sd_out, dgs::to_csv(rows));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
