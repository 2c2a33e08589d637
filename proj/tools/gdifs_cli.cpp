// gdifs: command-line front end over the C API.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gdifs/gdifs.h"

namespace {

struct Flags {
  std::string file;
  int depth = -1;
  std::string cutoff;
  double tol = 1e-12;
  int levels = 4;
  std::string out;
  std::size_t vertex = 0;
  std::vector<std::string> interval;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("file", f.file, "IFS document (YAML or JSON)")->required();
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  cmd->add_option("--tol", f.tol, "Dimension solver tolerance")->capture_default_str();
}

int finish(char* output, char* error, int code) {
  if (output && *output) std::fputs(output, stdout);
  if (error && *error) std::fprintf(stderr, "gdifs: %s\n", error);
  gdifs_string_free(output);
  gdifs_string_free(error);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension, exact measure, gap sets and one-vertex exclusion for directed-graph IFSs"};
  app.require_subcommand(1);
  Flags f;

  auto* validate = app.add_subcommand("validate", "Check the structure, hulls and convex strong separation");
  auto* dimension = app.add_subcommand("dimension", "Hausdorff dimension and Perron eigenvector");
  auto* measure = app.add_subcommand("measure", "Certify the exact-measure conditions of a two-vertex family");
  auto* gaps = app.add_subcommand("gaps", "Gap lengths and their coset-expression cross-check");
  auto* density = app.add_subcommand("density", "Measure and density bounds of an interval");
  auto* classify = app.add_subcommand("classify", "Decide whether the attractor can come from a one-vertex IFS");
  auto* render = app.add_subcommand("render", "SVG of the level intervals");

  for (auto* cmd : {validate, dimension, measure, gaps, density, classify, render}) add_common(cmd, f);
  for (auto* cmd : {gaps, density, classify})
    cmd->add_option("--vertex", f.vertex, "Vertex id")->capture_default_str();
  gaps->add_option("--depth", f.depth, "Level depth (default 6)");
  gaps->add_option("--cutoff", f.cutoff, "Smallest gap length compared, as p/q");
  density->add_option("--depth", f.depth, "Level depth (default 10)");
  density->add_option("--interval", f.interval, "Interval endpoints lo hi, as p/q")->expected(2)->required();
  render->add_option("--levels", f.levels, "Deepest level drawn (at most 12)")->capture_default_str();
  render->add_option("--out", f.out, "SVG output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  gdifs_ifs* ifs = nullptr;
  const gdifs_status st = gdifs_load(f.file.c_str(), &ifs);
  if (st != GDIFS_OK) {
    std::fprintf(stderr, "gdifs: %s\n", gdifs_last_error());
    return st == GDIFS_INTERNAL ? 1 : 2;
  }

  gdifs_run_options opt;
  gdifs_run_options_init(&opt);
  opt.format = f.format == "machine" ? GDIFS_FORMAT_MACHINE : GDIFS_FORMAT_TEXT;
  opt.depth = f.depth;
  opt.cutoff = f.cutoff.empty() ? nullptr : f.cutoff.c_str();
  opt.tol = f.tol;
  opt.levels = f.levels;
  opt.out_path = f.out.empty() ? nullptr : f.out.c_str();
  opt.vertex = f.vertex;
  if (f.interval.size() == 2) {
    opt.interval_lo = f.interval[0].c_str();
    opt.interval_hi = f.interval[1].c_str();
  }

  char* output = nullptr;
  char* error = nullptr;
  const int code = gdifs_run(command.c_str(), ifs, &opt, &output, &error);
  gdifs_free(ifs);
  return finish(output, error, code);
}
