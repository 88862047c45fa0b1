// toric_census: count toric actions on a blowup of CP^2.
//
//   toric_census "1; 1/3, 1/3, 1/9"
//   toric_census --mode bound --format json "1; 0.3, 0.3, 0.1"

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "toric/cli.hpp"

int main(int argc, char** argv) {
  using namespace toric::cli;

  RunConfig cfg;
  std::string svg_dir;

  CLI::App app{"Enumerate toric actions on CP^2 blown up k >= 3 times, up to equivalence"};
  app.add_option("vector", cfg.vector, "blowup vector \"lambda; d1, d2, ..., dk\"")->required();
  app.add_option("--mode", cfg.mode, "what to compute")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Mode>{
              {"reduce", Mode::reduce}, {"check", Mode::check}, {"bound", Mode::bound}, {"census", Mode::census}},
          CLI::ignore_case))
      ->default_str("census");
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"table", Format::table}, {"json", Format::json}},
                                          CLI::ignore_case))
      ->default_str("table");
  app.add_option("--svg-dir", svg_dir, "write class-NNN.svg renderings of each class here");
  app.add_option("--jobs", cfg.jobs, "worker threads for the census")->check(CLI::Range(1u, 1024u))->default_val(1u);
  app.add_flag("--single-order", cfg.single_order,
               "chop only in the written order delta, d3, ..., dk and report differences from the all-orders search");
  app.add_flag("--seed-list", cfg.seed_list, "print the Hirzebruch trapezoid seeds only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage_error;
  }
  if (!svg_dir.empty()) cfg.svg_dir = svg_dir;

  return run(cfg, std::cout, std::cerr);
}
