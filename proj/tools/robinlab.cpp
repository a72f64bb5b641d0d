#include "robinlab/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"robinlab: positivity experiments for Robin problems"};
  app.require_subcommand(1);
  std::string out_dir;
  int threads = 1;
  bool verbose = false;
  app.add_option("--out", out_dir, "output directory (overrides output.dir)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--verbose", verbose, "progress on stderr");

  std::string config_path;
  auto* run = app.add_subcommand("run", "execute a pipeline config");
  run->add_option("config", config_path, "JSON config")->required();
  auto* sweep = app.add_subcommand("sweep", "execute a parameter sweep config");
  sweep->add_option("config", config_path, "JSON config")->required();
  for (auto* sub : {run, sweep}) {
    sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--verbose", verbose, "progress on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  robin::ExperimentConfig cfg;
  try {
    cfg = robin::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  }
  if (out_dir.empty()) out_dir = cfg.out_dir;
  std::ostream* log = verbose ? &std::cerr : nullptr;
  const auto outcome = run->parsed() ? robin::run_experiment(cfg, out_dir, threads, log)
                                     : robin::run_sweep(cfg, out_dir, threads, log);
  std::cout << outcome.summary;
  return outcome.exit_code;
}
