#include <CLI11.hpp>

#include "rss/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rss: multidimensional random subset sum laboratory"};
  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  rss::CliOverrides overrides;
  app.add_option("--seed", overrides.seed, "master seed (overrides config)");
  app.add_option("--out", overrides.out, "output path (overrides config; default stdout)");
  app.add_option("--format", overrides.format, "csv or json (overrides config)");
  app.add_option("--workers", overrides.workers, "worker threads (overrides config)");
  CLI11_PARSE(app, argc, argv);
  return rss::run_config_file(config_path, overrides);
}
