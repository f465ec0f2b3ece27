#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using hypermap::cli::Format;
  using hypermap::cli::RunConfig;

  CLI::App app{"Exact enumeration of rooted hypermaps by vertices, edges and faces"};
  app.require_subcommand(1);

  RunConfig cfg;
  const std::map<std::string, Format> format_names{
      {"csv", Format::kCsv}, {"json", Format::kJson}, {"walsh", Format::kWalsh}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker count (default: HYPERMAP_THREADS or hardware)");
    sub->add_option("--cache", cfg.cache_path, "F-value cache file")
        ->capture_default_str();
    sub->add_flag("--quiet", cfg.quiet, "Suppress progress and timing output");
  };

  CLI::App* table = app.add_subcommand("table", "Compute the coefficient table for r darts");
  table->add_option("--darts,-r", cfg.darts, "Number of darts")->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->capture_default_str();
  add_common(table);

  CLI::App* verify = app.add_subcommand("verify", "Recompute and diff against the published table");
  verify->add_option("--darts,-r", cfg.darts, "Number of darts (1..7 or 13)")->required()
      ->check(CLI::PositiveNumber);
  add_common(verify);

  CLI::App* oracle = app.add_subcommand("oracle", "Compare against the brute-force constellation scan");
  oracle->add_option("--darts,-r", cfg.darts, "Number of darts")->required()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--cutoff", cfg.oracle_cutoff, "Largest r runnable without --force")
      ->capture_default_str();
  oracle->add_flag("--force", cfg.force, "Run past the cutoff");
  add_common(oracle);

  CLI::App* totals = app.add_subcommand("totals", "Print total counts for r = 1..max");
  totals->add_option("--max", cfg.max, "Largest dart count")->required()
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (table->parsed()) return hypermap::cli::cmd_table(cfg, std::cout, std::cerr);
  if (verify->parsed()) return hypermap::cli::cmd_verify(cfg, std::cout, std::cerr);
  if (oracle->parsed()) return hypermap::cli::cmd_oracle(cfg, std::cout, std::cerr);
  if (totals->parsed()) return hypermap::cli::cmd_totals(cfg, std::cout, std::cerr);
  return 1;
}
