#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hypermap/interpolate.hpp"

namespace hypermap::cli {

enum class Format { kCsv, kJson, kWalsh };

struct RunConfig {
  int darts = 1;
  int max = 5;                       // totals upper bound
  Format format = Format::kCsv;
  int threads = 0;                   // 0: HYPERMAP_THREADS env, else hardware
  std::string cache_path = ".fcache";
  int oracle_cutoff = 6;
  bool force = false;
  bool quiet = false;
};

/// Computes the coefficient table for r darts: warm-loads the F cache,
/// evaluates the interpolation grid on a worker pool, validates the result
/// (Euler constraints and the totals cross-check), persists the cache.
CoeffTable compute_table(int r, int threads, const std::string& cache_path,
                         bool quiet, std::ostream& diag, EvalStats* stats = nullptr);

void emit_table(const CoeffTable& table, Format format, std::ostream& out);

/// First difference between two tables as a human-readable line, or nullopt
/// when identical (missing rows, extra rows and count mismatches all count).
std::optional<std::string> diff_tables(const CoeffTable& got, const CoeffTable& want);

// Subcommand entry points; return the process exit status.
int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_totals(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

}  // namespace hypermap::cli
