#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "fcache.hpp"
#include "hypermap/henum.hpp"
#include "hypermap/oracle.hpp"
#include "hypermap/parallel.hpp"
#include "hypermap/reference_data.hpp"

namespace hypermap::cli {

namespace {

using json = nlohmann::ordered_json;

std::string triple_str(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

}  // namespace

CoeffTable compute_table(int r, int threads, const std::string& cache_path,
                         bool quiet, std::ostream& diag, EvalStats* stats) {
  auto t0 = std::chrono::steady_clock::now();

  FGrid fgrid;
  std::size_t warm = load_fcache(cache_path, fgrid);
  HGrid hgrid;
  auto evaluator = [&](int m, int n, int lambda) {
    return h_r_point(r, m, n, lambda, fgrid, hgrid);
  };

  EvalStats local;
  CoeffTable table = interpolate_table(r, evaluator, threads, &local);
  if (stats) *stats = local;

  table.check_euler();
  BigInt expected_total = totals(r).back();
  if (table.total() != expected_total) {
    throw std::logic_error("compute_table: table total " + table.total().to_string() +
                           " != totals(r) " + expected_total.to_string());
  }

  save_fcache(cache_path, fgrid);

  if (!quiet) {
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
    diag << "r=" << r << ": " << table.entries.size() << " entries, "
         << local.points_computed << " point evaluations ("
         << warm << " F values from cache), "
         << std::fixed << std::setprecision(2) << dt.count() << " s\n";
  }
  return table;
}

void emit_table(const CoeffTable& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv: {
      out << "v,e,f,count\n";
      for (const auto& [key, count] : table.entries) {
        out << key[0] << ',' << key[1] << ',' << key[2] << ',' << count << '\n';
      }
      return;
    }
    case Format::kJson: {
      json doc;
      doc["darts"] = table.darts;
      doc["entries"] = json::array();
      for (const auto& [key, count] : table.entries) {
        doc["entries"].push_back(json{{"v", key[0]},
                                      {"e", key[1]},
                                      {"f", key[2]},
                                      {"count", count.to_string()}});
      }
      doc["total"] = table.total().to_string();
      out << doc.dump() << '\n';
      return;
    }
    case Format::kWalsh: {
      // The published tables list rows by faces, then edges, then vertices.
      std::vector<std::array<int, 3>> keys;
      keys.reserve(table.entries.size());
      for (const auto& [key, _] : table.entries) keys.push_back(key);
      std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        return std::tie(a[2], a[1], a[0]) < std::tie(b[2], b[1], b[0]);
      });
      out << "r = " << table.darts << '\n';
      out << std::setw(3) << 'v' << std::setw(3) << 'e' << std::setw(3) << 'f'
          << std::setw(15) << 'N' << '\n';
      for (const auto& key : keys) {
        out << std::setw(3) << key[0] << std::setw(3) << key[1] << std::setw(3) << key[2]
            << std::setw(15) << table.entries.at(key).to_string() << '\n';
      }
      return;
    }
  }
}

std::optional<std::string> diff_tables(const CoeffTable& got, const CoeffTable& want) {
  for (const auto& [key, count] : want.entries) {
    auto it = got.entries.find(key);
    if (it == got.entries.end()) {
      return "missing row " + triple_str(key) + " (expected " + count.to_string() + ")";
    }
    if (it->second != count) {
      return "count mismatch at " + triple_str(key) + ": got " + it->second.to_string() +
             ", expected " + count.to_string();
    }
  }
  for (const auto& [key, count] : got.entries) {
    if (!want.entries.count(key)) {
      return "unexpected row " + triple_str(key) + " = " + count.to_string();
    }
  }
  return std::nullopt;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  try {
    int threads = resolve_thread_count(cfg.threads);
    CoeffTable table = compute_table(cfg.darts, threads, cfg.cache_path, cfg.quiet, diag);
    emit_table(table, cfg.format, out);
    return 0;
  } catch (const std::exception& e) {
    diag << "table: " << e.what() << '\n';
    return 3;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (!has_reference(cfg.darts)) {
    diag << "verify: no reference table for r=" << cfg.darts
         << " (available: 1..7 and 13)\n";
    return 2;
  }
  try {
    int threads = resolve_thread_count(cfg.threads);
    CoeffTable table = compute_table(cfg.darts, threads, cfg.cache_path, cfg.quiet, diag);
    if (auto diff = diff_tables(table, reference_table(cfg.darts))) {
      out << "verify r=" << cfg.darts << ": FAIL: " << *diff << '\n';
      return 1;
    }
    out << "verify r=" << cfg.darts << ": OK (" << table.entries.size() << " rows)\n";
    return 0;
  } catch (const std::exception& e) {
    diag << "verify: " << e.what() << '\n';
    return 3;
  }
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (cfg.darts > cfg.oracle_cutoff && !cfg.force) {
    diag << "oracle: r=" << cfg.darts << " exceeds cutoff " << cfg.oracle_cutoff
         << " ((r!)^2 pair scans); pass --force to run anyway\n";
    return 2;
  }
  try {
    int threads = resolve_thread_count(cfg.threads);
    CoeffTable brute = brute_force_table(cfg.darts, threads);
    CoeffTable interp = compute_table(cfg.darts, threads, cfg.cache_path, cfg.quiet, diag);
    if (auto diff = diff_tables(interp, brute)) {
      out << "oracle r=" << cfg.darts << ": FAIL: " << *diff << '\n';
      return 1;
    }
    out << "oracle r=" << cfg.darts << ": OK (" << brute.entries.size()
        << " rows agree)\n";
    return 0;
  } catch (const std::exception& e) {
    diag << "oracle: " << e.what() << '\n';
    return 3;
  }
}

int cmd_totals(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (cfg.max < 1) {
    diag << "totals: --max must be >= 1\n";
    return 2;
  }
  for (const BigInt& v : totals(cfg.max)) out << v << '\n';
  return 0;
}

}  // namespace hypermap::cli
