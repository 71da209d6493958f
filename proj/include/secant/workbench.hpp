#pragma once

#include "secant/oracle.hpp"
#include "secant/predictor.hpp"
#include "secant/report_json.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace secant {

enum class RowState { ok, predictor_only, finding, proven_disagreement, skipped };
const char* to_string(RowState);

struct SweepRow {
  std::string family;
  Instance inst;
  PredictionReport prediction;
  std::optional<long long> oracle_dim;
  std::optional<bool> agree;
  std::vector<std::size_t> trial_ranks;
  std::uint64_t oracle_seed = 0;
  std::optional<WlpResult> wlp;
  RowState state = RowState::predictor_only;
  std::string note;
  double runtime_ms = 0;
};

struct SweepConfig {
  int n_min = 3, n_max = 6;
  int l_min = 2, l_max = 5;
  int d_min = 2, d_max = 8;
  int r_max = 4;
  // general, linear_factor, balanced, reducible_forms, n3line
  std::set<std::string> families{"general"};
  bool predictor_only = false;
  bool wlp = false;
  PrimeFieldConfig oracle;
  int threads = 0;  // 0: hardware concurrency
  // Region n, l, s <= hook_region_max of the g-test; 0 disables it.
  int hook_region_max = 0;
};

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t proven = 0, conjectural = 0;
  std::size_t agree = 0, disagree = 0, skipped = 0, not_run = 0;
  std::size_t proven_disagreements = 0, findings = 0;
  std::size_t wlp_checked = 0, wlp_failed = 0, wlp_failed_proven = 0;
  std::size_t hook_rows = 0, hook_g_nonpositive = 0, hook_failures = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

SweepRow verify_case(const Instance& inst, const PrimeFieldConfig& cfg);

// Cells of the configured grid, in enumeration order.
std::vector<std::pair<std::string, Instance>> sweep_instances(const SweepConfig& cfg);

// Runs the grid on a work pool; rows arrive at `on_row` in enumeration order.
SweepResult sweep(const SweepConfig& cfg, const std::function<void(const SweepRow&)>& on_row = {});

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepRow& row);
Json to_json(const SweepRow& row);
Json to_json(const SweepSummary& summary);

// Runs fn(i) for i in [0, count) on `threads` workers and hands results to
// sink in index order from a single collector.
template <class T>
void ordered_parallel(std::size_t count, int threads, const std::function<T(std::size_t)>& fn,
                      const std::function<void(std::size_t, T&&)>& sink);

}  // namespace secant

#include "secant/detail/ordered_parallel.hpp"
