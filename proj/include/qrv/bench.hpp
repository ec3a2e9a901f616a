#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qrv/sim.hpp"
#include "qrv/stats.hpp"

namespace qrv {

// One point of a parameter sweep. When n_high > 0 the set sizes n1 = n2 are
// drawn uniformly from [n_low, n_high] per channel-set draw and the n1/n2
// fields hold the range maximum (so the emitted bounds stay valid).
struct GridPoint {
  std::string label;  // the `point` CSV token; must not contain commas
  int total = 0;      // N
  int n1 = 0, n2 = 0;
  int common = 0;  // G
  int radios1 = 1, radios2 = 1;
  int n_low = 0, n_high = 0;
};

struct ExperimentPreset {
  std::string name;
  std::vector<GridPoint> grid;
  int draws = 100;  // channel-set draws per point
  int runs = 200;   // trials per channel-set draw
  std::uint64_t seed = 1;
  std::uint64_t drift_period = 0;  // 0 = one guaranteed-rendezvous cycle per draw
  std::vector<Algorithm> algorithms = {Algorithm::kQuasiRandom, Algorithm::kRandom};
};

// Named presets: sweep-N-fixed-G, sweep-N-proportional, sweep-radios,
// sweep-G, custom (empty grid; add points yourself). Throws on unknown names.
ExperimentPreset make_preset(std::string_view name);

GridPoint custom_point(int total, int n1, int n2, int common, int radios1, int radios2);

struct SweepRow {
  std::string preset, point, algorithm;
  int n1 = 0, n2 = 0, common = 0, radios1 = 0, radios2 = 0, total = 0;
  std::uint64_t trials = 0;
  double ettr = 0.0, ci95 = 0.0;
  std::uint64_t mttr_measured = 0, mttr_bound = 0;
  double ettr_bound = 0.0;
  bool skipped = false;
  std::string reason;  // comma-free; empty unless skipped

  bool operator==(const SweepRow&) const = default;
};

struct ExperimentOutcome {
  std::vector<SweepRow> rows;
  std::uint64_t bound_violations = 0;  // quasi-random trials past their guarantee
};

// Runs every grid point in order: per point, `draws` channel-set draws and
// `runs` trials per draw, the same drift for every algorithm of a run. All
// randomness derives from preset.seed (rule in rng.hpp), so output is
// byte-reproducible. One row per (point, algorithm); rows for infeasible
// points or for algorithms whose trials exhausted the horizon are marked
// skipped with a reason.
ExperimentOutcome run_experiment(const ExperimentPreset& preset);

// CSV with a fixed header; decimals carry 6 significant digits. The last
// column is "ok" or "skipped <reason>".
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::string emit_csv_string(const std::vector<SweepRow>& rows);

// Writes via emit_csv; path "-" means stdout. Throws on any write failure.
void write_csv_file(const std::vector<SweepRow>& rows, const std::string& path);

// Inverse of emit_csv (numbers at emitted precision). Throws on malformed input.
std::vector<SweepRow> parse_csv(std::istream& in);

}  // namespace qrv
