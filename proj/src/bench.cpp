#include "qrv/bench.hpp"

#include <cassert>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qrv {

namespace {

const std::vector<int> kChannelGrid = {64, 96, 128, 160, 192};

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Empty when the point is runnable, otherwise a comma-free reason.
std::string infeasible_reason(const GridPoint& point) {
  const int n1_min = point.n_high > 0 ? point.n_low : point.n1;
  const int n2_min = point.n_high > 0 ? point.n_low : point.n2;
  if (point.total < 2) return "skipped N below 2";
  if (point.common < 1) return "skipped G below 1";
  if (point.common > n1_min || point.common > n2_min) return "skipped G exceeds a set size";
  if (point.n1 + point.n2 - point.common > point.total) return "skipped sets exceed N";
  if (point.radios1 < 1 || point.radios1 > n1_min || point.radios2 < 1 ||
      point.radios2 > n2_min)
    return "skipped radios exceed set size";
  return "";
}

}  // namespace

GridPoint custom_point(int total, int n1, int n2, int common, int radios1, int radios2) {
  GridPoint point;
  point.label = "custom";
  point.total = total;
  point.n1 = n1;
  point.n2 = n2;
  point.common = common;
  point.radios1 = radios1;
  point.radios2 = radios2;
  return point;
}

ExperimentPreset make_preset(std::string_view name) {
  ExperimentPreset preset;
  preset.name = std::string(name);
  if (name == "sweep-N-fixed-G") {
    for (int total : kChannelGrid) {
      GridPoint point;
      point.label = std::to_string(total);
      point.total = total;
      point.n_low = 14;
      point.n_high = 16;
      point.n1 = point.n2 = point.n_high;
      point.common = 2;
      point.radios1 = 2;
      point.radios2 = 4;
      preset.grid.push_back(point);
    }
  } else if (name == "sweep-N-proportional") {
    for (int total : kChannelGrid) {
      GridPoint point;
      point.label = std::to_string(total);
      point.total = total;
      point.n1 = point.n2 = total / 2;
      point.common = total / 8;
      point.radios1 = 3;
      point.radios2 = 6;
      preset.grid.push_back(point);
    }
  } else if (name == "sweep-radios") {
    for (int radios = 1; radios <= 5; ++radios) {
      GridPoint point;
      point.label = std::to_string(radios) + "x" + std::to_string(radios);
      point.total = 160;
      point.n1 = point.n2 = 40;
      point.common = 20;
      point.radios1 = point.radios2 = radios;
      preset.grid.push_back(point);
    }
  } else if (name == "sweep-G") {
    for (int common = 3; common <= 27; common += 4) {
      GridPoint point;
      point.label = std::to_string(common);
      point.total = 160;
      point.n1 = point.n2 = 64;
      point.common = common;
      point.radios1 = point.radios2 = 5;
      preset.grid.push_back(point);
    }
  } else if (name == "custom") {
    // grid filled by the caller
  } else {
    throw std::invalid_argument("unknown preset: " + preset.name);
  }
  return preset;
}

ExperimentOutcome run_experiment(const ExperimentPreset& preset) {
  if (preset.runs < 2 || preset.draws < 1)
    throw std::invalid_argument("run_experiment: need draws >= 1 and runs >= 2");
  if (preset.grid.empty()) throw std::invalid_argument("run_experiment: empty grid");
  if (preset.algorithms.empty())
    throw std::invalid_argument("run_experiment: no algorithms selected");

  ExperimentOutcome outcome;
  for (std::size_t pi = 0; pi < preset.grid.size(); ++pi) {
    const GridPoint& point = preset.grid[pi];
    const std::uint64_t point_seed = rng::derive(preset.seed, pi);

    std::vector<SweepRow> rows(preset.algorithms.size());
    for (std::size_t a = 0; a < preset.algorithms.size(); ++a) {
      SweepRow& row = rows[a];
      row.preset = preset.name;
      row.point = point.label;
      row.algorithm = std::string(algorithm_name(preset.algorithms[a]));
      row.n1 = point.n1;
      row.n2 = point.n2;
      row.common = point.common;
      row.radios1 = point.radios1;
      row.radios2 = point.radios2;
      row.total = point.total;
    }

    const std::string reason = infeasible_reason(point);
    if (!reason.empty()) {
      for (auto& row : rows) {
        row.skipped = true;
        row.reason = reason;
        outcome.rows.push_back(row);
      }
      continue;
    }

    // Bounds at the emitted sizes (the range maximum for drawn-n points, so
    // they stay valid for every draw).
    const int p11 = two_primes_at_least((point.n1 + point.radios1 - 1) / point.radios1).second;
    const int p21 = two_primes_at_least((point.n2 + point.radios2 - 1) / point.radios2).second;
    const BoundSet bounds = mttr_bounds(point.n1, point.radios1, point.n2, point.radios2,
                                        point.total, p11, p21, point.common);

    std::vector<std::vector<TrialResult>> results(preset.algorithms.size());
    std::vector<std::uint64_t> failures(preset.algorithms.size(), 0);
    for (auto& list : results)
      list.reserve(static_cast<std::size_t>(preset.draws) * static_cast<std::size_t>(preset.runs));

    for (int draw = 0; draw < preset.draws; ++draw) {
      const std::uint64_t draw_seed = rng::derive(point_seed, static_cast<std::uint64_t>(draw));
      rng::Stream setup(rng::derive(draw_seed, 0));

      int n1 = point.n1, n2 = point.n2;
      if (point.n_high > 0) {
        n1 = n2 = point.n_low +
                  static_cast<int>(setup.below(static_cast<std::uint64_t>(point.n_high - point.n_low + 1)));
      }
      auto [set1, set2] = sample_channel_sets(point.total, n1, n2, point.common, setup);
      const std::uint64_t period =
          preset.drift_period > 0
              ? preset.drift_period
              : qr_mttr_horizon(set1, point.radios1, set2, point.radios2);

      for (int run = 0; run < preset.runs; ++run) {
        const std::uint64_t run_seed =
            rng::derive(draw_seed, static_cast<std::uint64_t>(run) + 1);
        rng::Stream drift_stream(rng::derive(run_seed, 0));
        const std::uint64_t drift = sample_drift(drift_stream, period);

        for (std::size_t a = 0; a < preset.algorithms.size(); ++a) {
          TrialConfig config;
          config.set1 = set1;
          config.set2 = set2;
          config.radios1 = point.radios1;
          config.radios2 = point.radios2;
          config.drift = drift;
          config.algorithm = preset.algorithms[a];
          config.seed = rng::derive(run_seed, a + 1);
          const TrialResult result = run_trial(config);
          if (!result.success) {
            ++failures[a];
            // A quasi-random trial runs with horizon = its guaranteed window,
            // so exhausting it is a bound violation.
            if (preset.algorithms[a] == Algorithm::kQuasiRandom) ++outcome.bound_violations;
          }
          results[a].push_back(result);
        }
      }
    }

    for (std::size_t a = 0; a < preset.algorithms.size(); ++a) {
      SweepRow& row = rows[a];
      const bool quasi = preset.algorithms[a] == Algorithm::kQuasiRandom;
      row.mttr_bound = quasi ? bounds.mttr_thm1 : bounds.mttr_9mn1n2;
      row.ettr_bound = bounds.ettr_eq3;
      if (failures[a] > 0) {
        row.skipped = true;
        row.reason = "skipped horizon exceeded in " + std::to_string(failures[a]) + " of " +
                     std::to_string(results[a].size()) + " trials";
      } else {
        const SweepStats stats = aggregate(results[a]);
        row.trials = stats.trials;
        row.ettr = stats.ettr;
        row.ci95 = stats.ci95;
        row.mttr_measured = stats.mttr_measured;
        if (quasi && row.mttr_measured > row.mttr_bound) ++outcome.bound_violations;
      }
      outcome.rows.push_back(row);
    }
  }
  return outcome;
}

namespace {

constexpr std::string_view kHeader =
    "preset,point,algorithm,n1,n2,G,m1,m2,N,trials,ettr,ci95,mttr_measured,mttr_bound,"
    "ettr_bound,status";

void emit_row(const SweepRow& row, std::ostream& out) {
  assert(row.preset.find(',') == std::string::npos &&
         row.point.find(',') == std::string::npos &&
         row.reason.find(',') == std::string::npos);
  out << row.preset << ',' << row.point << ',' << row.algorithm << ',' << row.n1 << ','
      << row.n2 << ',' << row.common << ',' << row.radios1 << ',' << row.radios2 << ','
      << row.total << ',' << row.trials << ',' << format_decimal(row.ettr) << ','
      << format_decimal(row.ci95) << ',' << row.mttr_measured << ',' << row.mttr_bound << ','
      << format_decimal(row.ettr_bound) << ',' << (row.skipped ? row.reason : "ok") << '\n';
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& row : rows) emit_row(row, out);
}

std::string emit_csv_string(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  emit_csv(rows, out);
  return out.str();
}

void write_csv_file(const std::vector<SweepRow>& rows, const std::string& path) {
  const std::string body = emit_csv_string(rows);
  if (path == "-") {
    std::cout << body;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("write failed: stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << body;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<SweepRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("parse_csv: empty input");
  if (line != kHeader) throw std::runtime_error("parse_csv: unexpected header");

  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 16) throw std::runtime_error("parse_csv: wrong field count");
    SweepRow row;
    row.preset = fields[0];
    row.point = fields[1];
    row.algorithm = fields[2];
    row.n1 = std::stoi(fields[3]);
    row.n2 = std::stoi(fields[4]);
    row.common = std::stoi(fields[5]);
    row.radios1 = std::stoi(fields[6]);
    row.radios2 = std::stoi(fields[7]);
    row.total = std::stoi(fields[8]);
    row.trials = std::stoull(fields[9]);
    row.ettr = std::stod(fields[10]);
    row.ci95 = std::stod(fields[11]);
    row.mttr_measured = std::stoull(fields[12]);
    row.mttr_bound = std::stoull(fields[13]);
    row.ettr_bound = std::stod(fields[14]);
    row.skipped = fields[15] != "ok";
    row.reason = row.skipped ? fields[15] : "";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qrv
