#include "qrv/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "qrv/codec.hpp"

namespace qrv {

SweepStats aggregate(const std::vector<TrialResult>& results) {
  if (results.size() < 2)
    throw std::invalid_argument("aggregate: need at least two results");
  double sum = 0.0;
  std::uint64_t worst = 0;
  for (const auto& r : results) {
    if (!r.success) throw std::runtime_error("aggregate: failure result present");
    sum += static_cast<double>(r.ttr);
    worst = std::max(worst, r.ttr);
  }
  const auto count = static_cast<double>(results.size());
  const double mean = sum / count;
  double ss = 0.0;
  for (const auto& r : results) {
    const double d = static_cast<double>(r.ttr) - mean;
    ss += d * d;
  }
  const double stddev = std::sqrt(ss / (count - 1.0));

  SweepStats stats;
  stats.ettr = mean;
  stats.ci95 = 1.96 * stddev / std::sqrt(count);
  stats.mttr_measured = worst;
  stats.trials = results.size();
  return stats;
}

double ettr_bound(int n1, int n2, int common, int total) {
  if (common < 1) throw std::invalid_argument("ettr_bound: need a common channel");
  if (common > n1 || common > n2)
    throw std::invalid_argument("ettr_bound: common exceeds a set size");
  const int frame = codeword_length(total);
  const double pairs = static_cast<double>(n1) * static_cast<double>(n2);
  const double miss = 1.0 - static_cast<double>(common) / pairs;
  return pairs / static_cast<double>(common) +
         9.0 * static_cast<double>(frame) * pairs * std::pow(miss, frame);
}

BoundSet mttr_bounds(int n1, int radios1, int n2, int radios2, int total, int p11,
                     int p21, int common) {
  const auto frame = static_cast<std::uint64_t>(codeword_length(total));
  const auto cell1 = static_cast<std::uint64_t>((n1 + radios1 - 1) / radios1);
  const auto cell2 = static_cast<std::uint64_t>((n2 + radios2 - 1) / radios2);

  BoundSet bounds;
  bounds.mttr_thm1 = frame * static_cast<std::uint64_t>(p11) * static_cast<std::uint64_t>(p21);
  bounds.mttr_9mn1n2 =
      9 * frame * static_cast<std::uint64_t>(n1) * static_cast<std::uint64_t>(n2);
  bounds.mttr_multi = 9 * frame * cell1 * cell2;
  bounds.ettr_eq3 = ettr_bound(n1, n2, common, total);
  bounds.ettr_random =
      static_cast<double>(n1) * static_cast<double>(n2) / static_cast<double>(common);
  return bounds;
}

}  // namespace qrv
