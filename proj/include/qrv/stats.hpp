#pragma once

#include <cstdint>
#include <vector>

#include "qrv/sim.hpp"

namespace qrv {

// Aggregated estimates for one parameter point. The swept value itself lives
// on the benchmark row that carries these numbers.
struct SweepStats {
  double ettr = 0.0;            // sample mean TTR
  double ci95 = 0.0;            // 1.96 * s / sqrt(trials)
  std::uint64_t mttr_measured = 0;  // max TTR over all trials
  std::size_t trials = 0;
};

// Rejects lists with fewer than two results or with any failure present
// (a failure means a guarantee was violated upstream).
SweepStats aggregate(const std::vector<TrialResult>& results);

// Closed-form ETTR bound for the single-radio quasi-random algorithm:
// n1*n2/G + 9*M*n1*n2*(1 - G/(n1*n2))^M with M = codeword_length(total).
// The first term alone is the random algorithm's ETTR. Rejects G < 1.
double ettr_bound(int n1, int n2, int common, int total);

struct BoundSet {
  std::uint64_t mttr_thm1 = 0;      // M * p11 * p21
  std::uint64_t mttr_9mn1n2 = 0;    // 9 * M * n1 * n2
  std::uint64_t mttr_multi = 0;     // 9 * M * ceil(n1/m1) * ceil(n2/m2)
  double ettr_eq3 = 0.0;            // ettr_bound(n1, n2, G, N)
  double ettr_random = 0.0;         // n1 * n2 / G
};

// All closed-form bounds for one configuration. p11 and p21 are the larger
// of two_primes_at_least(ceil(n/m)) for each user; `common` feeds the two
// ETTR entries.
BoundSet mttr_bounds(int n1, int radios1, int n2, int radios2, int total, int p11,
                     int p21, int common);

}  // namespace qrv
