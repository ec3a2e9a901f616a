#pragma once

// Shared statistical helpers for tests: chi-square goodness of fit against a
// uniform (or arbitrary) expectation. Quantiles come from boost::math so the
// tests don't depend on the library under test for their own statistics.

#include <cstdint>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace testsupport {

inline double chi_square_statistic(const std::vector<std::uint64_t>& counts,
                                   const std::vector<double>& expected) {
  double stat = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double diff = static_cast<double>(counts[k]) - expected[k];
    stat += diff * diff / expected[k];
  }
  return stat;
}

inline double chi_square_p_value(const std::vector<std::uint64_t>& counts,
                                 const std::vector<double>& expected) {
  const boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  const double stat = chi_square_statistic(counts, expected);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

// p-value for uniform expected counts.
inline double uniform_chi_square_p(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const std::vector<double> expected(counts.size(),
                                     static_cast<double>(total) / static_cast<double>(counts.size()));
  return chi_square_p_value(counts, expected);
}

}  // namespace testsupport
