#include "qrv/sim.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qrv {

std::string_view algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::kQuasiRandom: return "quasi-random";
    case Algorithm::kRandom: return "random";
    case Algorithm::kModularClock: return "modular-clock";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  if (name == "quasi-random") return Algorithm::kQuasiRandom;
  if (name == "random") return Algorithm::kRandom;
  if (name == "modular-clock") return Algorithm::kModularClock;
  return std::nullopt;
}

ClockUser::ClockUser(const ChannelSet& set, int radios, std::uint64_t seed) {
  auto cells = partition_round_robin(set, radios);
  radios_.reserve(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::uint64_t radio_seed = rng::derive(seed, k);
    rng::Stream setup(rng::derive(radio_seed, 0));
    const int p = two_primes_at_least(cells[k].size()).first;
    ModularClockParams params;
    params.period = p;
    params.slope = 1 + static_cast<int>(setup.below(static_cast<std::uint64_t>(p - 1)));
    params.bias = static_cast<int>(setup.below(static_cast<std::uint64_t>(p)));
    radios_.push_back({std::move(cells[k]), params, rng::Stream(rng::derive(radio_seed, 1))});
  }
}

ClockUser::ClockUser(ChannelSet set, ModularClockParams params, std::uint64_t branch_seed) {
  if (params.period < set.size())
    throw std::invalid_argument("ClockUser: period smaller than channel count");
  radios_.push_back({std::move(set), params, rng::Stream(rng::derive(branch_seed, 1))});
}

void ClockUser::channels_at(std::uint64_t local_slot, std::vector<Channel>& out) {
  for (auto& radio : radios_)
    out.push_back(modular_clock_step(radio.cell, radio.params, local_slot, radio.branch));
}

TrialResult run_engine(UserProcess& user1, UserProcess& user2, std::uint64_t drift,
                       std::uint64_t horizon) {
  std::vector<Channel> tuned1, tuned2;
  for (std::uint64_t t = 0; t < horizon; ++t) {
    tuned1.clear();
    tuned2.clear();
    user1.channels_at(t, tuned1);
    user2.channels_at(t + drift, tuned2);

    bool hit = false;
    Channel best = 0;
    int best1 = -1, best2 = -1;
    for (std::size_t a = 0; a < tuned1.size(); ++a) {
      for (std::size_t b = 0; b < tuned2.size(); ++b) {
        if (tuned1[a] != tuned2[b]) continue;
        if (!hit || tuned1[a] < best) {
          hit = true;
          best = tuned1[a];
          best1 = static_cast<int>(a);
          best2 = static_cast<int>(b);
        }
      }
    }
    if (hit) {
      TrialResult result;
      result.success = true;
      result.ttr = t + 1;
      result.channel = best;
      result.radio1 = best1;
      result.radio2 = best2;
      return result;
    }
  }
  return {};
}

namespace {

int largest_cell(int n, int radios) { return (n + radios - 1) / radios; }

}  // namespace

std::uint64_t qr_mttr_horizon(const ChannelSet& set1, int radios1, const ChannelSet& set2,
                              int radios2) {
  const auto frame = static_cast<std::uint64_t>(codeword_length(set1.total));
  const int p11 = two_primes_at_least(largest_cell(set1.size(), radios1)).second;
  const int p21 = two_primes_at_least(largest_cell(set2.size(), radios2)).second;
  return frame * static_cast<std::uint64_t>(p11) * static_cast<std::uint64_t>(p21);
}

std::uint64_t default_horizon(const TrialConfig& config) {
  if (config.algorithm == Algorithm::kQuasiRandom)
    return qr_mttr_horizon(config.set1, config.radios1, config.set2, config.radios2);
  const auto frame = static_cast<std::uint64_t>(codeword_length(config.set1.total));
  return 9 * frame * static_cast<std::uint64_t>(config.set1.size()) *
         static_cast<std::uint64_t>(config.set2.size());
}

TrialResult run_trial(const TrialConfig& config) {
  if (config.set1.total != config.set2.total)
    throw std::invalid_argument("run_trial: users disagree on the total channel count");
  if (config.radios1 < 1 || config.radios1 > config.set1.size() || config.radios2 < 1 ||
      config.radios2 > config.set2.size())
    throw std::invalid_argument("run_trial: radio count outside [1, n]");

  bool intersects = false;
  for (Channel c : config.set1.labels)
    if (config.set2.contains(c)) {
      intersects = true;
      break;
    }
  if (!intersects) throw std::invalid_argument("run_trial: channel sets do not intersect");

  std::uint64_t horizon = config.horizon;
  if (horizon == 0) horizon = default_horizon(config);
  if (config.algorithm == Algorithm::kQuasiRandom) {
    const std::uint64_t bound =
        qr_mttr_horizon(config.set1, config.radios1, config.set2, config.radios2);
    if (horizon < bound)
      throw std::invalid_argument("run_trial: horizon below the guaranteed-rendezvous window");
  }

  const std::uint64_t seed1 = rng::derive(config.seed, 1);
  const std::uint64_t seed2 = rng::derive(config.seed, 2);
  std::unique_ptr<UserProcess> user1, user2;
  switch (config.algorithm) {
    case Algorithm::kQuasiRandom:
      user1 = std::make_unique<QrUser>(config.set1, config.radios1, seed1);
      user2 = std::make_unique<QrUser>(config.set2, config.radios2, seed2);
      break;
    case Algorithm::kRandom:
      user1 = std::make_unique<RandomUser>(config.set1, config.radios1, seed1);
      user2 = std::make_unique<RandomUser>(config.set2, config.radios2, seed2);
      break;
    case Algorithm::kModularClock:
      user1 = std::make_unique<ClockUser>(config.set1, config.radios1, seed1);
      user2 = std::make_unique<ClockUser>(config.set2, config.radios2, seed2);
      break;
  }
  return run_engine(*user1, *user2, config.drift, horizon);
}

std::pair<ChannelSet, ChannelSet> sample_channel_sets(int total, int n1, int n2,
                                                      int common, rng::Stream& rng) {
  if (common < 1) throw std::invalid_argument("sample_channel_sets: need a common channel");
  if (common > n1 || common > n2)
    throw std::invalid_argument("sample_channel_sets: common exceeds a set size");
  if (n1 + n2 - common > total)
    throw std::invalid_argument("sample_channel_sets: sets do not fit in [0, N)");

  // One partial Fisher-Yates pass; the first `common` picks are shared, the
  // next n1-common go to user 1 only, the last n2-common to user 2 only.
  std::vector<Channel> pool(static_cast<std::size_t>(total));
  for (int k = 0; k < total; ++k) pool[static_cast<std::size_t>(k)] = static_cast<Channel>(k);
  const int picks = n1 + n2 - common;
  for (int i = 0; i < picks; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }

  std::vector<Channel> labels1(pool.begin(), pool.begin() + n1);
  std::vector<Channel> labels2(pool.begin(), pool.begin() + common);
  labels2.insert(labels2.end(), pool.begin() + n1, pool.begin() + picks);
  std::sort(labels1.begin(), labels1.end());
  std::sort(labels2.begin(), labels2.end());
  return {make_channel_set(std::move(labels1), total), make_channel_set(std::move(labels2), total)};
}

std::uint64_t sample_drift(rng::Stream& rng, std::uint64_t period) {
  if (period < 1) throw std::invalid_argument("sample_drift: period must be positive");
  return rng.below(period);
}

}  // namespace qrv
