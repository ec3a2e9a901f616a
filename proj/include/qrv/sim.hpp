#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qrv/hopping.hpp"

namespace qrv {

enum class Algorithm { kQuasiRandom, kRandom, kModularClock };

std::string_view algorithm_name(Algorithm alg);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// One simulated encounter between two users. User 2's local clock runs
// `drift` slots ahead of user 1's; global slot t pairs user 1's slot t with
// user 2's slot t + drift.
struct TrialConfig {
  ChannelSet set1, set2;
  int radios1 = 1, radios2 = 1;
  std::uint64_t drift = 0;
  Algorithm algorithm = Algorithm::kQuasiRandom;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;  // 0 = default_horizon(*this)
};

struct TrialResult {
  bool success = false;
  std::uint64_t ttr = 0;     // slots, >= 1 on success
  Channel channel = 0;       // lowest common label on success
  int radio1 = -1, radio2 = -1;
};

// A user as the engine sees it: the set of channels tuned at a local slot.
class UserProcess {
 public:
  virtual ~UserProcess() = default;
  virtual void channels_at(std::uint64_t local_slot, std::vector<Channel>& out) = 0;
};

class QrUser : public UserProcess {
 public:
  QrUser(const ChannelSet& set, int radios, std::uint64_t seed)
      : radios_(make_radio_states(set, radios, seed)) {}
  explicit QrUser(std::vector<QrUserState> radios) : radios_(std::move(radios)) {}
  void channels_at(std::uint64_t local_slot, std::vector<Channel>& out) override {
    multi_radio_next(radios_, local_slot, out);
  }
  std::span<QrUserState> radios() { return radios_; }

 private:
  std::vector<QrUserState> radios_;
};

class RandomUser : public UserProcess {
 public:
  RandomUser(ChannelSet set, int radios, std::uint64_t seed)
      : set_(std::move(set)), radios_(radios), stream_(rng::derive(seed, 0)) {}
  void channels_at(std::uint64_t, std::vector<Channel>& out) override {
    random_step(set_, radios_, stream_, out);
  }

 private:
  ChannelSet set_;
  int radios_;
  rng::Stream stream_;
};

// Raw modular clock baseline. Each radio runs one clock over its round-robin
// cell with the smallest prime >= cell size and a randomly drawn slope/bias.
// No rendezvous guarantee when both users end up with equal primes.
class ClockUser : public UserProcess {
 public:
  ClockUser(const ChannelSet& set, int radios, std::uint64_t seed);
  // Explicit-parameter single radio, for driving specific (p, r, b) triples.
  ClockUser(ChannelSet set, ModularClockParams params, std::uint64_t branch_seed);
  void channels_at(std::uint64_t local_slot, std::vector<Channel>& out) override;

 private:
  struct Radio {
    ChannelSet cell;
    ModularClockParams params;
    rng::Stream branch;
  };
  std::vector<Radio> radios_;
};

// Slotted two-user engine. Scans global slots t = 0, 1, ... and stops at the
// first nonempty intersection; ttr = t + 1. Ties between simultaneous radio
// collisions resolve to the lowest common label. Returns a failure result
// once `horizon` slots pass without rendezvous.
TrialResult run_engine(UserProcess& user1, UserProcess& user2, std::uint64_t drift,
                       std::uint64_t horizon);

// Guaranteed-rendezvous window for the quasi-random algorithm:
// M * p11 * p21 with each user's primes taken for its largest per-radio cell
// (ceil(n/m) channels). Valid for any radio counts; equals the single-radio
// window when m1 = m2 = 1.
std::uint64_t qr_mttr_horizon(const ChannelSet& set1, int radios1, const ChannelSet& set2,
                              int radios2);

// Horizon used when none is given: the guaranteed window for quasi-random,
// 9 * M * n1 * n2 otherwise (generous for the unbounded baselines).
std::uint64_t default_horizon(const TrialConfig& config);

// Validates the config (common channel exists, radio counts feasible, horizon
// covers the guarantee for quasi-random), builds both users and runs the
// engine.
TrialResult run_trial(const TrialConfig& config);

// Draws set1 and set2 with |set1 ∩ set2| = common exactly: `common` shared
// labels plus disjoint private remainders, all uniform over [0, total).
std::pair<ChannelSet, ChannelSet> sample_channel_sets(int total, int n1, int n2,
                                                      int common, rng::Stream& rng);

// Uniform clock offset in [0, period).
std::uint64_t sample_drift(rng::Stream& rng, std::uint64_t period);

}  // namespace qrv
