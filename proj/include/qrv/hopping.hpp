#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qrv/codec.hpp"
#include "qrv/rng.hpp"

namespace qrv {

using Channel = std::uint32_t;

// A user's (or one radio's) available channels, labels drawn from the
// universal labelling 0..N-1.
struct ChannelSet {
  std::vector<Channel> labels;  // strictly increasing
  int total = 0;                // N

  int size() const { return static_cast<int>(labels.size()); }
  Channel at(int k) const { return labels[static_cast<std::size_t>(k)]; }
  bool contains(Channel c) const;
};

// Validates labels (distinct, sorted, in [0, total)) and 1 <= n <= total.
ChannelSet make_channel_set(std::vector<Channel> labels, int total);

// Convenience: the contiguous range [first, first + count).
ChannelSet make_channel_range(Channel first, int count, int total);

// The two smallest primes p0 < p1 with p0 >= n. Both land in [n, 3n].
std::pair<int, int> two_primes_at_least(int n);

struct ModularClockParams {
  int period = 2;  // prime p >= n
  int slope = 1;   // r in [1, p-1]
  int bias = 0;    // b in [0, p-1]
};

// One slot of the modular clock: k = (r*t + b) mod p indexes the channel
// list; indices past the end fall back to a uniform random pick.
Channel modular_clock_step(const ChannelSet& set, const ModularClockParams& params,
                           std::uint64_t t, rng::Stream& rng);

// One user's (one radio's) quasi-random hopping state: an ID channel, its
// ternary codeword, and an independent modular clock per codeword position.
// Single-owner mutable object (it holds RNG streams); distinct states may
// advance in parallel.
class QrUserState {
 public:
  // Draws the ID channel and all slopes/biases from streams derived from
  // `seed` (rule in rng.hpp). Total channel count comes from set.total.
  QrUserState(ChannelSet set, std::uint64_t seed);

  // Fixed-parameter constructor for reproducing worked examples: slopes and
  // biases are given explicitly (vectors indexed by position, entry 0
  // unused). Random-branch draws still come from `branch_seed` streams.
  struct Parameters {
    Channel id_channel = 0;
    std::vector<int> slope0, bias0;  // 0-sequence clocks, prime p0
    std::vector<int> slope1, bias1;  // 1-sequence clocks, prime p1
  };
  QrUserState(ChannelSet set, const Parameters& params, std::uint64_t branch_seed);

  // Channel for local slot t: position s = t mod M picks the stay slot
  // (w=2), a p1-clock (w=1) or a p0-clock (w=0), driven at index q = t / M.
  Channel next(std::uint64_t t);

  Channel id_channel() const { return id_; }
  const TritCodeword& codeword() const { return word_; }
  int frame_length() const { return static_cast<int>(word_.trits.size()); }
  int prime0() const { return p0_; }
  int prime1() const { return p1_; }
  const ChannelSet& channels() const { return set_; }

 private:
  void init_branch_streams(std::uint64_t seed);

  ChannelSet set_;
  Channel id_ = 0;
  TritCodeword word_;
  int p0_ = 2, p1_ = 3;
  std::vector<int> slope0_, bias0_, slope1_, bias1_;  // indexed by position, [0] unused
  std::vector<rng::Stream> branch_;                   // indexed by position, [0] unused
};

// `radios` distinct channels drawn uniformly without replacement (the
// random-algorithm slot). Rejects radios > n. Appends to `out`.
void random_step(const ChannelSet& set, int radios, rng::Stream& rng,
                 std::vector<Channel>& out);

// Round-robin split: label c(i) goes to radio i mod m. Every cell keeps the
// parent's total; cell sizes differ by at most one. Rejects m < 1 and m > n.
std::vector<ChannelSet> partition_round_robin(const ChannelSet& set, int radios);

// Partition + one independent QrUserState per radio (radio k seeded with
// derive(seed, k)). All states share the parent's total, hence one M.
std::vector<QrUserState> make_radio_states(const ChannelSet& set, int radios,
                                           std::uint64_t seed);

// One slot of the multi-radio hopping: each radio's generator advances at
// the same local slot. Appends one label per radio to `out`.
void multi_radio_next(std::span<QrUserState> radios, std::uint64_t t,
                      std::vector<Channel>& out);

}  // namespace qrv
