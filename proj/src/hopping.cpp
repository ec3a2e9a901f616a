#include "qrv/hopping.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qrv {

bool ChannelSet::contains(Channel c) const {
  return std::binary_search(labels.begin(), labels.end(), c);
}

ChannelSet make_channel_set(std::vector<Channel> labels, int total) {
  if (labels.empty()) throw std::invalid_argument("channel set: empty");
  if (total < static_cast<int>(labels.size()))
    throw std::invalid_argument("channel set: more labels than channels");
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0 && labels[k] <= labels[k - 1])
      throw std::invalid_argument("channel set: labels must be strictly increasing");
    if (labels[k] >= static_cast<Channel>(total))
      throw std::invalid_argument("channel set: label outside [0, N)");
  }
  return ChannelSet{std::move(labels), total};
}

ChannelSet make_channel_range(Channel first, int count, int total) {
  std::vector<Channel> labels(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) labels[static_cast<std::size_t>(k)] = first + static_cast<Channel>(k);
  return make_channel_set(std::move(labels), total);
}

namespace {

bool is_prime(int v) {
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0) return false;
  for (int f = 3; f * f <= v; f += 2)
    if (v % f == 0) return false;
  return true;
}

}  // namespace

std::pair<int, int> two_primes_at_least(int n) {
  if (n < 1) throw std::invalid_argument("two_primes_at_least: n must be positive");
  int p = std::max(n, 2);
  while (!is_prime(p)) ++p;
  int q = p + 1;
  while (!is_prime(q)) ++q;
  return {p, q};
}

Channel modular_clock_step(const ChannelSet& set, const ModularClockParams& params,
                           std::uint64_t t, rng::Stream& rng) {
  assert(params.period >= set.size());
  assert(params.slope >= 1 && params.slope < params.period);
  assert(params.bias >= 0 && params.bias < params.period);
  const std::uint64_t k =
      (static_cast<std::uint64_t>(params.slope) * t + static_cast<std::uint64_t>(params.bias)) %
      static_cast<std::uint64_t>(params.period);
  if (k < static_cast<std::uint64_t>(set.size())) return set.at(static_cast<int>(k));
  return set.at(static_cast<int>(rng.below(static_cast<std::uint64_t>(set.size()))));
}

QrUserState::QrUserState(ChannelSet set, std::uint64_t seed) : set_(std::move(set)) {
  rng::Stream setup(rng::derive(seed, 0));
  id_ = set_.at(static_cast<int>(setup.below(static_cast<std::uint64_t>(set_.size()))));
  word_ = make_codeword(id_, id_bit_length(set_.total));
  std::tie(p0_, p1_) = two_primes_at_least(set_.size());

  const int frame = frame_length();
  slope0_.assign(static_cast<std::size_t>(frame), 0);
  bias0_.assign(static_cast<std::size_t>(frame), 0);
  slope1_.assign(static_cast<std::size_t>(frame), 0);
  bias1_.assign(static_cast<std::size_t>(frame), 0);
  for (int s = 1; s < frame; ++s) {
    slope0_[s] = 1 + static_cast<int>(setup.below(static_cast<std::uint64_t>(p0_ - 1)));
    bias0_[s] = static_cast<int>(setup.below(static_cast<std::uint64_t>(p0_)));
    slope1_[s] = 1 + static_cast<int>(setup.below(static_cast<std::uint64_t>(p1_ - 1)));
    bias1_[s] = static_cast<int>(setup.below(static_cast<std::uint64_t>(p1_)));
  }
  init_branch_streams(seed);
}

QrUserState::QrUserState(ChannelSet set, const Parameters& params, std::uint64_t branch_seed)
    : set_(std::move(set)), id_(params.id_channel) {
  if (!set_.contains(id_))
    throw std::invalid_argument("QrUserState: id channel not in the channel set");
  word_ = make_codeword(id_, id_bit_length(set_.total));
  std::tie(p0_, p1_) = two_primes_at_least(set_.size());

  const auto frame = static_cast<std::size_t>(frame_length());
  if (params.slope0.size() != frame || params.bias0.size() != frame ||
      params.slope1.size() != frame || params.bias1.size() != frame)
    throw std::invalid_argument("QrUserState: parameter vectors must have length M");
  for (std::size_t s = 1; s < frame; ++s) {
    if (params.slope0[s] < 1 || params.slope0[s] >= p0_ || params.bias0[s] < 0 ||
        params.bias0[s] >= p0_ || params.slope1[s] < 1 || params.slope1[s] >= p1_ ||
        params.bias1[s] < 0 || params.bias1[s] >= p1_)
      throw std::invalid_argument("QrUserState: slope/bias out of range");
  }
  slope0_ = params.slope0;
  bias0_ = params.bias0;
  slope1_ = params.slope1;
  bias1_ = params.bias1;
  init_branch_streams(branch_seed);
}

void QrUserState::init_branch_streams(std::uint64_t seed) {
  const int frame = frame_length();
  branch_.clear();
  branch_.reserve(static_cast<std::size_t>(frame));
  for (int s = 0; s < frame; ++s)
    branch_.emplace_back(rng::derive(seed, static_cast<std::uint64_t>(s)));
}

Channel QrUserState::next(std::uint64_t t) {
  const auto frame = static_cast<std::uint64_t>(frame_length());
  const std::uint64_t q = t / frame;
  const auto s = static_cast<std::size_t>(t % frame);
  const Trit w = word_.trits[s];
  if (w == 2) return id_;
  if (w == 1)
    return modular_clock_step(set_, {p1_, slope1_[s], bias1_[s]}, q, branch_[s]);
  return modular_clock_step(set_, {p0_, slope0_[s], bias0_[s]}, q, branch_[s]);
}

void random_step(const ChannelSet& set, int radios, rng::Stream& rng,
                 std::vector<Channel>& out) {
  const int n = set.size();
  if (radios < 1 || radios > n)
    throw std::invalid_argument("random_step: radio count outside [1, n]");
  if (radios == n) {
    out.insert(out.end(), set.labels.begin(), set.labels.end());
    return;
  }
  if (radios == 1) {
    out.push_back(set.at(static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))));
    return;
  }
  // Partial Fisher-Yates over a scratch copy.
  std::vector<Channel> pool = set.labels;
  for (int i = 0; i < radios; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    out.push_back(pool[static_cast<std::size_t>(i)]);
  }
}

std::vector<ChannelSet> partition_round_robin(const ChannelSet& set, int radios) {
  if (radios < 1) throw std::invalid_argument("partition: need at least one radio");
  if (radios > set.size())
    throw std::invalid_argument("partition: more radios than channels");
  std::vector<ChannelSet> cells(static_cast<std::size_t>(radios));
  for (auto& cell : cells) cell.total = set.total;
  for (int i = 0; i < set.size(); ++i)
    cells[static_cast<std::size_t>(i % radios)].labels.push_back(set.at(i));
  return cells;
}

std::vector<QrUserState> make_radio_states(const ChannelSet& set, int radios,
                                           std::uint64_t seed) {
  auto cells = partition_round_robin(set, radios);
  std::vector<QrUserState> states;
  states.reserve(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k)
    states.emplace_back(std::move(cells[k]), rng::derive(seed, k));
  return states;
}

void multi_radio_next(std::span<QrUserState> radios, std::uint64_t t,
                      std::vector<Channel>& out) {
  for (auto& radio : radios) out.push_back(radio.next(t));
}

}  // namespace qrv
