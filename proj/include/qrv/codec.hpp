#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qrv {

// Ternary digit. 2 marks the stay-on-ID slot of a hopping frame.
using Trit = std::uint8_t;

using FiveBitCode = std::array<std::uint8_t, 5>;

// 4B5B line-code lookup (the FDDI table). Every 5B code has at most one
// leading 0 and at most two trailing 0s, so an encoded payload never
// contains four consecutive 0s; the delimiter below is therefore the only
// place a 0000 window can occur.
FiveBitCode encode_4b5b(unsigned nibble);

// Frame/codeword length for a network with `total_channels` channels:
// M = ceil(ceil(log2 N) / 4) * 5 + 6. Rejects N < 2.
int codeword_length(int total_channels);

// Number of bits needed for channel labels 0..N-1, i.e. ceil(log2 N).
int id_bit_length(int total_channels);

struct TritCodeword {
  std::vector<Trit> trits;

  int length() const { return static_cast<int>(trits.size()); }
  Trit operator[](int i) const { return trits[static_cast<std::size_t>(i)]; }
  std::string to_string() const;  // e.g. "20000101001"
  bool operator==(const TritCodeword&) const = default;
};

// Maps an id in [0, 2^bit_length) to its M-trit codeword: the id is
// zero-extended to whole nibbles, nibbles are 4B5B-encoded most significant
// first, and the 6-trit delimiter 200001 is prepended.
// M = ceil(bit_length/4)*5 + 6.
TritCodeword make_codeword(std::uint32_t id, int bit_length);

// True when the cyclic word contains exactly one window of four consecutive
// 0s (trit 2 counts as nonzero). This is what makes a codeword
// self-locating under rotation.
bool zero_quad_unique(const TritCodeword& word);

struct ValidationReport {
  struct PairViolation {
    int i = 0, j = 0, d = 0;
    bool operator==(const PairViolation&) const = default;
  };
  std::vector<int> bad_first_trit;        // members with w(0) != 2
  std::vector<PairViolation> violations;  // ordered pairs + shifts failing both conditions

  bool valid() const { return bad_first_trit.empty() && violations.empty(); }
};

// Strong ternary symmetrization check over a set of equal-length codewords.
// For every ordered pair (i, j) and every cyclic shift d — skipping only the
// identity pairing i == j, d == 0 — at least one of the two position-pairing
// conditions must hold:
//   (i)  some position pairs 1 against 0 and some position pairs 0 against 1;
//   (ii) some position pairs 1 against 1 and some position disagrees.
// Mixed-length input is rejected. O(K^2 * M^2).
ValidationReport verify_class(const std::vector<TritCodeword>& codewords);

}  // namespace qrv
