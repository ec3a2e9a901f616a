#include "qrv/codec.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace qrv {

namespace {

// 4B data -> 5B code, indexed by nibble value.
constexpr std::array<std::uint8_t, 16> k5bCode = {
    0b11110,  // 0000
    0b01001,  // 0001
    0b10100,  // 0010
    0b10101,  // 0011
    0b01010,  // 0100
    0b01011,  // 0101
    0b01110,  // 0110
    0b01111,  // 0111
    0b10010,  // 1000
    0b10011,  // 1001
    0b10110,  // 1010
    0b10111,  // 1011
    0b11010,  // 1100
    0b11011,  // 1101
    0b11100,  // 1110
    0b11101,  // 1111
};

constexpr std::array<Trit, 6> kDelimiter = {2, 0, 0, 0, 0, 1};

}  // namespace

FiveBitCode encode_4b5b(unsigned nibble) {
  assert(nibble < 16);
  const std::uint8_t code = k5bCode[nibble & 0xF];
  FiveBitCode bits;
  for (int b = 0; b < 5; ++b) bits[b] = (code >> (4 - b)) & 1;
  return bits;
}

int id_bit_length(int total_channels) {
  if (total_channels < 2) throw std::invalid_argument("id_bit_length: need at least 2 channels");
  return std::bit_width(static_cast<unsigned>(total_channels - 1));
}

int codeword_length(int total_channels) {
  const int bits = id_bit_length(total_channels);
  return (bits + 3) / 4 * 5 + 6;
}

std::string TritCodeword::to_string() const {
  std::string out;
  out.reserve(trits.size());
  for (Trit t : trits) out.push_back(static_cast<char>('0' + t));
  return out;
}

TritCodeword make_codeword(std::uint32_t id, int bit_length) {
  if (bit_length < 1 || bit_length > 32)
    throw std::invalid_argument("make_codeword: bit_length out of range");
  if (bit_length < 32 && id > ((1u << bit_length) - 1))
    throw std::invalid_argument("make_codeword: id does not fit in bit_length bits");

  const int nibbles = (bit_length + 3) / 4;
  TritCodeword word;
  word.trits.assign(kDelimiter.begin(), kDelimiter.end());
  word.trits.reserve(static_cast<std::size_t>(nibbles * 5 + 6));
  // Zero-extension to whole nibbles puts the value in the low nibbles; the
  // high nibbles carry the padding, so codewords for L and for the next
  // multiple of 4 agree on the shared value range.
  for (int i = nibbles - 1; i >= 0; --i) {
    const unsigned nib = (id >> (4 * i)) & 0xF;
    const FiveBitCode code = encode_4b5b(nib);
    word.trits.insert(word.trits.end(), code.begin(), code.end());
  }
  assert(word.length() == nibbles * 5 + 6);
  assert(zero_quad_unique(word));
  return word;
}

bool zero_quad_unique(const TritCodeword& word) {
  const int len = word.length();
  if (len < 4) return false;
  int windows = 0;
  for (int start = 0; start < len; ++start) {
    bool all_zero = true;
    for (int k = 0; k < 4; ++k) {
      if (word[(start + k) % len] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) ++windows;
  }
  return windows == 1;
}

ValidationReport verify_class(const std::vector<TritCodeword>& codewords) {
  ValidationReport report;
  const int count = static_cast<int>(codewords.size());
  if (count == 0) return report;

  const int len = codewords[0].length();
  for (const auto& w : codewords)
    if (w.length() != len) throw std::invalid_argument("verify_class: mixed codeword lengths");

  for (int i = 0; i < count; ++i)
    if (codewords[i][0] != 2) report.bad_first_trit.push_back(i);

  for (int i = 0; i < count; ++i) {
    const TritCodeword& wi = codewords[i];
    for (int j = 0; j < count; ++j) {
      const TritCodeword& wj = codewords[j];
      for (int d = 0; d < len; ++d) {
        if (d == 0 && i == j) continue;
        bool one_zero = false, zero_one = false, one_one = false, mismatch = false;
        for (int tau = 0; tau < len; ++tau) {
          const Trit a = wi[tau];
          const Trit b = wj[(tau + d) % len];
          if (a != b) mismatch = true;
          if (a == 1 && b == 0) one_zero = true;
          if (a == 0 && b == 1) zero_one = true;
          if (a == 1 && b == 1) one_one = true;
        }
        const bool ok = (one_zero && zero_one) || (one_one && mismatch);
        if (!ok) report.violations.push_back({i, j, d});
      }
    }
  }
  return report;
}

}  // namespace qrv
