#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qrv/codec.hpp"

using qrv::FiveBitCode;
using qrv::TritCodeword;
using qrv::codeword_length;
using qrv::encode_4b5b;
using qrv::make_codeword;
using qrv::verify_class;
using qrv::zero_quad_unique;

namespace {

std::vector<TritCodeword> full_class(int bits) {
  std::vector<TritCodeword> words;
  for (std::uint32_t x = 0; x < (1u << bits); ++x) words.push_back(make_codeword(x, bits));
  return words;
}

// Local re-checks of the two pairing conditions, independent of verify_class,
// for pinning each proof case to the condition it establishes.
bool cond_i(const TritCodeword& a, const TritCodeword& b, int d) {
  const int len = a.length();
  bool one_zero = false, zero_one = false;
  for (int tau = 0; tau < len; ++tau) {
    if (a[tau] == 1 && b[(tau + d) % len] == 0) one_zero = true;
    if (a[tau] == 0 && b[(tau + d) % len] == 1) zero_one = true;
  }
  return one_zero && zero_one;
}

bool cond_ii(const TritCodeword& a, const TritCodeword& b, int d) {
  const int len = a.length();
  bool one_one = false, mismatch = false;
  for (int tau = 0; tau < len; ++tau) {
    if (a[tau] == 1 && b[(tau + d) % len] == 1) one_one = true;
    if (a[tau] != b[(tau + d) % len]) mismatch = true;
  }
  return one_one && mismatch;
}

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("4b5b table rows") {
  CHECK(encode_4b5b(0b0000) == FiveBitCode{1, 1, 1, 1, 0});
  CHECK(encode_4b5b(0b0001) == FiveBitCode{0, 1, 0, 0, 1});
  CHECK(encode_4b5b(0b1111) == FiveBitCode{1, 1, 1, 0, 1});
}

TEST_CASE("4b5b codes are distinct with bounded zero runs") {
  std::set<std::string> seen;
  for (unsigned nib = 0; nib < 16; ++nib) {
    const FiveBitCode code = encode_4b5b(nib);
    std::string s;
    for (auto b : code) s.push_back(static_cast<char>('0' + b));
    seen.insert(s);
    CHECK((code[0] == 1 || code[1] == 1));                 // at most one leading 0
    CHECK((code[2] == 1 || code[3] == 1 || code[4] == 1));  // at most two trailing 0s
  }
  CHECK(seen.size() == 16);
}

TEST_CASE("codeword length formula") {
  CHECK(codeword_length(2) == 11);
  CHECK(codeword_length(15) == 11);
  CHECK(codeword_length(16) == 11);
  CHECK(codeword_length(17) == 16);
  CHECK(codeword_length(64) == 16);
  CHECK(codeword_length(160) == 16);  // L = 8, 2*5 + 6
  CHECK(codeword_length(192) == 16);
  CHECK_THROWS_AS(codeword_length(1), std::invalid_argument);
  CHECK_THROWS_AS(codeword_length(0), std::invalid_argument);
}

TEST_CASE("golden codewords") {
  CHECK(make_codeword(1, 4).to_string() == "20000101001");
  CHECK(make_codeword(6, 4).to_string() == "20000101110");
  CHECK(make_codeword(0, 4).to_string() == "20000111110");
  CHECK(make_codeword(0x16, 8).to_string() == "2000010100101110");
  CHECK(make_codeword(255, 8).to_string() == "2000011110111101");
}

TEST_CASE("short bit lengths share the low-nibble encoding") {
  CHECK(make_codeword(1, 1) == make_codeword(1, 4));
  CHECK(make_codeword(0, 3) == make_codeword(0, 4));
}

TEST_CASE("id out of range is rejected") {
  CHECK_THROWS_AS(make_codeword(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_codeword(16, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_codeword(0, 0), std::invalid_argument);
}

TEST_CASE("injectivity per bit length") {
  for (int bits : {1, 4, 8}) {
    std::set<std::string> seen;
    for (const auto& w : full_class(bits)) {
      CHECK(w.length() == (bits + 3) / 4 * 5 + 6);
      seen.insert(w.to_string());
    }
    CHECK(seen.size() == (1u << bits));
  }
}

TEST_CASE("four-zero window appears exactly once, cyclically") {
  for (int bits : {1, 4, 8})
    for (const auto& w : full_class(bits)) CHECK(zero_quad_unique(w));
  // two windows -> not unique
  TritCodeword twice{{2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}};
  CHECK_FALSE(zero_quad_unique(twice));
}

TEST_CASE("full codeword families form valid classes") {
  for (int bits : {1, 4, 8}) {
    const auto report = verify_class(full_class(bits));
    CHECK(report.valid());
    CHECK(report.violations.empty());
    CHECK(report.bad_first_trit.empty());
  }
}

TEST_CASE("duplicate members violate at zero shift") {
  const auto w = make_codeword(3, 4);
  const auto report = verify_class({w, w});
  CHECK_FALSE(report.valid());
  bool saw_zero_shift = false;
  for (const auto& v : report.violations)
    if (v.d == 0 && v.i != v.j) saw_zero_shift = true;
  CHECK(saw_zero_shift);
}

TEST_CASE("mixed lengths are rejected") {
  CHECK_THROWS_AS(verify_class({make_codeword(1, 4), make_codeword(1, 8)}),
                  std::invalid_argument);
}

TEST_CASE("missing leading 2 is reported") {
  TritCodeword bad{{1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1}};
  const auto report = verify_class({make_codeword(1, 4), bad});
  CHECK(report.bad_first_trit == std::vector<int>{1});
}

// One targeted check per proof case of the symmetrization lemma, asserting
// the specific condition each case establishes.
TEST_CASE("proof case coverage") {
  const auto words = full_class(4);
  const int len = 11;

  SUBCASE("aligned delimiters, distinct members: condition (ii)") {
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j)
        if (i != j) CHECK(cond_ii(words[i], words[j], 0));
  }

  SUBCASE("shift 1..4: condition picked by the trit facing the delimiter 1") {
    for (const auto& wi : words)
      for (const auto& wj : words)
        for (int d = 1; d <= 4; ++d) {
          if (wj[(5 + d) % len] == 0)
            CHECK(cond_i(wi, wj, d));
          else
            CHECK(cond_ii(wi, wj, d));
        }
  }

  SUBCASE("shift M-4..M-1: mirrored form of the previous case") {
    for (const auto& wi : words)
      for (const auto& wj : words)
        for (int d = len - 4; d <= len - 1; ++d) {
          const int k = len - d;  // 1..4
          if (wi[(5 + k) % len] == 0)
            CHECK(cond_i(wi, wj, d));
          else
            CHECK(cond_ii(wi, wj, d));
        }
  }

  SUBCASE("shift 5: condition picked by position 10") {
    for (const auto& wi : words)
      for (const auto& wj : words) {
        if (wj[10] == 0)
          CHECK(cond_i(wi, wj, 5));
        else
          CHECK(cond_ii(wi, wj, 5));
      }
  }

  SUBCASE("shift M-5: mirrored form of the previous case") {
    for (const auto& wi : words)
      for (const auto& wj : words) {
        if (wi[10] == 0)
          CHECK(cond_i(wi, wj, len - 5));
        else
          CHECK(cond_ii(wi, wj, len - 5));
      }
  }

  SUBCASE("non-overlapping delimiters: condition (i)") {
    // Needs M > 11; the 16-trit family has shifts 6..10 with disjoint
    // delimiters.
    std::vector<TritCodeword> wide;
    for (std::uint32_t x : {0u, 1u, 6u, 22u, 129u, 200u, 255u})
      wide.push_back(make_codeword(x, 8));
    for (const auto& wi : wide)
      for (const auto& wj : wide)
        for (int d = 6; d <= 10; ++d) CHECK(cond_i(wi, wj, d));
  }
}

}  // TEST_SUITE
