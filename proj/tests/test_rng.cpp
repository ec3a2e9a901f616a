#include <doctest.h>

#include <set>
#include <vector>

#include "qrv/rng.hpp"
#include "support/stat_check.hpp"

using qrv::rng::Stream;
using qrv::rng::derive;

TEST_SUITE("rng") {

TEST_CASE("same seed, same sequence") {
  Stream a(42), b(42);
  for (int k = 0; k < 1000; ++k) CHECK(a.next() == b.next());
}

TEST_CASE("derive separates tags and seeds") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed : {0ull, 1ull, 42ull, ~0ull})
    for (std::uint64_t tag = 0; tag < 64; ++tag) seen.insert(derive(seed, tag));
  CHECK(seen.size() == 4 * 64);
}

TEST_CASE("below stays in range and is exact for tiny bounds") {
  Stream s(7);
  for (int k = 0; k < 10000; ++k) {
    CHECK(s.below(1) == 0);
    CHECK(s.below(3) < 3);
    CHECK(s.below(847) < 847);
  }
}

TEST_CASE("below is uniform (chi-square)") {
  Stream s(123);
  std::vector<std::uint64_t> counts(7, 0);
  for (int k = 0; k < 70000; ++k) ++counts[s.below(7)];
  CHECK(testsupport::uniform_chi_square_p(counts) > 0.001);
}

TEST_CASE("split streams do not track the parent") {
  Stream parent(99);
  Stream child = parent.split(1);
  std::vector<std::uint64_t> a, b;
  for (int k = 0; k < 64; ++k) {
    a.push_back(parent.next());
    b.push_back(child.next());
  }
  CHECK(a != b);
}

TEST_CASE("unit is in [0, 1)") {
  Stream s(5);
  for (int k = 0; k < 10000; ++k) {
    const double u = s.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

}  // TEST_SUITE
