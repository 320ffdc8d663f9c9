#include <random>
#include <vector>

#include "cubespan/codes.hpp"
#include "doctest.h"

using namespace cubespan;

namespace {

uint32_t syndromeByColumns(const Vertex& w) {
  uint32_t syn = 0;
  for (uint32_t j = 0; j < w.dim(); ++j)
    if (w.bit(j)) syn ^= j + 1;
  return syn;
}

Vertex randomWord(uint32_t n, std::mt19937_64& rng) {
  Vertex v(n);
  for (uint32_t c = 0; c < n; ++c) v.setBit(c, rng() & 1);
  return v;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("code lengths are exactly 2^r - 1") {
  for (uint32_t q : {1u, 3u, 7u, 15u, 31u, 127u}) CHECK(HammingCode::isCodeLength(q));
  for (uint32_t q : {0u, 2u, 4u, 5u, 6u, 8u, 16u, 100u}) CHECK_FALSE(HammingCode::isCodeLength(q));
  CHECK_THROWS_AS(HammingCode(0), ParameterError);
}

TEST_CASE("single bit errors have syndrome coordinate plus one") {
  for (uint32_t r : {2u, 3u, 4u}) {
    HammingCode code(r);
    CHECK(code.length() == (uint32_t{1} << r) - 1);
    CHECK(code.syndrome(Vertex::zeros(code.length())) == 0);
    for (uint32_t j = 0; j < code.length(); ++j)
      CHECK(code.syndrome(Vertex::unit(code.length(), j)) == j + 1);
  }
}

TEST_CASE("table and column-xor syndromes agree") {
  std::mt19937_64 rng(31);
  HammingCode small(4);
  HammingCode large(5);  // beyond the table size, computed per word
  for (int it = 0; it < 400; ++it) {
    Vertex a = randomWord(small.length(), rng);
    CHECK(small.syndrome(a) == syndromeByColumns(a));
    Vertex b = randomWord(large.length(), rng);
    CHECK(large.syndrome(b) == syndromeByColumns(b));
  }
}

TEST_CASE("length three code is the repetition code") {
  HammingCode code(2);
  CHECK(code.isCodeword(Vertex::fromBits("000")));
  CHECK(code.isCodeword(Vertex::fromBits("111")));
  CHECK_FALSE(code.isCodeword(Vertex::fromBits("100")));
  CHECK(code.syndrome(Vertex::fromBits("100")) == 1);
  CHECK(code.syndrome(Vertex::fromBits("010")) == 2);
  CHECK(code.syndrome(Vertex::fromBits("001")) == 3);
}

TEST_CASE("codeword count and coset structure at length seven") {
  HammingCode code(3);
  uint32_t words = 0;
  std::vector<uint32_t> cosetSizes(8, 0);
  for (uint64_t i = 0; i < 128; ++i) {
    Vertex w = Vertex::fromIndex(7, i);
    uint32_t syn = code.syndrome(w);
    CHECK(syn == code.cosetIndex(w));
    CHECK(syn <= 7);
    ++cosetSizes[syn];
    if (code.isCodeword(w)) ++words;
    // shifting any word by the coset leader lands on the code
    if (syn) CHECK(code.isCodeword(w ^ Vertex::unit(7, syn - 1)));
  }
  CHECK(words == 16);
  for (uint32_t c = 0; c <= 7; ++c) CHECK(cosetSizes[c] == 16);
}

TEST_CASE("decoding fixes at most one coordinate and is idempotent") {
  std::mt19937_64 rng(37);
  HammingCode code(3);
  for (int it = 0; it < 200; ++it) {
    Vertex w = randomWord(7, rng);
    Vertex d = code.decode(w);
    CHECK(code.isCodeword(d));
    CHECK(hammingDistance(w, d) <= 1);
    CHECK(code.decode(d) == d);
    CHECK((code.syndrome(w) == 0) == (w == d));
  }
}

TEST_CASE("bucket layout puts the paired coordinates first") {
  NearlyPerfectCode five(5);
  CHECK(five.bucketCount() == 3);
  CHECK(five.bucket(0).indices() == std::vector<uint32_t>{0, 1});
  CHECK(five.bucket(1).indices() == std::vector<uint32_t>{2, 3});
  CHECK(five.bucket(2).indices() == std::vector<uint32_t>{4});
  CHECK(five.bucketOf(0) == 0);
  CHECK(five.bucketOf(1) == 0);
  CHECK(five.bucketOf(3) == 1);
  CHECK(five.bucketOf(4) == 2);

  NearlyPerfectCode six(6);
  CHECK(six.bucketCount() == 3);
  for (uint32_t j = 0; j < 3; ++j)
    CHECK(six.bucket(j).indices() == std::vector<uint32_t>{2 * j, 2 * j + 1});

  NearlyPerfectCode seven(7);
  CHECK(seven.bucketCount() == 7);
  for (uint32_t j = 0; j < 7; ++j)
    CHECK(seven.bucket(j).indices() == std::vector<uint32_t>{j});
  CHECK_THROWS_AS(NearlyPerfectCode(0), ParameterError);
}

TEST_CASE("buckets partition the coordinates") {
  for (uint32_t n = 1; n <= 20; ++n) {
    NearlyPerfectCode code(n);
    std::vector<uint32_t> owner(n, ~0u);
    for (uint32_t j = 0; j < code.bucketCount(); ++j) {
      CoordinateSet b = code.bucket(j);
      CHECK(b.size() >= 1);
      CHECK(b.size() <= 2);
      for (uint32_t c : b) {
        CHECK(owner[c] == ~0u);
        owner[c] = j;
        CHECK(code.bucketOf(c) == j);
      }
    }
    for (uint32_t c = 0; c < n; ++c) CHECK(owner[c] != ~0u);
  }
}

TEST_CASE("image syndrome matches the materialized image") {
  std::mt19937_64 rng(41);
  for (uint32_t n : {5u, 11u, 20u}) {
    NearlyPerfectCode code(n);
    for (int it = 0; it < 200; ++it) {
      Vertex v = randomWord(n, rng);
      Vertex img = code.image(v);
      CHECK(img.dim() == code.bucketCount());
      for (uint32_t j = 0; j < code.bucketCount(); ++j) {
        bool parity = false;
        for (uint32_t c : code.bucket(j)) parity ^= v.bit(c);
        CHECK(img.bit(j) == parity);
      }
      CHECK(code.imageSyndrome(v) == code.innerCode().syndrome(img));
      CHECK(code.member(v) == (code.imageSyndrome(v) == 0));
    }
  }
}

TEST_CASE("dominators of a fixed vertex") {
  NearlyPerfectCode code(5);
  std::vector<Vertex> doms = code.dominators(Vertex::fromBits("10000"));
  REQUIRE(doms.size() == 2);
  CHECK(doms[0] == Vertex::fromBits("00000"));
  CHECK(doms[1] == Vertex::fromBits("11000"));
  std::vector<Vertex> self = code.dominators(Vertex::zeros(5));
  REQUIRE(self.size() == 1);
  CHECK(self[0] == Vertex::zeros(5));
}

TEST_CASE("every vertex is dominated and sees at most two members") {
  for (uint32_t n = 1; n <= 9; ++n) {
    NearlyPerfectCode code(n);
    for (uint64_t i = 0; i < (uint64_t{1} << n); ++i) {
      Vertex v = Vertex::fromIndex(n, i);
      std::vector<Vertex> doms = code.dominators(v);
      CHECK(doms.size() >= 1);
      CHECK(doms.size() <= 2);
      for (const Vertex& d : doms) {
        CHECK(code.member(d));
        CHECK(hammingDistance(v, d) <= 1);
      }
      if (code.member(v)) {
        CHECK(doms.size() == 1);
        CHECK(doms[0] == v);
      }
      uint32_t adjacentMembers = 0;
      for (uint32_t c = 0; c < n; ++c)
        if (code.member(v ^ Vertex::unit(n, c))) ++adjacentMembers;
      CHECK(adjacentMembers <= 2);
    }
  }
}

TEST_CASE("member counts at perfect lengths") {
  uint32_t count3 = 0;
  NearlyPerfectCode three(3);
  for (uint64_t i = 0; i < 8; ++i)
    if (three.member(Vertex::fromIndex(3, i))) ++count3;
  CHECK(count3 == 2);

  uint32_t count7 = 0;
  NearlyPerfectCode seven(7);
  for (uint64_t i = 0; i < 128; ++i)
    if (seven.member(Vertex::fromIndex(7, i))) ++count7;
  CHECK(count7 == 16);
}

}  // TEST_SUITE
