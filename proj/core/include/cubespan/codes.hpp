#pragma once

#include <cstdint>
#include <vector>

#include "cubespan/bits.hpp"

namespace cubespan {

// Binary Hamming code of length q = 2^r - 1. Parity column j is the binary
// encoding of j + 1, so the syndrome of a word is the xor of (j + 1) over its
// set bits and a single bit error at coordinate j has syndrome j + 1.
class HammingCode {
 public:
  explicit HammingCode(uint32_t r);
  // The r with 2^r - 1 == q, if any.
  static bool isCodeLength(uint32_t q);

  uint32_t r() const { return r_; }
  uint32_t length() const { return q_; }

  uint32_t syndrome(const Vertex& w) const;
  bool isCodeword(const Vertex& w) const { return syndrome(w) == 0; }
  // Nearest codeword: flips coordinate syndrome - 1 when the syndrome is
  // nonzero, identity on codewords.
  Vertex decode(const Vertex& w) const;
  // Index of the coset of w in the partition {C, C + e_0, ..., C + e_{q-1}}:
  // 0 on the code itself, i for C + e_{i-1}. Equals the syndrome value.
  uint32_t cosetIndex(const Vertex& w) const { return syndrome(w); }

 private:
  uint32_t r_;
  uint32_t q_;
  std::vector<uint16_t> table_;  // syndromes of all words when q <= 16
};

// Dominating independent set of Q_n built by bucketing coordinates into
// 2^k - 1 groups of size at most two and pulling back a Hamming code:
// v is a member when the per-bucket parity word is an inner codeword.
// Every vertex has a member within distance one and at most two members
// adjacent to it.
class NearlyPerfectCode {
 public:
  explicit NearlyPerfectCode(uint32_t n);

  uint32_t dim() const { return n_; }
  const HammingCode& innerCode() const { return inner_; }
  uint32_t bucketCount() const { return inner_.length(); }
  // Buckets of size two come first and take consecutive coordinates.
  CoordinateSet bucket(uint32_t j) const;
  uint32_t bucketOf(uint32_t coord) const {
    return coord < 2 * doubles_ ? coord / 2 : coord - doubles_;
  }

  // Per-bucket parity word of length bucketCount().
  Vertex image(const Vertex& v) const;
  // Inner syndrome of image(v) without materializing the image.
  uint32_t imageSyndrome(const Vertex& v) const;
  bool member(const Vertex& v) const { return imageSyndrome(v) == 0; }
  // Members of the code in the closed neighborhood of v; {v} itself when v
  // is a member, otherwise one or two neighbors in flip-coordinate order.
  std::vector<Vertex> dominators(const Vertex& v) const;

 private:
  uint32_t n_;
  uint32_t doubles_;  // buckets holding two coordinates
  HammingCode inner_;

  static uint32_t innerR(uint32_t n);
};

}  // namespace cubespan
