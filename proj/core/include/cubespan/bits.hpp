#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cubespan/errors.hpp"

namespace cubespan {

class CoordinateSet;

// A vertex of the hypercube {0,1}^n: a fixed-length bit string.
// Coordinate i lives at bit i of the packed words; the canonical text form
// prints coordinate 0 first, so "110" has coordinates 0 and 1 set.
// Dimensions up to 512 are stored inline, larger ones on the heap.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(uint32_t n) { reset(n); }

  static Vertex zeros(uint32_t n) { return Vertex(n); }
  static Vertex ones(uint32_t n);
  static Vertex unit(uint32_t n, uint32_t coord);
  // Coordinates 0..len-1 set, the rest clear.
  static Vertex prefixOnes(uint32_t n, uint32_t len);
  // Low 64 coordinates from an integer: coordinate i = (index >> i) & 1.
  static Vertex fromIndex(uint32_t n, uint64_t index);
  // Canonical text form, e.g. "0110".
  static Vertex fromBits(std::string_view text);
  // Hex value with 0x prefix and an explicit dimension; the value is the
  // text form read as a binary number (coordinate 0 is the most significant
  // bit), so fromHex("0x6", 4) == fromBits("0110").
  static Vertex fromHex(std::string_view text, uint32_t n);

  uint32_t dim() const { return n_; }
  uint32_t wordCount() const { return nw_; }
  uint64_t word(uint32_t i) const { return w()[i]; }

  bool bit(uint32_t coord) const {
    checkCoord(coord);
    return (w()[coord >> 6] >> (coord & 63)) & 1u;
  }
  void setBit(uint32_t coord, bool value) {
    checkCoord(coord);
    uint64_t m = uint64_t{1} << (coord & 63);
    if (value)
      w()[coord >> 6] |= m;
    else
      w()[coord >> 6] &= ~m;
  }
  void flipBit(uint32_t coord) {
    checkCoord(coord);
    w()[coord >> 6] ^= uint64_t{1} << (coord & 63);
  }

  uint32_t popcount() const;
  uint64_t toIndex() const;  // requires n <= 64
  std::string toString() const;

  Vertex& operator^=(const Vertex& o);
  Vertex& operator&=(const Vertex& o);
  Vertex& operator|=(const Vertex& o);
  Vertex operator^(const Vertex& o) const {
    Vertex r(*this);
    r ^= o;
    return r;
  }
  Vertex operator&(const Vertex& o) const {
    Vertex r(*this);
    r &= o;
    return r;
  }
  Vertex operator|(const Vertex& o) const {
    Vertex r(*this);
    r |= o;
    return r;
  }
  // Bitwise complement of all n coordinates.
  Vertex complement() const;

  bool isZero() const;
  bool operator==(const Vertex& o) const;
  bool operator!=(const Vertex& o) const { return !(*this == o); }
  // Lexicographic on the text form (coordinate 0 most significant).
  bool operator<(const Vertex& o) const;

  Vertex(const Vertex& o) { copyFrom(o); }
  Vertex(Vertex&& o) noexcept = default;
  Vertex& operator=(const Vertex& o) {
    if (this != &o) copyFrom(o);
    return *this;
  }
  Vertex& operator=(Vertex&& o) noexcept = default;

 private:
  static constexpr uint32_t kInlineWords = 8;

  uint32_t n_ = 0;
  uint32_t nw_ = 0;
  uint64_t inline_[kInlineWords] = {};
  std::unique_ptr<uint64_t[]> heap_;

  const uint64_t* w() const { return heap_ ? heap_.get() : inline_; }
  uint64_t* w() { return heap_ ? heap_.get() : inline_; }
  void reset(uint32_t n);
  void copyFrom(const Vertex& o);
  void checkCoord(uint32_t coord) const {
    if (coord >= n_) throw DimensionError("coordinate out of range");
  }
  void checkSameDim(const Vertex& o) const {
    if (n_ != o.n_) throw DimensionError("vertex dimensions differ");
  }
  // Mask of valid bits in the last word.
  uint64_t topMask() const {
    uint32_t rem = n_ & 63;
    return rem ? ((uint64_t{1} << rem) - 1) : ~uint64_t{0};
  }

  friend Vertex shiftDown(const Vertex& v, uint32_t k);
  friend Vertex restrictTo(const Vertex& v, const CoordinateSet& b);
  friend Vertex embedAt(const Vertex& v, const CoordinateSet& b,
                        const Vertex& sub);
};

// Strictly increasing coordinate indices. Contiguous runs are detected so
// restriction and embedding of block-shaped sets stay word-parallel.
class CoordinateSet {
 public:
  CoordinateSet() = default;
  explicit CoordinateSet(std::vector<uint32_t> indices);
  static CoordinateSet range(uint32_t lo, uint32_t hi);  // [lo, hi)

  size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  uint32_t operator[](size_t j) const { return idx_[j]; }
  const std::vector<uint32_t>& indices() const { return idx_; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  bool contains(uint32_t coord) const;
  bool isRange() const { return isRange_; }
  uint32_t rangeLo() const { return idx_.empty() ? 0 : idx_.front(); }

  CoordinateSet unionWith(const CoordinateSet& o) const;
  CoordinateSet minus(const CoordinateSet& o) const;
  // Indicator vertex in dimension n.
  Vertex mask(uint32_t n) const;

 private:
  std::vector<uint32_t> idx_;
  bool isRange_ = true;
};

// Walk in the hypercube; consecutive vertices are meant to differ in exactly
// one coordinate (validators check, constructors do not).
struct Path {
  std::vector<Vertex> vertices;
  uint32_t length() const {
    return vertices.empty() ? 0 : static_cast<uint32_t>(vertices.size() - 1);
  }
};

Vertex antipode(const Vertex& v);
uint32_t hammingDistance(const Vertex& u, const Vertex& v);
uint32_t coordinateSum(const Vertex& v);

// Change of basis to f_k = e_0 + ... + e_k: coefficients a with
// v = sum a_k f_k, i.e. a_i = v_i xor v_{i+1} and a_{n-1} = v_{n-1}.
Vertex toFBasis(const Vertex& v);
// Inverse: v_i = xor of a_j over j >= i.
Vertex fromFBasis(const Vertex& a);

// Bits of v at the coordinates of b, reindexed to 0..|b|-1 in order.
Vertex restrictTo(const Vertex& v, const CoordinateSet& b);
// Copy of v with the coordinates of b replaced by the bits of sub.
Vertex embedAt(const Vertex& v, const CoordinateSet& b, const Vertex& sub);

// Flip 0->1 coordinates in ascending order, then 1->0 in ascending order.
// Length always equals hammingDistance(u, v).
Path greedyPath(const Vertex& u, const Vertex& v);

uint32_t distinctCoordinateSums(const Path& p);

// True when consecutive vertices differ in exactly one coordinate.
bool isUnitStepPath(const Path& p);

}  // namespace cubespan
