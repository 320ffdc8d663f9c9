#include "cubespan/bits.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace cubespan {

void Vertex::reset(uint32_t n) {
  n_ = n;
  nw_ = (n + 63) / 64;
  if (nw_ > kInlineWords) {
    heap_ = std::make_unique<uint64_t[]>(nw_);
    std::memset(heap_.get(), 0, nw_ * sizeof(uint64_t));
  } else {
    heap_.reset();
    std::memset(inline_, 0, sizeof(inline_));
  }
}

void Vertex::copyFrom(const Vertex& o) {
  n_ = o.n_;
  nw_ = o.nw_;
  if (nw_ > kInlineWords) {
    heap_ = std::make_unique<uint64_t[]>(nw_);
    std::memcpy(heap_.get(), o.w(), nw_ * sizeof(uint64_t));
  } else {
    heap_.reset();
    std::memcpy(inline_, o.inline_, sizeof(inline_));
  }
}

Vertex Vertex::ones(uint32_t n) {
  Vertex v(n);
  if (n == 0) return v;
  uint64_t* p = v.w();
  for (uint32_t i = 0; i < v.nw_; ++i) p[i] = ~uint64_t{0};
  p[v.nw_ - 1] &= v.topMask();
  return v;
}

Vertex Vertex::unit(uint32_t n, uint32_t coord) {
  Vertex v(n);
  v.setBit(coord, true);
  return v;
}

Vertex Vertex::prefixOnes(uint32_t n, uint32_t len) {
  if (len > n) throw DimensionError("prefix longer than dimension");
  Vertex v(n);
  uint64_t* p = v.w();
  uint32_t full = len / 64;
  for (uint32_t i = 0; i < full; ++i) p[i] = ~uint64_t{0};
  if (len & 63) p[full] = (uint64_t{1} << (len & 63)) - 1;
  return v;
}

Vertex Vertex::fromIndex(uint32_t n, uint64_t index) {
  if (n == 0 || n > 64) throw DimensionError("fromIndex needs 1 <= n <= 64");
  if (n < 64 && (index >> n) != 0)
    throw DimensionError("index does not fit in n bits");
  Vertex v(n);
  v.w()[0] = index;
  return v;
}

Vertex Vertex::fromBits(std::string_view text) {
  if (text.empty()) throw ParseError("empty vertex text");
  Vertex v(static_cast<uint32_t>(text.size()));
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      v.setBit(static_cast<uint32_t>(i), true);
    else if (text[i] != '0')
      throw ParseError("vertex text must be 0/1 characters");
  }
  return v;
}

Vertex Vertex::fromHex(std::string_view text, uint32_t n) {
  if (n == 0) throw DimensionError("dimension must be positive");
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
    throw ParseError("hex vertex needs 0x prefix");
  std::string_view digits = text.substr(2);
  std::vector<bool> bits;
  bits.reserve(digits.size() * 4);
  for (char c : digits) {
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      d = c - 'A' + 10;
    else
      throw ParseError("bad hex digit in vertex");
    for (int b = 3; b >= 0; --b) bits.push_back((d >> b) & 1);
  }
  // The value must fit in n bits; shorter values gain leading zeros.
  size_t lead = 0;
  while (lead < bits.size() && !bits[lead]) ++lead;
  size_t significant = bits.size() - lead;
  if (significant > n) throw ParseError("hex value exceeds dimension");
  Vertex v(n);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    uint32_t pos = n - static_cast<uint32_t>(bits.size() - i);
    v.setBit(pos, true);
  }
  return v;
}

uint32_t Vertex::popcount() const {
  uint32_t c = 0;
  const uint64_t* p = w();
  for (uint32_t i = 0; i < nw_; ++i) c += std::popcount(p[i]);
  return c;
}

uint64_t Vertex::toIndex() const {
  if (n_ == 0 || n_ > 64) throw DimensionError("toIndex needs 1 <= n <= 64");
  return w()[0];
}

std::string Vertex::toString() const {
  std::string s(n_, '0');
  const uint64_t* p = w();
  for (uint32_t i = 0; i < n_; ++i)
    if ((p[i >> 6] >> (i & 63)) & 1u) s[i] = '1';
  return s;
}

Vertex& Vertex::operator^=(const Vertex& o) {
  checkSameDim(o);
  uint64_t* a = w();
  const uint64_t* b = o.w();
  for (uint32_t i = 0; i < nw_; ++i) a[i] ^= b[i];
  return *this;
}

Vertex& Vertex::operator&=(const Vertex& o) {
  checkSameDim(o);
  uint64_t* a = w();
  const uint64_t* b = o.w();
  for (uint32_t i = 0; i < nw_; ++i) a[i] &= b[i];
  return *this;
}

Vertex& Vertex::operator|=(const Vertex& o) {
  checkSameDim(o);
  uint64_t* a = w();
  const uint64_t* b = o.w();
  for (uint32_t i = 0; i < nw_; ++i) a[i] |= b[i];
  return *this;
}

Vertex Vertex::complement() const {
  Vertex r(*this);
  uint64_t* p = r.w();
  for (uint32_t i = 0; i < nw_; ++i) p[i] = ~p[i];
  if (nw_) p[nw_ - 1] &= topMask();
  return r;
}

bool Vertex::isZero() const {
  const uint64_t* p = w();
  for (uint32_t i = 0; i < nw_; ++i)
    if (p[i]) return false;
  return true;
}

bool Vertex::operator==(const Vertex& o) const {
  if (n_ != o.n_) return false;
  const uint64_t* a = w();
  const uint64_t* b = o.w();
  for (uint32_t i = 0; i < nw_; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool Vertex::operator<(const Vertex& o) const {
  checkSameDim(o);
  const uint64_t* a = w();
  const uint64_t* b = o.w();
  for (uint32_t i = 0; i < nw_; ++i) {
    uint64_t d = a[i] ^ b[i];
    if (d) {
      // Lowest differing bit is the first differing coordinate.
      uint32_t bitPos = std::countr_zero(d);
      return ((a[i] >> bitPos) & 1u) == 0;
    }
  }
  return false;
}

// Logical shift toward lower coordinate indices: bit i takes bit i + k.
Vertex shiftDown(const Vertex& v, uint32_t k) {
  Vertex r(v.dim());
  if (k >= v.dim()) return r;
  uint32_t wordShift = k >> 6;
  uint32_t bitShift = k & 63;
  const uint64_t* a = v.w();
  uint64_t* p = r.w();
  for (uint32_t i = 0; i + wordShift < v.wordCount(); ++i) {
    uint64_t lo = a[i + wordShift] >> bitShift;
    uint64_t hi = (bitShift && i + wordShift + 1 < v.wordCount())
                      ? (a[i + wordShift + 1] << (64 - bitShift))
                      : 0;
    p[i] = lo | hi;
  }
  return r;
}

CoordinateSet::CoordinateSet(std::vector<uint32_t> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  isRange_ = true;
  for (size_t j = 1; j < idx_.size(); ++j)
    if (idx_[j] != idx_[j - 1] + 1) {
      isRange_ = false;
      break;
    }
}

CoordinateSet CoordinateSet::range(uint32_t lo, uint32_t hi) {
  if (lo > hi) throw DimensionError("bad coordinate range");
  CoordinateSet s;
  s.idx_.reserve(hi - lo);
  for (uint32_t c = lo; c < hi; ++c) s.idx_.push_back(c);
  s.isRange_ = true;
  return s;
}

bool CoordinateSet::contains(uint32_t coord) const {
  if (isRange_)
    return !idx_.empty() && coord >= idx_.front() && coord <= idx_.back();
  return std::binary_search(idx_.begin(), idx_.end(), coord);
}

CoordinateSet CoordinateSet::unionWith(const CoordinateSet& o) const {
  std::vector<uint32_t> merged;
  merged.reserve(idx_.size() + o.idx_.size());
  std::merge(idx_.begin(), idx_.end(), o.idx_.begin(), o.idx_.end(),
             std::back_inserter(merged));
  return CoordinateSet(std::move(merged));
}

CoordinateSet CoordinateSet::minus(const CoordinateSet& o) const {
  std::vector<uint32_t> diff;
  std::set_difference(idx_.begin(), idx_.end(), o.idx_.begin(), o.idx_.end(),
                      std::back_inserter(diff));
  return CoordinateSet(std::move(diff));
}

Vertex CoordinateSet::mask(uint32_t n) const {
  Vertex m(n);
  for (uint32_t c : idx_) m.setBit(c, true);
  return m;
}

Vertex antipode(const Vertex& v) { return v.complement(); }

uint32_t hammingDistance(const Vertex& u, const Vertex& v) {
  if (u.dim() != v.dim()) throw DimensionError("vertex dimensions differ");
  uint32_t c = 0;
  for (uint32_t i = 0; i < u.wordCount(); ++i)
    c += std::popcount(u.word(i) ^ v.word(i));
  return c;
}

uint32_t coordinateSum(const Vertex& v) { return v.popcount(); }

Vertex toFBasis(const Vertex& v) { return v ^ shiftDown(v, 1); }

Vertex fromFBasis(const Vertex& a) {
  // Suffix xor scan by shift doubling.
  Vertex v(a);
  for (uint32_t sh = 1; sh < v.dim(); sh <<= 1) v ^= shiftDown(v, sh);
  return v;
}

Vertex restrictTo(const Vertex& v, const CoordinateSet& b) {
  if (!b.empty() && b.indices().back() >= v.dim())
    throw DimensionError("coordinate set exceeds dimension");
  uint32_t m = static_cast<uint32_t>(b.size());
  Vertex r(m);
  if (m == 0) return r;
  if (b.isRange()) {
    uint32_t lo = b.rangeLo();
    for (uint32_t j = 0; j < r.wordCount(); ++j) {
      uint32_t src = lo + 64 * j;
      uint64_t word = v.word(src >> 6) >> (src & 63);
      if ((src & 63) && (src >> 6) + 1 < v.wordCount())
        word |= v.word((src >> 6) + 1) << (64 - (src & 63));
      r.w()[j] = word;
    }
    uint32_t rem = m & 63;
    if (rem) r.w()[r.wordCount() - 1] &= (uint64_t{1} << rem) - 1;
    return r;
  }
  for (uint32_t j = 0; j < m; ++j)
    if (v.bit(b[j])) r.setBit(j, true);
  return r;
}

Vertex embedAt(const Vertex& v, const CoordinateSet& b, const Vertex& sub) {
  if (sub.dim() != b.size()) throw DimensionError("sub-vertex does not match set size");
  if (!b.empty() && b.indices().back() >= v.dim())
    throw DimensionError("coordinate set exceeds dimension");
  Vertex r(v);
  for (uint32_t j = 0; j < sub.dim(); ++j) r.setBit(b[j], sub.bit(j));
  return r;
}

Path greedyPath(const Vertex& u, const Vertex& v) {
  if (u.dim() != v.dim()) throw DimensionError("vertex dimensions differ");
  Path p;
  p.vertices.push_back(u);
  Vertex cur(u);
  for (int phase = 0; phase < 2; ++phase) {
    for (uint32_t i = 0; i < u.wordCount(); ++i) {
      // phase 0 flips 0->1, phase 1 flips 1->0
      uint64_t want = phase == 0 ? (~cur.word(i) & v.word(i))
                                 : (cur.word(i) & ~v.word(i));
      while (want) {
        uint32_t bitPos = std::countr_zero(want);
        want &= want - 1;
        cur.flipBit(64 * i + bitPos);
        p.vertices.push_back(cur);
      }
    }
  }
  return p;
}

uint32_t distinctCoordinateSums(const Path& p) {
  if (p.vertices.empty()) return 0;
  std::vector<bool> seen(p.vertices.front().dim() + 1, false);
  uint32_t count = 0;
  for (const Vertex& v : p.vertices) {
    uint32_t s = v.popcount();
    if (!seen[s]) {
      seen[s] = true;
      ++count;
    }
  }
  return count;
}

bool isUnitStepPath(const Path& p) {
  for (size_t i = 1; i < p.vertices.size(); ++i)
    if (hammingDistance(p.vertices[i - 1], p.vertices[i]) != 1) return false;
  return true;
}

}  // namespace cubespan
