#include "cubespan/codes.hpp"

#include <bit>

namespace cubespan {

HammingCode::HammingCode(uint32_t r) : r_(r) {
  if (r == 0 || r > 31)
    throw ParameterError({"hamming code order must satisfy 1 <= r <= 31"});
  q_ = (uint32_t{1} << r) - 1;
  if (q_ <= 16) {
    table_.resize(size_t{1} << q_);
    for (uint32_t word = 0; word < table_.size(); ++word) {
      uint32_t syn = 0;
      uint32_t rest = word;
      while (rest) {
        uint32_t j = std::countr_zero(rest);
        rest &= rest - 1;
        syn ^= j + 1;
      }
      table_[word] = static_cast<uint16_t>(syn);
    }
  }
}

bool HammingCode::isCodeLength(uint32_t q) {
  return q >= 1 && ((q + 1) & q) == 0;
}

uint32_t HammingCode::syndrome(const Vertex& w) const {
  if (w.dim() != q_) throw DimensionError("word length does not match code");
  if (!table_.empty()) return table_[w.word(0)];
  uint32_t syn = 0;
  for (uint32_t i = 0; i < w.wordCount(); ++i) {
    uint64_t rest = w.word(i);
    while (rest) {
      uint32_t j = 64 * i + std::countr_zero(rest);
      rest &= rest - 1;
      syn ^= j + 1;
    }
  }
  return syn;
}

Vertex HammingCode::decode(const Vertex& w) const {
  uint32_t syn = syndrome(w);
  if (syn == 0) return w;
  Vertex c(w);
  c.flipBit(syn - 1);
  return c;
}

uint32_t NearlyPerfectCode::innerR(uint32_t n) {
  if (n == 0) throw ParameterError({"code dimension must be positive"});
  uint32_t k = 1;
  while (((uint32_t{1} << (k + 1)) - 1) <= n && k < 31) ++k;
  return k;
}

NearlyPerfectCode::NearlyPerfectCode(uint32_t n)
    : n_(n), doubles_(0), inner_(innerR(n)) {
  doubles_ = n_ - inner_.length();
}

CoordinateSet NearlyPerfectCode::bucket(uint32_t j) const {
  if (j >= bucketCount()) throw DimensionError("bucket index out of range");
  if (j < doubles_) return CoordinateSet::range(2 * j, 2 * j + 2);
  return CoordinateSet::range(doubles_ + j, doubles_ + j + 1);
}

Vertex NearlyPerfectCode::image(const Vertex& v) const {
  if (v.dim() != n_) throw DimensionError("vertex does not match code dimension");
  Vertex img(bucketCount());
  for (uint32_t i = 0; i < v.wordCount(); ++i) {
    uint64_t rest = v.word(i);
    while (rest) {
      uint32_t c = 64 * i + std::countr_zero(rest);
      rest &= rest - 1;
      img.flipBit(bucketOf(c));
    }
  }
  return img;
}

uint32_t NearlyPerfectCode::imageSyndrome(const Vertex& v) const {
  if (v.dim() != n_) throw DimensionError("vertex does not match code dimension");
  // Each set coordinate toggles its bucket, so the syndrome of the image is
  // the xor of (bucket + 1) over set coordinates.
  uint32_t syn = 0;
  for (uint32_t i = 0; i < v.wordCount(); ++i) {
    uint64_t rest = v.word(i);
    while (rest) {
      uint32_t c = 64 * i + std::countr_zero(rest);
      rest &= rest - 1;
      syn ^= bucketOf(c) + 1;
    }
  }
  return syn;
}

std::vector<Vertex> NearlyPerfectCode::dominators(const Vertex& v) const {
  uint32_t syn = imageSyndrome(v);
  if (syn == 0) return {v};
  std::vector<Vertex> out;
  // Flipping coordinate c lands in the code exactly when the syndrome equals
  // the column of c's bucket; only that bucket's coordinates qualify.
  for (uint32_t c : bucket(syn - 1)) {
    Vertex nb(v);
    nb.flipBit(c);
    out.push_back(std::move(nb));
  }
  return out;
}

}  // namespace cubespan
