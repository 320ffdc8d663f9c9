#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cubespan/antipodal.hpp"
#include "cubespan/bits.hpp"

namespace cubespan {

// Spanning subgraph of Q_n with diameter exactly n and bounded degree.
//
// Structured mode splits the coordinates into four contiguous blocks, builds
// an antipodal cycle graph on each block, and partitions the other blocks'
// coordinates into one part per cycle position. A vertex may flip a
// coordinate outside block i exactly when that coordinate's part is exposed
// at the vertex's current position on a block-i cycle, which caps the degree
// at 120 while a half-cycle walk sweeps every part once.
//
// Below the threshold (and not forced) the full hypercube already has the
// wanted diameter and degree, so the trivial mode keeps all n directions.
class DiameterSpanner {
 public:
  static DiameterSpanner build(uint32_t n, uint32_t threshold = 100,
                               bool force = false);

  uint32_t dim() const { return n_; }
  bool structured() const { return structured_; }

  uint32_t blockCount() const { return structured_ ? 4 : 0; }
  const CoordinateSet& block(uint32_t i) const { return blocks_.at(i).coords; }
  const AntipodalCycleGraph& blockGraph(uint32_t i) const {
    return *blocks_.at(i).graph;
  }
  // Part j of the partition of the complement of block i.
  const CoordinateSet& part(uint32_t i, uint32_t j) const {
    return blocks_.at(i).parts.at(j);
  }

  struct ExposedPart {
    uint32_t block;
    uint32_t part;
    CoordinateSet coords;
  };
  // One entry per cycle location of each block restriction: position p on a
  // block-i cycle exposes part p mod |block i|.
  std::vector<ExposedPart> exposedParts(const Vertex& v) const;

  std::vector<Vertex> neighbors(const Vertex& v) const;
  void appendNeighbors(const Vertex& v, std::vector<Vertex>& out) const;
  uint32_t degree(const Vertex& v) const;

  // Walk of length at most n: a half-cycle walk in the block where v and w
  // agree least, flipping the other blocks' target coordinates as their
  // parts come up (block b aims at the antipode of w's restriction), then a
  // half-cycle walk in the runner-up block b that restores block a.
  Path route(const Vertex& v, const Vertex& w) const;

 private:
  struct Block {
    uint32_t offset = 0;
    uint32_t size = 0;
    CoordinateSet coords;
    Vertex maskVec;  // indicator of coords in dimension n
    std::shared_ptr<const AntipodalCycleGraph> graph;
    std::vector<CoordinateSet> parts;
  };

  DiameterSpanner() = default;
  // Walk the full antipodal cycle of block a, flipping pending coordinates
  // (tracked in pendingMask) whenever their part is exposed.
  void walkPhase(uint32_t a, Vertex& cur, Vertex& pendingMask,
                 Path& path) const;

  uint32_t n_ = 0;
  bool structured_ = false;
  std::vector<Block> blocks_;
};

}  // namespace cubespan
