#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubespan/bits.hpp"
#include "cubespan/codes.hpp"

namespace cubespan {

// Base cycle of length 2n through 0^n and 1^n: position p <= n is the prefix
// of p ones, position n + p is the complement of the prefix of p ones.
// Consecutive positions differ in coordinate p mod n and positions p, p + n
// are antipodal.
Vertex baseCycleVertex(uint32_t n, uint32_t p);
// Position of v on the base cycle, if v lies on it.
std::optional<uint32_t> baseCyclePosition(const Vertex& v);

struct CycleLocation {
  Vertex translation;  // xor offset of the cycle, in standard coordinates
  uint32_t position;   // in [0, 2n)
};

// Union of translates of the base cycle, one per member of a nearly perfect
// code written in f-basis coordinates. Every vertex lies on one to five
// cycles, so the degree is at most ten, and walking half a cycle reaches the
// antipode in exactly n steps.
class AntipodalCycleGraph {
 public:
  explicit AntipodalCycleGraph(uint32_t n);

  uint32_t dim() const { return n_; }
  const NearlyPerfectCode& code() const { return code_; }

  // Cycles through v in a fixed order: the cycle translated by v itself
  // first, then translates meeting v at positions 1..n, then n+1..2n-1.
  // Invariant: translation xor baseCycleVertex(position) == v.
  std::vector<CycleLocation> cyclesThrough(const Vertex& v) const;
  // Neighbors on all cycles through v, deduplicated and sorted.
  std::vector<Vertex> neighbors(const Vertex& v) const;
  void appendNeighbors(const Vertex& v, std::vector<Vertex>& out) const;
  // n forward steps along the first cycle through v, ending at antipode(v).
  Path antipodalWalk(const Vertex& v) const;

 private:
  uint32_t n_;
  NearlyPerfectCode code_;
};

}  // namespace cubespan
