#include "cubespan/antipodal.hpp"

#include <algorithm>

namespace cubespan {

Vertex baseCycleVertex(uint32_t n, uint32_t p) {
  if (n == 0) throw DimensionError("dimension must be positive");
  if (p >= 2 * n) throw DimensionError("cycle position out of range");
  if (p <= n) return Vertex::prefixOnes(n, p);
  return antipode(Vertex::prefixOnes(n, p - n));
}

std::optional<uint32_t> baseCyclePosition(const Vertex& v) {
  uint32_t n = v.dim();
  uint32_t ones = v.popcount();
  if (v == Vertex::prefixOnes(n, ones)) return ones;
  // Complement form: zeros then ones, i.e. position n + (number of zeros).
  if (v == antipode(Vertex::prefixOnes(n, n - ones))) return 2 * n - ones;
  return std::nullopt;
}

AntipodalCycleGraph::AntipodalCycleGraph(uint32_t n) : n_(n), code_(n) {}

std::vector<CycleLocation> AntipodalCycleGraph::cyclesThrough(
    const Vertex& v) const {
  if (v.dim() != n_) throw DimensionError("vertex does not match graph dimension");
  std::vector<CycleLocation> locs;
  Vertex a = toFBasis(v);
  uint32_t syn = code_.imageSyndrome(a);

  // Candidate translations differ from a in f-coordinates by 0, u_j, or
  // u_{n-1} + u_j; membership of a single-coordinate neighbor reduces to a
  // syndrome comparison against the flipped coordinate's bucket column.
  if (syn == 0) locs.push_back({v, 0});
  if (syn != 0) {
    for (uint32_t j : code_.bucket(syn - 1))
      locs.push_back({v ^ baseCycleVertex(n_, j + 1), j + 1});
  }
  if (n_ >= 2) {
    uint32_t synTop = syn ^ (code_.bucketOf(n_ - 1) + 1);
    if (synTop != 0) {
      for (uint32_t j : code_.bucket(synTop - 1))
        if (j != n_ - 1)
          locs.push_back({v ^ baseCycleVertex(n_, n_ + j + 1), n_ + j + 1});
    }
  }
  return locs;
}

void AntipodalCycleGraph::appendNeighbors(const Vertex& v,
                                          std::vector<Vertex>& out) const {
  for (const CycleLocation& loc : cyclesThrough(v)) {
    uint32_t prev = (loc.position + 2 * n_ - 1) % (2 * n_);
    uint32_t next = (loc.position + 1) % (2 * n_);
    out.push_back(loc.translation ^ baseCycleVertex(n_, prev));
    out.push_back(loc.translation ^ baseCycleVertex(n_, next));
  }
}

std::vector<Vertex> AntipodalCycleGraph::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  appendNeighbors(v, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Path AntipodalCycleGraph::antipodalWalk(const Vertex& v) const {
  std::vector<CycleLocation> locs = cyclesThrough(v);
  if (locs.empty()) throw Error("vertex lies on no cycle");  // cannot happen
  const CycleLocation& loc = locs.front();
  Path p;
  p.vertices.reserve(n_ + 1);
  for (uint32_t i = 0; i <= n_; ++i)
    p.vertices.push_back(loc.translation ^
                         baseCycleVertex(n_, (loc.position + i) % (2 * n_)));
  return p;
}

}  // namespace cubespan
