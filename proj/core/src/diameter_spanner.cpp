#include "cubespan/diameter_spanner.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace cubespan {

DiameterSpanner DiameterSpanner::build(uint32_t n, uint32_t threshold,
                                       bool force) {
  DiameterSpanner g;
  g.n_ = n;
  if (n == 0) throw ParameterError({"dimension must be positive"});
  g.structured_ = force || n > threshold;
  if (!g.structured_) return g;
  if (n < 4)
    throw ParameterError({"structured mode needs at least four coordinates"});

  // Four contiguous blocks, sizes as equal as possible, larger ones first.
  uint32_t base = n / 4, extra = n % 4;
  uint32_t offset = 0;
  std::map<uint32_t, std::shared_ptr<const AntipodalCycleGraph>> graphBySize;
  for (uint32_t i = 0; i < 4; ++i) {
    Block b;
    b.size = base + (i < extra ? 1 : 0);
    b.offset = offset;
    offset += b.size;
    b.coords = CoordinateSet::range(b.offset, b.offset + b.size);
    b.maskVec = b.coords.mask(n);
    auto& cached = graphBySize[b.size];
    if (!cached) cached = std::make_shared<AntipodalCycleGraph>(b.size);
    b.graph = cached;
    g.blocks_.push_back(std::move(b));
  }

  // Complement of each block, split into |block| contiguous parts, again as
  // equal as possible with larger parts first.
  for (Block& b : g.blocks_) {
    std::vector<uint32_t> rest;
    rest.reserve(n - b.size);
    for (uint32_t c = 0; c < n; ++c)
      if (c < b.offset || c >= b.offset + b.size) rest.push_back(c);
    uint32_t parts = b.size;
    uint32_t per = static_cast<uint32_t>(rest.size()) / parts;
    uint32_t rem = static_cast<uint32_t>(rest.size()) % parts;
    size_t at = 0;
    for (uint32_t j = 0; j < parts; ++j) {
      size_t len = per + (j < rem ? 1 : 0);
      b.parts.emplace_back(std::vector<uint32_t>(rest.begin() + at,
                                                 rest.begin() + at + len));
      at += len;
    }
  }
  return g;
}

std::vector<DiameterSpanner::ExposedPart> DiameterSpanner::exposedParts(
    const Vertex& v) const {
  if (v.dim() != n_) throw DimensionError("vertex does not match graph dimension");
  std::vector<ExposedPart> out;
  if (!structured_) return out;
  for (uint32_t i = 0; i < 4; ++i) {
    const Block& b = blocks_[i];
    Vertex vi = restrictTo(v, b.coords);
    for (const CycleLocation& loc : b.graph->cyclesThrough(vi)) {
      uint32_t j = loc.position % b.size;
      out.push_back({i, j, b.parts[j]});
    }
  }
  return out;
}

void DiameterSpanner::appendNeighbors(const Vertex& v,
                                      std::vector<Vertex>& out) const {
  if (v.dim() != n_) throw DimensionError("vertex does not match graph dimension");
  if (!structured_) {
    for (uint32_t c = 0; c < n_; ++c) {
      Vertex nb(v);
      nb.flipBit(c);
      out.push_back(std::move(nb));
    }
    return;
  }
  for (const Block& b : blocks_) {
    Vertex vi = restrictTo(v, b.coords);
    for (const CycleLocation& loc : b.graph->cyclesThrough(vi)) {
      uint32_t prev = (loc.position + 2 * b.size - 1) % (2 * b.size);
      uint32_t next = (loc.position + 1) % (2 * b.size);
      out.push_back(
          embedAt(v, b.coords, loc.translation ^ baseCycleVertex(b.size, prev)));
      out.push_back(
          embedAt(v, b.coords, loc.translation ^ baseCycleVertex(b.size, next)));
      for (uint32_t c : b.parts[loc.position % b.size]) {
        Vertex nb(v);
        nb.flipBit(c);
        out.push_back(std::move(nb));
      }
    }
  }
}

std::vector<Vertex> DiameterSpanner::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  appendNeighbors(v, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

uint32_t DiameterSpanner::degree(const Vertex& v) const {
  return static_cast<uint32_t>(neighbors(v).size());
}

void DiameterSpanner::walkPhase(uint32_t a, Vertex& cur, Vertex& pendingMask,
                                Path& path) const {
  const Block& b = blocks_[a];
  Vertex va = restrictTo(cur, b.coords);
  CycleLocation loc = b.graph->cyclesThrough(va).front();
  for (uint32_t step = 0; step < b.size; ++step) {
    uint32_t pos = loc.position + step;
    for (uint32_t c : b.parts[pos % b.size]) {
      if (!pendingMask.bit(c)) continue;
      cur.flipBit(c);
      pendingMask.setBit(c, false);
      path.vertices.push_back(cur);
    }
    Vertex nextRestriction =
        loc.translation ^ baseCycleVertex(b.size, (pos + 1) % (2 * b.size));
    cur = embedAt(cur, b.coords, nextRestriction);
    path.vertices.push_back(cur);
  }
}

Path DiameterSpanner::route(const Vertex& v, const Vertex& w) const {
  if (v.dim() != n_ || w.dim() != n_)
    throw DimensionError("vertex does not match graph dimension");
  if (!structured_) return greedyPath(v, w);
  Path path;
  path.vertices.push_back(v);
  if (v == w) return path;

  // Agreement count per block; route through the two smallest.
  std::array<uint32_t, 4> agree{};
  for (uint32_t i = 0; i < 4; ++i)
    agree[i] = blocks_[i].size - hammingDistance(restrictTo(v, blocks_[i].coords),
                                                 restrictTo(w, blocks_[i].coords));
  std::array<uint32_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](uint32_t x, uint32_t y) { return agree[x] < agree[y]; });
  uint32_t a = order[0], b = order[1];

  Vertex cur(v);
  // Phase 1 walks block a; targets are w outside blocks a and b, and the
  // antipode of w's restriction on block b.
  Vertex phase1Target = w ^ blocks_[b].maskVec;
  Vertex pending = (cur ^ phase1Target) & blocks_[a].maskVec.complement();
  walkPhase(a, cur, pending, path);
  if (!pending.isZero()) throw Error("phase 1 left pending coordinates");

  // Phase 2 walks block b from antipode(w_b) back to w_b, restoring block a.
  pending = (cur ^ w) & blocks_[a].maskVec;
  walkPhase(b, cur, pending, path);
  if (!pending.isZero() || cur != w) throw Error("route failed to reach target");
  return path;
}

}  // namespace cubespan
