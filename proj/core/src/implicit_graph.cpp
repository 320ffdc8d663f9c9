#include "cubespan/implicit_graph.hpp"

#include <algorithm>

namespace cubespan {

std::vector<Vertex> ImplicitGraph::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  append(v, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void checkDim(uint32_t n, const Vertex& v) {
  if (v.dim() != n)
    throw DimensionError("vertex does not match graph dimension");
}

// Bracket pairing of the text form: 1 opens, 0 closes, each 0 pairs with the
// nearest unpaired 1 on its left. Leftovers are all unpaired 0s followed by
// all unpaired 1s; the stack left over is the unpaired 1s in ascending order.
void bracketUnpaired(const Vertex& v, std::vector<uint32_t>& zeros,
                     std::vector<uint32_t>& ones) {
  zeros.clear();
  ones.clear();
  for (uint32_t c = 0; c < v.dim(); ++c) {
    if (v.bit(c))
      ones.push_back(c);
    else if (!ones.empty())
      ones.pop_back();
    else
      zeros.push_back(c);
  }
}

// Covered side of the layer pair (k, k+1): the lower layer from the middle
// pair upward (equal-size pair included), the upper layer below that.
bool coversLower(uint32_t n, uint32_t k) { return 2 * k + 1 >= n; }

}  // namespace

Vertex layerChainUp(const Vertex& v) {
  std::vector<uint32_t> zeros, ones;
  bracketUnpaired(v, zeros, ones);
  Vertex up(v);
  if (!zeros.empty()) {
    up.flipBit(zeros.front());
    return up;
  }
  for (uint32_t c = 0; c < v.dim(); ++c) {
    if (!v.bit(c)) {
      up.flipBit(c);
      return up;
    }
  }
  throw DimensionError("no coordinate to raise");
}

Vertex layerChainDown(const Vertex& v) {
  std::vector<uint32_t> zeros, ones;
  bracketUnpaired(v, zeros, ones);
  Vertex down(v);
  if (!ones.empty()) {
    down.flipBit(ones.back());
    return down;
  }
  for (uint32_t c = 0; c < v.dim(); ++c) {
    if (v.bit(c)) {
      down.flipBit(c);
      return down;
    }
  }
  throw DimensionError("no coordinate to lower");
}

ImplicitGraph hypercubeGraph(uint32_t n) {
  if (n == 0) throw ParameterError({"n >= 1 fails"});
  ImplicitGraph g;
  g.id = "qn";
  g.n = n;
  g.append = [n](const Vertex& v, std::vector<Vertex>& out) {
    checkDim(n, v);
    for (uint32_t c = 0; c < n; ++c) {
      Vertex nb(v);
      nb.flipBit(c);
      out.push_back(std::move(nb));
    }
  };
  return g;
}

ImplicitGraph antipodalGraph(std::shared_ptr<const AntipodalCycleGraph> src) {
  ImplicitGraph g;
  g.id = "antipodal";
  g.n = src->dim();
  g.append = [src = std::move(src)](const Vertex& v, std::vector<Vertex>& out) {
    src->appendNeighbors(v, out);
  };
  return g;
}

ImplicitGraph diameterSpannerGraph(std::shared_ptr<const DiameterSpanner> src) {
  ImplicitGraph g;
  g.id = "diam";
  g.n = src->dim();
  g.append = [src = std::move(src)](const Vertex& v, std::vector<Vertex>& out) {
    src->appendNeighbors(v, out);
  };
  return g;
}

ImplicitGraph additiveSpannerGraph(std::shared_ptr<const AdditiveSpanner> src) {
  ImplicitGraph g;
  g.id = "addspanner";
  g.n = src->dim();
  g.append = [src = std::move(src)](const Vertex& v, std::vector<Vertex>& out) {
    src->appendNeighbors(v, out);
  };
  return g;
}

ImplicitGraph layerMatchingGraph(uint32_t n) {
  if (n < 2) throw ParameterError({"n >= 2 fails"});
  ImplicitGraph g;
  g.id = "layermatch";
  g.n = n;
  g.append = [n](const Vertex& v, std::vector<Vertex>& out) {
    checkDim(n, v);
    uint32_t layer = v.popcount();
    if (layer < n) {
      if (coversLower(n, layer)) {
        out.push_back(layerChainUp(v));
      } else {
        // covered side is the layer above; collect the partners aimed at v
        for (uint32_t c = 0; c < n; ++c) {
          if (v.bit(c)) continue;
          Vertex u(v);
          u.flipBit(c);
          if (layerChainDown(u) == v) out.push_back(std::move(u));
        }
      }
    }
    if (layer > 0) {
      if (coversLower(n, layer - 1)) {
        for (uint32_t c = 0; c < n; ++c) {
          if (!v.bit(c)) continue;
          Vertex u(v);
          u.flipBit(c);
          if (layerChainUp(u) == v) out.push_back(std::move(u));
        }
      } else {
        out.push_back(layerChainDown(v));
      }
    }
  };
  return g;
}

ImplicitGraph brokenSymmetryFixture(uint32_t n) {
  if (n == 0) throw ParameterError({"n >= 1 fails"});
  ImplicitGraph g;
  g.id = "brokensym";
  g.n = n;
  // the all-zeros vertex drops its coordinate-0 neighbor; that neighbor
  // still lists all-zeros
  g.append = [n](const Vertex& v, std::vector<Vertex>& out) {
    checkDim(n, v);
    for (uint32_t c = 0; c < n; ++c) {
      if (c == 0 && v.isZero()) continue;
      Vertex nb(v);
      nb.flipBit(c);
      out.push_back(std::move(nb));
    }
  };
  return g;
}

ImplicitGraph starFixture(uint32_t n) {
  if (n == 0 || n > 24) throw ParameterError({"n in 1..24 fails"});
  ImplicitGraph g;
  g.id = "star";
  g.n = n;
  g.append = [n](const Vertex& v, std::vector<Vertex>& out) {
    checkDim(n, v);
    if (v.isZero()) {
      for (uint64_t i = 1; i < (uint64_t{1} << n); ++i)
        out.push_back(Vertex::fromIndex(n, i));
    } else {
      out.push_back(Vertex::zeros(n));
    }
  };
  return g;
}

ImplicitGraph hamiltonianPathFixture(uint32_t n) {
  if (n == 0 || n > 63) throw ParameterError({"n in 1..63 fails"});
  ImplicitGraph g;
  g.id = "hampath";
  g.n = n;
  g.append = [n](const Vertex& v, std::vector<Vertex>& out) {
    checkDim(n, v);
    uint64_t rank = v.toIndex();
    for (uint32_t sh = 1; sh < 64; sh <<= 1) rank ^= rank >> sh;
    if (rank > 0) {
      uint64_t prev = rank - 1;
      out.push_back(Vertex::fromIndex(n, prev ^ (prev >> 1)));
    }
    if (rank + 1 < (uint64_t{1} << n)) {
      uint64_t next = rank + 1;
      out.push_back(Vertex::fromIndex(n, next ^ (next >> 1)));
    }
  };
  return g;
}

}  // namespace cubespan
