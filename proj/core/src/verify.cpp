#include "cubespan/verify.hpp"

#include <algorithm>
#include <cstdio>

namespace cubespan {

namespace {

constexpr uint32_t kExampleCap = 8;

void checkIndexBudget(uint32_t n, uint32_t cap, const char* what) {
  if (n > cap || n > 63) {
    char buf[112];
    std::snprintf(buf, sizeof buf, "%s needs n <= %u (n = %u)", what,
                  std::min(cap, 63u), n);
    throw CapacityError(buf);
  }
}

uint32_t distinctDegree(const ImplicitGraph& g, const Vertex& v,
                        std::vector<Vertex>& scratch) {
  scratch.clear();
  g.append(v, scratch);
  std::sort(scratch.begin(), scratch.end());
  auto last = std::unique(scratch.begin(), scratch.end());
  return static_cast<uint32_t>(last - scratch.begin());
}

struct Csr {
  std::vector<uint64_t> offsets;
  std::vector<uint32_t> targets;
};

Csr materialize(const ImplicitGraph& g) {
  Csr csr;
  uint64_t count = uint64_t{1} << g.n;
  csr.offsets.reserve(count + 1);
  csr.offsets.push_back(0);
  std::vector<Vertex> scratch;
  for (uint64_t i = 0; i < count; ++i) {
    uint32_t deg = distinctDegree(g, Vertex::fromIndex(g.n, i), scratch);
    for (uint32_t j = 0; j < deg; ++j)
      csr.targets.push_back(static_cast<uint32_t>(scratch[j].toIndex()));
    csr.offsets.push_back(csr.targets.size());
  }
  return csr;
}

}  // namespace

Vertex randomVertex(uint32_t n, std::mt19937_64& rng) {
  Vertex v(n);
  for (uint32_t base = 0; base < n; base += 64) {
    uint64_t w = rng();
    uint32_t len = std::min<uint32_t>(64, n - base);
    for (uint32_t j = 0; j < len; ++j)
      if ((w >> j) & 1) v.setBit(base + j, true);
  }
  return v;
}

std::vector<int32_t> bfsDistances(const ImplicitGraph& g, const Vertex& source,
                                  const Budgets& budgets) {
  checkIndexBudget(g.n, budgets.materializeMax, "breadth-first sweep");
  if (source.dim() != g.n)
    throw DimensionError("source does not match graph dimension");
  std::vector<int32_t> dist(uint64_t{1} << g.n, -1);
  std::vector<uint64_t> queue;
  dist[source.toIndex()] = 0;
  queue.push_back(source.toIndex());
  std::vector<Vertex> scratch;
  for (size_t head = 0; head < queue.size(); ++head) {
    uint64_t at = queue[head];
    scratch.clear();
    g.append(Vertex::fromIndex(g.n, at), scratch);
    for (const Vertex& nb : scratch) {
      uint64_t idx = nb.toIndex();
      if (dist[idx] < 0) {
        dist[idx] = dist[at] + 1;
        queue.push_back(idx);
      }
    }
  }
  return dist;
}

DiameterResult diameterExhaustive(const ImplicitGraph& g,
                                  const Budgets& budgets) {
  checkIndexBudget(g.n, std::min(budgets.diameterMax, budgets.materializeMax),
                   "exhaustive diameter");
  Csr csr = materialize(g);
  uint64_t count = uint64_t{1} << g.n;
  std::vector<int32_t> dist(count);
  std::vector<uint32_t> queue(count);
  DiameterResult res;
  res.connected = true;
  for (uint64_t s = 0; s < count; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    uint64_t head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = static_cast<uint32_t>(s);
    int32_t ecc = 0;
    while (head < tail) {
      uint32_t at = queue[head++];
      ecc = dist[at];
      for (uint64_t e = csr.offsets[at]; e < csr.offsets[at + 1]; ++e) {
        uint32_t to = csr.targets[e];
        if (dist[to] < 0) {
          dist[to] = dist[at] + 1;
          queue[tail++] = to;
        }
      }
    }
    if (tail != count) {
      res.connected = false;
      res.diameter = 0;
      return res;
    }
    res.diameter = std::max(res.diameter, static_cast<uint32_t>(ecc));
  }
  return res;
}

uint32_t diameterLowerBound(const ImplicitGraph& g, uint32_t sweeps,
                            uint64_t seed, const Budgets& budgets) {
  checkIndexBudget(g.n, budgets.materializeMax, "diameter sweep");
  std::mt19937_64 rng(seed);
  uint32_t best = 0;
  for (uint32_t i = 0; i < sweeps; ++i) {
    std::vector<int32_t> dist = bfsDistances(g, randomVertex(g.n, rng), budgets);
    uint64_t farthest = 0;
    int32_t far = 0;
    for (uint64_t j = 0; j < dist.size(); ++j) {
      if (dist[j] > far) {
        far = dist[j];
        farthest = j;
      }
    }
    best = std::max(best, static_cast<uint32_t>(far));
    dist = bfsDistances(g, Vertex::fromIndex(g.n, farthest), budgets);
    for (int32_t d : dist) best = std::max(best, static_cast<uint32_t>(std::max(d, 0)));
  }
  return best;
}

DegreeReport degreeScan(const ImplicitGraph& g, ScanMode mode, uint64_t samples,
                        uint64_t seed, const Budgets& budgets) {
  DegreeReport rep;
  std::vector<Vertex> scratch;
  auto feed = [&](const Vertex& v) {
    uint32_t d = distinctDegree(g, v, scratch);
    if (rep.scanned == 0) {
      rep.minDegree = rep.maxDegree = d;
    } else {
      rep.minDegree = std::min(rep.minDegree, d);
      rep.maxDegree = std::max(rep.maxDegree, d);
    }
    ++rep.scanned;
  };
  if (mode == ScanMode::Exhaustive) {
    checkIndexBudget(g.n, budgets.materializeMax, "exhaustive degree scan");
    for (uint64_t i = 0; i < (uint64_t{1} << g.n); ++i)
      feed(Vertex::fromIndex(g.n, i));
    rep.exhaustive = true;
  } else {
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < samples; ++i) feed(randomVertex(g.n, rng));
  }
  return rep;
}

SymmetryReport symmetryCheck(const ImplicitGraph& g, ScanMode mode,
                             uint64_t samples, uint64_t seed,
                             const Budgets& budgets) {
  SymmetryReport rep;
  std::vector<Vertex> nbs, back;
  auto feed = [&](const Vertex& v) {
    nbs.clear();
    g.append(v, nbs);
    std::sort(nbs.begin(), nbs.end());
    nbs.erase(std::unique(nbs.begin(), nbs.end()), nbs.end());
    for (const Vertex& u : nbs) {
      back.clear();
      g.append(u, back);
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        ++rep.violations;
        if (rep.examples.size() < kExampleCap) rep.examples.emplace_back(v, u);
      }
    }
    ++rep.scanned;
  };
  if (mode == ScanMode::Exhaustive) {
    checkIndexBudget(g.n, budgets.materializeMax, "exhaustive symmetry scan");
    for (uint64_t i = 0; i < (uint64_t{1} << g.n); ++i)
      feed(Vertex::fromIndex(g.n, i));
    rep.exhaustive = true;
  } else {
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < samples; ++i) feed(randomVertex(g.n, rng));
  }
  return rep;
}

StretchReport stretchScan(const ImplicitGraph& g, uint32_t sources,
                          uint32_t targetsPerSource, uint64_t seed,
                          const Budgets& budgets) {
  checkIndexBudget(g.n, budgets.materializeMax, "stretch scan");
  StretchReport rep;
  std::mt19937_64 rng(seed);
  for (uint32_t si = 0; si < sources; ++si) {
    Vertex src = randomVertex(g.n, rng);
    std::vector<int32_t> dist = bfsDistances(g, src, budgets);
    for (uint32_t ti = 0; ti < targetsPerSource; ++ti) {
      Vertex tgt = randomVertex(g.n, rng);
      ++rep.pairs;
      int32_t d = dist[tgt.toIndex()];
      if (d < 0) {
        ++rep.unreachable;
        continue;
      }
      uint32_t stretch =
          static_cast<uint32_t>(d) - hammingDistance(src, tgt);
      rep.maxStretch = std::max(rep.maxStretch, stretch);
      rep.totalStretch += stretch;
      if (stretch & 1) rep.allEven = false;
    }
  }
  return rep;
}

PathCheck validatePath(const ImplicitGraph& g, const Path& p,
                       const Vertex& source, const Vertex& target) {
  PathCheck check;
  if (p.vertices.empty()) {
    check.badIndex = 0;
    check.reason = "empty path";
    return check;
  }
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    if (p.vertices[i].dim() != g.n) {
      check.badIndex = static_cast<int64_t>(i);
      check.reason = "vertex dimension mismatch";
      return check;
    }
  }
  if (p.vertices.front() != source) {
    check.badIndex = 0;
    check.reason = "path does not start at the source";
    return check;
  }
  std::vector<Vertex> scratch;
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (hammingDistance(p.vertices[i], p.vertices[i + 1]) != 1) {
      check.badIndex = static_cast<int64_t>(i);
      check.reason = "step is not a single coordinate flip";
      return check;
    }
    scratch.clear();
    g.append(p.vertices[i], scratch);
    if (std::find(scratch.begin(), scratch.end(), p.vertices[i + 1]) ==
        scratch.end()) {
      check.badIndex = static_cast<int64_t>(i);
      check.reason = "step is not an edge of the graph";
      return check;
    }
  }
  if (p.vertices.back() != target) {
    check.badIndex = static_cast<int64_t>(p.vertices.size()) - 1;
    check.reason = "path does not end at the target";
    return check;
  }
  check.ok = true;
  return check;
}

uint32_t minDegreeCheck(const ImplicitGraph& g, const Budgets& budgets) {
  DegreeReport rep = degreeScan(g, ScanMode::Exhaustive, 0, 0, budgets);
  return rep.minDegree;
}

uint64_t edgeCount(const ImplicitGraph& g, const Budgets& budgets) {
  checkIndexBudget(g.n, budgets.materializeMax, "edge count");
  uint64_t sum = 0;
  std::vector<Vertex> scratch;
  for (uint64_t i = 0; i < (uint64_t{1} << g.n); ++i)
    sum += distinctDegree(g, Vertex::fromIndex(g.n, i), scratch);
  if (sum & 1) throw Error("odd degree sum, adjacency is not symmetric");
  return sum / 2;
}

std::string BoundValue::toString() const {
  char buf[80];
  if (remNum == 0) {
    std::snprintf(buf, sizeof buf, "%llu", (unsigned long long)whole);
  } else {
    std::snprintf(buf, sizeof buf, "%llu + %llu/%llu",
                  (unsigned long long)whole, (unsigned long long)remNum,
                  (unsigned long long)remDen);
  }
  return buf;
}

BoundValue propositionBound(uint32_t n) {
  if (n == 0 || n > 62) throw DimensionError("bound defined for n in 1..62");
  // 2^n + (2^n - 1)/(2n) - 1 = (2n + 1)(2^n - 1) / (2n)
  unsigned __int128 num =
      (unsigned __int128)(2 * uint64_t{n} + 1) * ((uint64_t{1} << n) - 1);
  uint64_t den = 2 * uint64_t{n};
  BoundValue b;
  b.whole = static_cast<uint64_t>(num / den);
  b.remNum = static_cast<uint64_t>(num % den);
  b.remDen = den;
  return b;
}

}  // namespace cubespan
