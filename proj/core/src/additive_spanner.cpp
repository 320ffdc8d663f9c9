#include "cubespan/additive_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>

namespace cubespan {

uint64_t chooseCapped(uint64_t t, uint64_t s, uint64_t cap) {
  if (s > t) return 0;
  if (s > t - s) s = t - s;
  uint64_t c = 1;
  for (uint64_t i = 0; i < s; ++i) {
    uint64_t num = t - i;
    if (c > (~uint64_t{0}) / num) return cap + 1;
    c = c * num / (i + 1);
    // Intermediate values are choose(t, i + 1), increasing while i + 1 <= t/2.
    if (c > cap) return cap + 1;
  }
  return c;
}

uint64_t subsetRank(const std::vector<uint32_t>& subset) {
  uint64_t rank = 0;
  for (size_t j = 0; j < subset.size(); ++j)
    rank += chooseCapped(subset[j], j + 1, ~uint64_t{0} - 1);
  return rank;
}

std::vector<uint32_t> subsetUnrank(uint64_t rank, uint32_t s, uint32_t t) {
  if (rank >= chooseCapped(t, s, ~uint64_t{0} - 1))
    throw Error("subset rank out of range");
  std::vector<uint32_t> subset(s);
  uint64_t rest = rank;
  for (uint32_t j = s; j-- > 0;) {
    uint32_t c = t;
    while (c > 0 && chooseCapped(c - 1, j + 1, ~uint64_t{0} - 1) > rest) --c;
    subset[j] = c - 1;
    rest -= chooseCapped(c - 1, j + 1, ~uint64_t{0} - 1);
  }
  return subset;
}

ParamCheck validateParams(const SpannerParams& p) {
  ParamCheck check;
  auto fail = [&](std::string msg) { check.violations.push_back(std::move(msg)); };
  if (p.n == 0) fail("n >= 1 fails");
  if (p.k == 0) return check;  // remaining fields unused at level 0

  if (!HammingCode::isCodeLength(p.q)) fail("q = 2^r - 1 fails");
  if (p.q >= p.n) fail("q < n fails");
  uint64_t t = p.blockSizes.size();
  if (t == 0) fail("at least one block required");
  uint64_t sum = 0;
  for (uint32_t b : p.blockSizes) {
    if (b == 0) fail("block sizes must be positive");
    sum += b;
  }
  if (p.q < p.n && sum != p.n - p.q) fail("block sizes must sum to n - q");
  if (p.s < 1) fail("s >= 1 fails");
  if (t < p.s) fail("t >= s fails");
  if (p.g < 1) fail("g >= 1 fails");
  if (t >= p.s && p.s >= 1) {
    if (chooseCapped(t, p.s, uint64_t{p.q} + 1) > uint64_t{p.q} + 1)
      fail("choose(t, s) <= q + 1 fails");
  }
  return check;
}

PaperParamsResult paperParams(uint64_t n, uint32_t k) {
  PaperParamsResult res;
  auto fail = [&](std::string msg) { res.violations.push_back(std::move(msg)); };
  if (n < 2) {
    fail("n >= 2 fails");
    return res;
  }
  if (k == 0) {
    SpannerParams p;
    p.n = static_cast<uint32_t>(n);
    p.k = 0;
    p.source = SpannerParams::Source::PaperFormula;
    res.params = p;
    return res;
  }

  double root = std::sqrt(static_cast<double>(n));
  uint64_t q = 0;
  for (uint32_t r = 1; r < 63; ++r) {
    uint64_t cand = (uint64_t{1} << r) - 1;
    if (static_cast<double>(cand) <= root) q = cand;
  }
  if (q == 0 || static_cast<double>(q) < root / 2.0)
    fail("no 2^r - 1 in [sqrt(n)/2, sqrt(n)]");

  // Iterated logarithms in real arithmetic; every argument must exceed 1.
  double logs[66];  // logs[j] = ln^(j) n
  logs[0] = static_cast<double>(n);
  bool logsOk = true;
  for (uint32_t j = 1; j <= k + 1; ++j) {
    if (logs[j - 1] <= 1.0) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "ln^(%u) n undefined (ln^(%u) n <= 1)", j,
                    j - 1);
      fail(buf);
      logsOk = false;
      break;
    }
    logs[j] = std::log(logs[j - 1]);
  }
  if (!logsOk) return res;

  double tReal = logs[1] * logs[k] / (900.0 * logs[k + 1] * logs[k + 1]);
  double sReal = logs[1] / (10.0 * logs[k + 1]);
  long long t = std::llround(tReal);
  long long s = std::llround(sReal);
  char buf[128];
  if (t < 1) {
    std::snprintf(buf, sizeof buf, "t >= 1 fails (formula gives %.6f)", tReal);
    fail(buf);
  }
  if (s < 1) {
    std::snprintf(buf, sizeof buf, "s >= 1 fails (formula gives %.6f)", sReal);
    fail(buf);
  }
  if (t >= 1 && s >= 1) {
    if (t < s) {
      std::snprintf(buf, sizeof buf, "t >= s fails (t = %lld, s = %lld)", t, s);
      fail(buf);
    } else if (chooseCapped(static_cast<uint64_t>(t), static_cast<uint64_t>(s),
                            q + 1) > q + 1) {
      std::snprintf(buf, sizeof buf,
                    "choose(t, s) <= q + 1 fails (t = %lld, s = %lld)", t, s);
      fail(buf);
    }
    if (q + static_cast<uint64_t>(t) > n)
      fail("n - q >= t fails (blocks need a coordinate each)");
  }
  if (!res.violations.empty()) return res;

  SpannerParams p;
  p.n = static_cast<uint32_t>(n);
  p.k = k;
  p.q = static_cast<uint32_t>(q);
  p.s = static_cast<uint32_t>(s);
  double groupDiv = std::pow(500.0, static_cast<double>(k));
  p.g = std::max<uint32_t>(
      1, static_cast<uint32_t>(static_cast<double>(s) / groupDiv));
  uint64_t rest = n - q;
  uint64_t per = rest / static_cast<uint64_t>(t);
  uint64_t extra = rest % static_cast<uint64_t>(t);
  for (long long i = 0; i < t; ++i)
    p.blockSizes.push_back(static_cast<uint32_t>(per + (i < (long long)extra)));
  p.source = SpannerParams::Source::PaperFormula;
  res.params = p;
  return res;
}

void ParamSchedule::add(const SpannerParams& p) {
  auto key = std::make_pair(p.k, p.n);
  auto it = entries_.find(key);
  if (it != entries_.end())
    throw ParameterError({"duplicate schedule entry for level/dimension"});
  entries_.emplace(key, p);
}

std::optional<SpannerParams> ParamSchedule::find(uint32_t level,
                                                 uint32_t n) const {
  auto it = entries_.find(std::make_pair(level, n));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

AdditiveSpanner AdditiveSpanner::build(const SpannerParams& p,
                                       const ParamSchedule& schedule) {
  ParamCheck check = validateParams(p);
  if (!check.ok()) throw ParameterError(check.violations);
  AdditiveSpanner sp;
  sp.params_ = p;
  if (p.k == 0) return sp;

  uint32_t r = 0;
  while (((uint32_t{1} << (r + 1)) - 1) <= p.q) ++r;
  sp.code_.emplace(r);
  sp.b0_ = CoordinateSet::range(0, p.q);
  sp.b0Mask_ = sp.b0_.mask(p.n);

  uint32_t t = static_cast<uint32_t>(p.blockSizes.size());
  uint32_t offset = p.q;
  for (uint32_t i = 0; i < t; ++i) {
    sp.blocks_.push_back(CoordinateSet::range(offset, offset + p.blockSizes[i]));
    offset += p.blockSizes[i];
  }

  // Residue groups: consecutive runs of ceil(t / g) blocks, last run may be
  // short and trailing runs may be empty.
  uint32_t runLen = (t + p.g - 1) / p.g;
  for (uint32_t gi = 0; gi < p.g; ++gi) {
    CoordinateSet group;
    for (uint32_t b = gi * runLen; b < std::min((gi + 1) * runLen, t); ++b)
      group = group.unionWith(sp.blocks_[b]);
    sp.groups_.push_back(std::move(group));
  }

  sp.tChooseS_ = chooseCapped(t, p.s, uint64_t{p.q} + 1);
  std::map<uint32_t, std::shared_ptr<const AdditiveSpanner>> subBySize;
  for (uint64_t i = 0; i < sp.tChooseS_; ++i) {
    CosetInfo info;
    info.blockSet.blockIndices = subsetUnrank(i, p.s, t);
    for (uint32_t b : info.blockSet.blockIndices)
      info.blockSet.coords = info.blockSet.coords.unionWith(sp.blocks_[b]);
    info.bxMask = info.blockSet.coords.mask(p.n);
    uint32_t subDim = static_cast<uint32_t>(info.blockSet.coords.size());
    auto& sub = subBySize[subDim];
    if (!sub) {
      SpannerParams subParams;
      if (p.k == 1) {
        subParams.n = subDim;
        subParams.k = 0;
      } else {
        auto found = schedule.find(p.k - 1, subDim);
        if (!found) {
          char buf[96];
          std::snprintf(buf, sizeof buf,
                        "no schedule entry for level %u dimension %u", p.k - 1,
                        subDim);
          throw ParameterError({buf});
        }
        subParams = *found;
        if (subParams.n != subDim || subParams.k != p.k - 1)
          throw ParameterError({"schedule entry level/dimension mismatch"});
      }
      sub = std::make_shared<AdditiveSpanner>(build(subParams, schedule));
    }
    info.sub = sub;
    for (uint32_t gi = 0; gi < p.g; ++gi)
      info.helperDirs.push_back(sp.groups_[gi].minus(info.blockSet.coords));
    sp.cosets_.push_back(std::move(info));
  }
  return sp;
}

uint32_t AdditiveSpanner::codeIndexOf(const Vertex& x) const {
  if (params_.k == 0) throw Error("level 0 has no coded region");
  if (x.dim() != params_.n)
    throw DimensionError("vertex does not match spanner dimension");
  return code_->cosetIndex(restrictTo(x, b0_));
}

const AdditiveSpanner::BlockSet* AdditiveSpanner::blockSetOf(
    const Vertex& x) const {
  if (params_.k == 0) return nullptr;
  uint32_t i = codeIndexOf(x);
  if (i >= tChooseS_) return nullptr;
  return &cosets_[i].blockSet;
}

void AdditiveSpanner::appendNeighbors(const Vertex& x,
                                      std::vector<Vertex>& out) const {
  if (x.dim() != params_.n)
    throw DimensionError("vertex does not match spanner dimension");
  if (params_.k == 0) {
    for (uint32_t c = 0; c < params_.n; ++c) {
      Vertex nb(x);
      nb.flipBit(c);
      out.push_back(std::move(nb));
    }
    return;
  }
  for (uint32_t c : b0_) {
    Vertex nb(x);
    nb.flipBit(c);
    out.push_back(std::move(nb));
  }
  uint32_t i = codeIndexOf(x);
  if (i >= tChooseS_) return;
  const CosetInfo& info = cosets_[i];
  Vertex inner = restrictTo(x, info.blockSet.coords);
  std::vector<Vertex> innerNbs;
  info.sub->appendNeighbors(inner, innerNbs);
  for (const Vertex& nb : innerNbs)
    out.push_back(embedAt(x, info.blockSet.coords, nb));
  uint32_t residue = inner.popcount() % params_.g;
  for (uint32_t c : info.helperDirs[residue]) {
    Vertex nb(x);
    nb.flipBit(c);
    out.push_back(std::move(nb));
  }
}

std::vector<Vertex> AdditiveSpanner::neighbors(const Vertex& x) const {
  std::vector<Vertex> out;
  appendNeighbors(x, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

uint32_t AdditiveSpanner::degree(const Vertex& x) const {
  if (x.dim() != params_.n)
    throw DimensionError("vertex does not match spanner dimension");
  if (params_.k == 0) return params_.n;
  uint32_t i = codeIndexOf(x);
  uint32_t d = params_.q;
  if (i >= tChooseS_) return d;
  const CosetInfo& info = cosets_[i];
  Vertex inner = restrictTo(x, info.blockSet.coords);
  d += info.sub->degree(inner);
  d += static_cast<uint32_t>(info.helperDirs[inner.popcount() % params_.g].size());
  return d;
}

// One reduction round: fix the coded region, pick the block subset, enter its
// coset, run the inner route (interleaving helper flips when more than s
// differences remain outside the coded region), and leave the coset.
void AdditiveSpanner::routeOnce(const Vertex& y, Vertex& cur, Path& path,
                                uint32_t& fallbackRounds) const {
  uint32_t t = static_cast<uint32_t>(blocks_.size());
  for (uint32_t c : b0_) {
    if (cur.bit(c) == y.bit(c)) continue;
    cur.flipBit(c);
    path.vertices.push_back(cur);
  }
  while (cur != y) {
    uint32_t before = hammingDistance(cur, y);
    Vertex diff = cur ^ y;
    std::vector<uint32_t> diffCount(t, 0);
    uint32_t diffBlocks = 0;
    for (uint32_t b = 0; b < t; ++b) {
      diffCount[b] = restrictTo(diff, blocks_[b]).popcount();
      if (diffCount[b] > 0) ++diffBlocks;
    }

    bool fewDiffs = diffBlocks <= params_.s;
    std::vector<uint32_t> chosen;
    if (fewDiffs) {
      // All difference blocks, padded with the lowest-index unused blocks.
      for (uint32_t b = 0; b < t; ++b)
        if (diffCount[b] > 0) chosen.push_back(b);
      for (uint32_t b = 0; b < t && chosen.size() < params_.s; ++b)
        if (diffCount[b] == 0) chosen.push_back(b);
    } else {
      // The s blocks with the most differences, ties toward lower index.
      std::vector<uint32_t> order(t);
      for (uint32_t b = 0; b < t; ++b) order[b] = b;
      std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return diffCount[a] > diffCount[b];
      });
      chosen.assign(order.begin(), order.begin() + params_.s);
    }
    std::sort(chosen.begin(), chosen.end());
    uint64_t cosetTarget = subsetRank(chosen);
    const CosetInfo& info = cosets_[cosetTarget];

    uint32_t entryCoord = params_.n;  // sentinel: no entry step needed
    uint32_t syn = codeIndexOf(cur);
    if (syn != cosetTarget) {
      entryCoord = b0_[(syn ^ static_cast<uint32_t>(cosetTarget)) - 1];
      cur.flipBit(entryCoord);
      path.vertices.push_back(cur);
    }

    Vertex innerStart = restrictTo(cur, info.blockSet.coords);
    Vertex innerGoal = restrictTo(y, info.blockSet.coords);
    RouteReport innerReport = info.sub->route(innerStart, innerGoal);
    fallbackRounds += innerReport.fallbackRounds;

    if (fewDiffs) {
      for (size_t v = 1; v < innerReport.path.vertices.size(); ++v) {
        cur = embedAt(cur, info.blockSet.coords, innerReport.path.vertices[v]);
        path.vertices.push_back(cur);
      }
    } else {
      Vertex pending = (cur ^ y) & info.bxMask.complement() & b0Mask_.complement();
      for (size_t v = 1; v < innerReport.path.vertices.size(); ++v) {
        const Vertex& inner = innerReport.path.vertices[v];
        cur = embedAt(cur, info.blockSet.coords, inner);
        path.vertices.push_back(cur);
        uint32_t residue = inner.popcount() % params_.g;
        for (uint32_t c : info.helperDirs[residue]) {
          if (!pending.bit(c)) continue;
          cur.flipBit(c);
          pending.setBit(c, false);
          path.vertices.push_back(cur);
        }
      }
    }

    if (entryCoord < params_.n) {
      cur.flipBit(entryCoord);
      path.vertices.push_back(cur);
    }
    if (cur != y) {
      ++fallbackRounds;
      if (hammingDistance(cur, y) >= before)
        throw Error("routing round made no progress");
    }
  }
}

RouteReport AdditiveSpanner::route(const Vertex& x, const Vertex& y) const {
  if (x.dim() != params_.n || y.dim() != params_.n)
    throw DimensionError("vertex does not match spanner dimension");
  RouteReport report;
  if (params_.k == 0) {
    report.path = greedyPath(x, y);
  } else {
    report.path.vertices.push_back(x);
    Vertex cur(x);
    routeOnce(y, cur, report.path, report.fallbackRounds);
  }
  report.claimedSlack = report.path.length() - hammingDistance(x, y);
  report.distinctSums = distinctCoordinateSums(report.path);
  return report;
}

uint32_t AdditiveSpanner::stretchOracle(const Vertex& x, const Vertex& y,
                                        uint32_t materializeMax) const {
  if (x.dim() != params_.n || y.dim() != params_.n)
    throw DimensionError("vertex does not match spanner dimension");
  if (params_.n > materializeMax || params_.n > 63)
    throw CapacityError("dimension exceeds the materialization budget");
  std::vector<int32_t> dist(uint64_t{1} << params_.n, -1);
  std::queue<uint64_t> frontier;
  dist[x.toIndex()] = 0;
  frontier.push(x.toIndex());
  uint64_t goal = y.toIndex();
  std::vector<Vertex> nbs;
  while (!frontier.empty()) {
    uint64_t at = frontier.front();
    frontier.pop();
    if (at == goal) break;
    nbs.clear();
    appendNeighbors(Vertex::fromIndex(params_.n, at), nbs);
    for (const Vertex& nb : nbs) {
      uint64_t idx = nb.toIndex();
      if (dist[idx] < 0) {
        dist[idx] = dist[at] + 1;
        frontier.push(idx);
      }
    }
  }
  if (dist[goal] < 0) throw Error("target unreachable in spanner");
  return static_cast<uint32_t>(dist[goal]) - hammingDistance(x, y);
}

}  // namespace cubespan
