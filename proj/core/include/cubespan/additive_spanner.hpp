#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubespan/bits.hpp"
#include "cubespan/codes.hpp"

namespace cubespan {

// Parameters of one recursion level of the additive spanner.
struct SpannerParams {
  uint32_t n = 0;  // ambient dimension
  uint32_t k = 0;  // recursion depth; 0 is the full hypercube
  uint32_t q = 0;  // Hamming code length, 2^r - 1
  std::vector<uint32_t> blockSizes;  // t positive sizes summing to n - q
  uint32_t s = 1;  // blocks routed through per step
  uint32_t g = 1;  // residue groups for the helper directions
  enum class Source { PaperFormula, Override } source = Source::Override;
};

struct ParamCheck {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the structural constraints: q = 2^r - 1, block sizes positive and
// summing to n - q, t >= s >= 1, g >= 1, choose(t, s) <= q + 1 (evaluated
// overflow-safe). With k = 0 the remaining fields are ignored.
ParamCheck validateParams(const SpannerParams& p);

// The published parameter formulas, evaluated in real arithmetic and rounded
// to nearest integers. At any dimension a machine can hold, some constraint
// fails (typically t >= 1); the violations name the failing inequality.
struct PaperParamsResult {
  std::optional<SpannerParams> params;
  std::vector<std::string> violations;
  bool ok() const { return params.has_value(); }
};
PaperParamsResult paperParams(uint64_t n, uint32_t k);

// Explicit parameters per (level, dimension) for override-mode recursion.
class ParamSchedule {
 public:
  void add(const SpannerParams& p);
  std::optional<SpannerParams> find(uint32_t level, uint32_t n) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::pair<uint32_t, uint32_t>, SpannerParams> entries_;
};

// Colexicographic rank of an s-subset given in increasing order:
// sum over j of choose(subset[j], j + 1).
uint64_t subsetRank(const std::vector<uint32_t>& subset);
// Inverse over s-subsets of {0, ..., t-1}; throws on rank >= choose(t, s).
std::vector<uint32_t> subsetUnrank(uint64_t rank, uint32_t s, uint32_t t);

// choose(t, s) computed with saturation: any value above cap returns cap + 1.
uint64_t chooseCapped(uint64_t t, uint64_t s, uint64_t cap);

struct RouteReport {
  Path path;
  uint32_t claimedSlack = 0;  // length minus Hamming distance, always even
  uint32_t distinctSums = 0;  // distinct coordinate sums along the path
  uint32_t fallbackRounds = 0;
};

// Recursive additive spanner. Level k >= 1 fixes the first q coordinates as
// a Hamming-coded region whose coset index selects an s-subset of blocks;
// a vertex keeps (H1) all q coded directions, (H2) the edges of a level
// k-1 spanner embedded on its selected blocks, and (H3) flips inside one
// residue group of blocks determined by its coordinate sum on the selected
// blocks. Level 0 is the full hypercube.
class AdditiveSpanner {
 public:
  static AdditiveSpanner build(const SpannerParams& p,
                               const ParamSchedule& schedule = {});

  uint32_t dim() const { return params_.n; }
  uint32_t level() const { return params_.k; }
  const SpannerParams& params() const { return params_; }

  // Coset index of the coded region, in [0, q].
  uint32_t codeIndexOf(const Vertex& x) const;

  struct BlockSet {
    std::vector<uint32_t> blockIndices;
    CoordinateSet coords;
  };
  // Selected blocks of x, or nullptr when the coset index has no subset
  // assigned (index >= choose(t, s)) or the level is 0.
  const BlockSet* blockSetOf(const Vertex& x) const;

  std::vector<Vertex> neighbors(const Vertex& x) const;
  void appendNeighbors(const Vertex& x, std::vector<Vertex>& out) const;
  // Analytic degree; always equals neighbors(x).size().
  uint32_t degree(const Vertex& x) const;

  // Constructive router: reduce the coded region first, then either move
  // both endpoints into the coset of the difference blocks and recurse
  // (few differences), or walk the inner route while flipping outside
  // differences as their residue group becomes active, repeating rounds
  // until done (many differences).
  RouteReport route(const Vertex& x, const Vertex& y) const;

  // Exact additive stretch d_spanner(x, y) - hamming(x, y) by breadth-first
  // search; guarded by a materialization budget.
  uint32_t stretchOracle(const Vertex& x, const Vertex& y,
                         uint32_t materializeMax = 24) const;

 private:
  AdditiveSpanner() = default;
  void routeOnce(const Vertex& y, Vertex& cur, Path& path,
                 uint32_t& fallbackRounds) const;

  SpannerParams params_;
  std::optional<HammingCode> code_;
  CoordinateSet b0_;
  Vertex b0Mask_;
  std::vector<CoordinateSet> blocks_;
  std::vector<CoordinateSet> groups_;  // block-index runs as coordinate sets
  uint64_t tChooseS_ = 0;

  struct CosetInfo {
    BlockSet blockSet;
    Vertex bxMask;
    std::shared_ptr<const AdditiveSpanner> sub;
    std::vector<CoordinateSet> helperDirs;  // per residue: group minus B_x
  };
  std::vector<CosetInfo> cosets_;  // indexed by coset index < choose(t, s)
};

}  // namespace cubespan
