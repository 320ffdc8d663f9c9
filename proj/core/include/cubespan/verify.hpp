#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cubespan/implicit_graph.hpp"

namespace cubespan {

// Memory guards for index-addressed sweeps: bfs and single-pass scans hold
// one 2^n array, exhaustive diameter materializes adjacency and runs a sweep
// from every vertex.
struct Budgets {
  uint32_t materializeMax = 24;
  uint32_t diameterMax = 13;
};

// Uniform vertex from raw engine words, low bits first; no distribution
// objects so the stream is identical everywhere.
Vertex randomVertex(uint32_t n, std::mt19937_64& rng);

// Distances from source in edges; index i addresses Vertex::fromIndex(n, i),
// -1 marks unreachable.
std::vector<int32_t> bfsDistances(const ImplicitGraph& g, const Vertex& source,
                                  const Budgets& budgets = {});

struct DiameterResult {
  bool connected = false;
  uint32_t diameter = 0;  // meaningful only when connected
};
DiameterResult diameterExhaustive(const ImplicitGraph& g,
                                  const Budgets& budgets = {});

// Max eccentricity seen over seeded double sweeps; a lower bound only.
uint32_t diameterLowerBound(const ImplicitGraph& g, uint32_t sweeps,
                            uint64_t seed, const Budgets& budgets = {});

enum class ScanMode { Exhaustive, Sampled };

struct DegreeReport {
  uint64_t scanned = 0;
  uint32_t minDegree = 0;
  uint32_t maxDegree = 0;
  bool exhaustive = false;
};
DegreeReport degreeScan(const ImplicitGraph& g, ScanMode mode, uint64_t samples,
                        uint64_t seed, const Budgets& budgets = {});

struct SymmetryReport {
  uint64_t scanned = 0;
  uint64_t violations = 0;
  bool exhaustive = false;
  // first few offending (vertex, neighbor-without-back-edge) pairs
  std::vector<std::pair<Vertex, Vertex>> examples;
};
SymmetryReport symmetryCheck(const ImplicitGraph& g, ScanMode mode,
                             uint64_t samples, uint64_t seed,
                             const Budgets& budgets = {});

struct StretchReport {
  uint64_t pairs = 0;
  uint64_t unreachable = 0;
  uint32_t maxStretch = 0;
  uint64_t totalStretch = 0;
  bool allEven = true;
};
// Seeded sources, one bfs each, seeded targets per source; stretch of a pair
// is graph distance minus Hamming distance.
StretchReport stretchScan(const ImplicitGraph& g, uint32_t sources,
                          uint32_t targetsPerSource, uint64_t seed,
                          const Budgets& budgets = {});

struct PathCheck {
  bool ok = false;
  int64_t badIndex = -1;  // vertex index of the first failure
  std::string reason;
};
// Referee for router outputs: endpoints, unit steps, and edge membership.
PathCheck validatePath(const ImplicitGraph& g, const Path& p,
                       const Vertex& source, const Vertex& target);

uint32_t minDegreeCheck(const ImplicitGraph& g, const Budgets& budgets = {});

// Half the degree sum; throws when the sum is odd (asymmetric oracle).
uint64_t edgeCount(const ImplicitGraph& g, const Budgets& budgets = {});

// Exact value of 2^n + (2^n - 1)/(2n) - 1 as whole + remNum/remDen.
// Any graph of diameter n on all of {0,1}^n must have at least ceil() edges
// and minimum degree 2 (for n >= 2).
struct BoundValue {
  uint64_t whole = 0;
  uint64_t remNum = 0;
  uint64_t remDen = 1;
  uint64_t ceil() const { return whole + (remNum ? 1 : 0); }
  std::string toString() const;
};
BoundValue propositionBound(uint32_t n);

// Everything one verify invocation measured; sections run on request.
struct VerificationReport {
  std::string graphId;
  uint32_t n = 0;
  uint64_t seed = 0;
  std::optional<DegreeReport> degree;
  std::optional<SymmetryReport> symmetry;
  std::optional<uint64_t> edges;
  std::optional<uint32_t> minDegree;
  std::optional<DiameterResult> diameter;
  std::optional<uint32_t> diameterFloor;  // double-sweep bound when beyond budget
  std::optional<StretchReport> stretch;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

}  // namespace cubespan
