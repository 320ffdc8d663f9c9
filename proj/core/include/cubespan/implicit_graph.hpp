#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cubespan/additive_spanner.hpp"
#include "cubespan/antipodal.hpp"
#include "cubespan/bits.hpp"
#include "cubespan/diameter_spanner.hpp"

namespace cubespan {

// Adjacency oracle plus a stable identifier; the only view the verification
// harness has of a construction. append may emit duplicates, neighbors()
// never does.
struct ImplicitGraph {
  std::string id;
  uint32_t n = 0;
  std::function<void(const Vertex&, std::vector<Vertex>&)> append;

  std::vector<Vertex> neighbors(const Vertex& v) const;
};

ImplicitGraph hypercubeGraph(uint32_t n);
ImplicitGraph antipodalGraph(std::shared_ptr<const AntipodalCycleGraph> g);
ImplicitGraph diameterSpannerGraph(std::shared_ptr<const DiameterSpanner> g);
ImplicitGraph additiveSpannerGraph(std::shared_ptr<const AdditiveSpanner> g);

// Canonical partner one layer up: flips the leftmost unpaired 0 under the
// bracket pairing (1 opens, 0 closes, each 0 pairs with the nearest unpaired
// 1 on its left); with no unpaired 0, flips the lowest 0 coordinate.
Vertex layerChainUp(const Vertex& v);
// Partner one layer down: flips the rightmost unpaired 1, falling back to
// the lowest 1 coordinate.
Vertex layerChainDown(const Vertex& v);

// Union over consecutive layer pairs (k, k+1) of one partner edge per vertex
// of the larger layer; from the middle pair up (ties included) the lower
// layer is the covered one. Edge count is always
// sum_k max(C(n,k), C(n,k+1)) = 2^n + C(n, floor(n/2)) - 2.
ImplicitGraph layerMatchingGraph(uint32_t n);

// Fixtures for negative tests.
// Hypercube minus one direction of a single edge; symmetric scans must flag it.
ImplicitGraph brokenSymmetryFixture(uint32_t n);
// All vertices hang off the all-zeros center; minimum degree is exactly 1.
ImplicitGraph starFixture(uint32_t n);
// The Gray-code Hamiltonian path; 2^n - 1 edges, diameter 2^n - 1.
ImplicitGraph hamiltonianPathFixture(uint32_t n);

}  // namespace cubespan
