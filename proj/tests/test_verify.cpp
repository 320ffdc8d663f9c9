#include <random>
#include <vector>

#include "cubespan/report_io.hpp"
#include "cubespan/verify.hpp"
#include "doctest.h"

using namespace cubespan;

TEST_SUITE("verify") {

TEST_CASE("random vertices are deterministic per seed") {
  std::mt19937_64 a(12345), b(12345), c(54321);
  bool anyDiff = false;
  for (int it = 0; it < 50; ++it) {
    Vertex va = randomVertex(70, a);
    Vertex vb = randomVertex(70, b);
    CHECK(va == vb);
    CHECK(va.dim() == 70);
    if (randomVertex(70, c) != va) anyDiff = true;
  }
  CHECK(anyDiff);
}

TEST_CASE("bfs distances on the hypercube equal hamming distances") {
  ImplicitGraph g = hypercubeGraph(6);
  std::mt19937_64 rng(5);
  for (int src = 0; src < 4; ++src) {
    Vertex v = randomVertex(6, rng);
    std::vector<int32_t> dist = bfsDistances(g, v);
    REQUIRE(dist.size() == 64);
    for (uint64_t i = 0; i < 64; ++i)
      CHECK(dist[i] == static_cast<int32_t>(
                           hammingDistance(v, Vertex::fromIndex(6, i))));
  }
}

TEST_CASE("bfs distances are symmetric between endpoints") {
  ImplicitGraph g = layerMatchingGraph(7);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 10; ++it) {
    Vertex u = randomVertex(7, rng);
    Vertex v = randomVertex(7, rng);
    std::vector<int32_t> du = bfsDistances(g, u);
    std::vector<int32_t> dv = bfsDistances(g, v);
    CHECK(du[v.toIndex()] == dv[u.toIndex()]);
  }
}

TEST_CASE("bfs refuses dimensions beyond the budget") {
  Budgets tight;
  tight.materializeMax = 4;
  ImplicitGraph g = hypercubeGraph(5);
  CHECK_THROWS_AS(bfsDistances(g, Vertex::zeros(5), tight), CapacityError);
}

TEST_CASE("exhaustive diameter of the hypercube and the long path") {
  DiameterResult qr = diameterExhaustive(hypercubeGraph(5));
  CHECK(qr.connected);
  CHECK(qr.diameter == 5);

  DiameterResult pr = diameterExhaustive(hamiltonianPathFixture(5));
  CHECK(pr.connected);
  CHECK(pr.diameter == 31);

  DiameterResult sr = diameterExhaustive(starFixture(4));
  CHECK(sr.connected);
  CHECK(sr.diameter == 2);
}

TEST_CASE("diameter detects disconnection") {
  EdgeList list;
  list.n = 3;
  list.edges.push_back({Vertex::fromBits("000"), Vertex::fromBits("100")});
  DiameterResult r = diameterExhaustive(edgeListGraph(list, "split"));
  CHECK_FALSE(r.connected);
}

TEST_CASE("double sweep lower bound never exceeds the true diameter") {
  ImplicitGraph g = layerMatchingGraph(8);
  DiameterResult exact = diameterExhaustive(g);
  REQUIRE(exact.connected);
  uint32_t floor = diameterLowerBound(g, 4, 99);
  CHECK(floor <= exact.diameter);
  CHECK(diameterLowerBound(hypercubeGraph(8), 2, 7) == 8);
}

TEST_CASE("degree scans cover both modes") {
  ImplicitGraph g = hypercubeGraph(5);
  DegreeReport ex = degreeScan(g, ScanMode::Exhaustive, 0, 0);
  CHECK(ex.exhaustive);
  CHECK(ex.scanned == 32);
  CHECK(ex.minDegree == 5);
  CHECK(ex.maxDegree == 5);

  DegreeReport sam = degreeScan(g, ScanMode::Sampled, 100, 42);
  CHECK_FALSE(sam.exhaustive);
  CHECK(sam.scanned == 100);
  CHECK(sam.minDegree == 5);
  CHECK(sam.maxDegree == 5);

  DegreeReport star = degreeScan(starFixture(4), ScanMode::Exhaustive, 0, 0);
  CHECK(star.minDegree == 1);
  CHECK(star.maxDegree == 15);
}

TEST_CASE("symmetry scan flags the broken fixture with a witness") {
  SymmetryReport clean = symmetryCheck(hypercubeGraph(6), ScanMode::Exhaustive, 0, 0);
  CHECK(clean.violations == 0);
  CHECK(clean.exhaustive);
  CHECK(clean.scanned == 64);

  SymmetryReport broken =
      symmetryCheck(brokenSymmetryFixture(5), ScanMode::Exhaustive, 0, 0);
  CHECK(broken.violations == 1);
  REQUIRE(broken.examples.size() == 1);
  CHECK(broken.examples[0].first == Vertex::fromBits("10000"));
  CHECK(broken.examples[0].second == Vertex::fromBits("00000"));
}

TEST_CASE("stretch of the full hypercube is zero") {
  StretchReport r = stretchScan(hypercubeGraph(7), 6, 20, 11);
  CHECK(r.pairs == 120);
  CHECK(r.unreachable == 0);
  CHECK(r.maxStretch == 0);
  CHECK(r.totalStretch == 0);
  CHECK(r.allEven);
}

TEST_CASE("stretch of the long path is positive and even") {
  StretchReport r = stretchScan(hamiltonianPathFixture(4), 4, 10, 13);
  CHECK(r.maxStretch > 0);
  CHECK(r.allEven);
  CHECK(r.unreachable == 0);
}

TEST_CASE("path validation accepts greedy hypercube walks") {
  ImplicitGraph g = hypercubeGraph(6);
  Vertex u = Vertex::fromBits("010101"), v = Vertex::fromBits("110010");
  PathCheck pc = validatePath(g, greedyPath(u, v), u, v);
  CHECK(pc.ok);
}

TEST_CASE("path validation localizes each failure") {
  ImplicitGraph g = hypercubeGraph(4);
  Vertex a = Vertex::fromBits("0000"), b = Vertex::fromBits("1100");

  PathCheck empty = validatePath(g, Path{}, a, b);
  CHECK_FALSE(empty.ok);
  CHECK(empty.reason == "empty path");

  Path wrongStart{{Vertex::fromBits("0001"), Vertex::fromBits("1001")}};
  PathCheck ws = validatePath(g, wrongStart, a, b);
  CHECK_FALSE(ws.ok);
  CHECK(ws.badIndex == 0);
  CHECK(ws.reason == "path does not start at the source");

  Path jump{{a, b}};
  PathCheck jp = validatePath(g, jump, a, b);
  CHECK_FALSE(jp.ok);
  CHECK(jp.badIndex == 0);
  CHECK(jp.reason == "step is not a single coordinate flip");

  Path wrongEnd{{a, Vertex::fromBits("1000")}};
  PathCheck we = validatePath(g, wrongEnd, a, b);
  CHECK_FALSE(we.ok);
  CHECK(we.badIndex == 1);
  CHECK(we.reason == "path does not end at the target");

  // a unit step that is not an edge of the graph at hand
  ImplicitGraph path = hamiltonianPathFixture(4);
  Vertex far = Vertex::fromBits("0010");
  Path offGraph{{a, far}};
  PathCheck og = validatePath(path, offGraph, a, far);
  CHECK_FALSE(og.ok);
  CHECK(og.reason == "step is not an edge of the graph");
}

TEST_CASE("minimum degree and edge counts") {
  CHECK(minDegreeCheck(hypercubeGraph(5)) == 5);
  CHECK(minDegreeCheck(starFixture(4)) == 1);
  CHECK(edgeCount(hypercubeGraph(5)) == 80);
  CHECK(edgeCount(hamiltonianPathFixture(4)) == 15);
  CHECK_THROWS_AS(edgeCount(brokenSymmetryFixture(4)), Error);
}

TEST_CASE("edge bound values print exact fractions") {
  BoundValue ten = propositionBound(10);
  CHECK(ten.toString() == "1074 + 3/20");
  CHECK(ten.ceil() == 1075);

  BoundValue one = propositionBound(1);
  CHECK(one.whole == 1);
  CHECK(one.remNum == 1);
  CHECK(one.remDen == 2);

  BoundValue three = propositionBound(3);
  // 8 + 7/6 - 1 = 8 + 1/6
  CHECK(three.whole == 8);
  CHECK(three.remNum == 1);
  CHECK(three.remDen == 6);
  CHECK(three.ceil() == 9);
}

TEST_CASE("edge bound holds with equality patterns on small hypercubes") {
  for (uint32_t n = 2; n <= 8; ++n) {
    BoundValue b = propositionBound(n);
    uint64_t edges = edgeCount(hypercubeGraph(n));
    CHECK(edges >= b.ceil());
    CHECK(minDegreeCheck(hypercubeGraph(n)) >= 2);
  }
}

TEST_CASE("edge bound rejects dimensions past the integer range") {
  CHECK(propositionBound(62).whole > 0);
  CHECK_THROWS_AS(propositionBound(63), Error);
  CHECK_THROWS_AS(propositionBound(0), Error);
}

}  // TEST_SUITE
