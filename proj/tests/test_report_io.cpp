#include <sstream>
#include <string>
#include <vector>

#include "cubespan/report_io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cubespan;

TEST_SUITE("report_io") {

TEST_CASE("edge list of the two dimensional hypercube, byte for byte") {
  std::ostringstream os;
  writeEdgeList(os, hypercubeGraph(2));
  CHECK(os.str() == "n 2 m 4\n00 01\n00 10\n01 11\n10 11\n");
}

TEST_CASE("edge list writing is deterministic") {
  std::ostringstream a, b;
  writeEdgeList(a, layerMatchingGraph(5));
  writeEdgeList(b, layerMatchingGraph(5));
  CHECK(a.str() == b.str());
  CHECK(!a.str().empty());
}

TEST_CASE("edge list export refuses dimensions beyond the budget") {
  Budgets tight;
  tight.materializeMax = 3;
  std::ostringstream os;
  CHECK_THROWS_AS(writeEdgeList(os, hypercubeGraph(4), tight), CapacityError);
}

TEST_CASE("written lists read back into an equivalent oracle") {
  for (uint32_t n : {3u, 5u}) {
    ImplicitGraph original = hypercubeGraph(n);
    std::ostringstream os;
    writeEdgeList(os, original);
    std::istringstream is(os.str());
    EdgeList list = readEdgeList(is);
    CHECK(list.n == n);
    CHECK(list.edges.size() == uint64_t{n} << (n - 1));
    ImplicitGraph back = edgeListGraph(list, "roundtrip");
    for (uint64_t i = 0; i < (uint64_t{1} << n); ++i) {
      Vertex v = Vertex::fromIndex(n, i);
      CHECK(back.neighbors(v) == original.neighbors(v));
    }
  }
}

TEST_CASE("reader rejects malformed inputs") {
  std::istringstream noHeader("x 3 m 1\n000 001\n");
  CHECK_THROWS_AS(readEdgeList(noHeader), ParseError);

  std::istringstream shortBody("n 3 m 2\n000 001\n");
  CHECK_THROWS_AS(readEdgeList(shortBody), ParseError);

  std::istringstream badVertex("n 3 m 1\n0x0 001\n");
  CHECK_THROWS_AS(readEdgeList(badVertex), ParseError);

  std::istringstream wrongDim("n 3 m 1\n0001 0010\n");
  CHECK_THROWS_AS(readEdgeList(wrongDim), ParseError);
}

TEST_CASE("reports serialize with a stable schema") {
  VerificationReport r;
  r.graphId = "qn";
  r.n = 4;
  r.seed = 7;
  DegreeReport deg;
  deg.scanned = 16;
  deg.minDegree = 4;
  deg.maxDegree = 4;
  deg.exhaustive = true;
  r.degree = deg;
  DiameterResult diam;
  diam.connected = true;
  diam.diameter = 4;
  r.diameter = diam;

  std::string text = reportToJson(r);
  CHECK(text == reportToJson(r));
  CHECK(text.back() == '\n');

  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("schemaVersion").get<int>() == 1);
  CHECK(doc.at("graph").get<std::string>() == "qn");
  CHECK(doc.at("n").get<int>() == 4);
  CHECK(doc.at("seed").get<int>() == 7);
  CHECK(doc.at("pass").get<bool>() == true);
  CHECK(doc.at("degree").at("max").get<int>() == 4);
  CHECK(doc.at("diameter").at("connected").get<bool>() == true);
  CHECK_FALSE(doc.contains("stretch"));

  r.violations.push_back("maxDegree 12 exceeds 10");
  nlohmann::json bad = nlohmann::json::parse(reportToJson(r));
  CHECK(bad.at("pass").get<bool>() == false);
  CHECK(bad.at("violations").size() == 1);
}

TEST_CASE("symmetry witnesses appear in the serialized report") {
  VerificationReport r;
  r.graphId = "brokensym";
  r.n = 5;
  SymmetryReport sym;
  sym.scanned = 32;
  sym.violations = 1;
  sym.exhaustive = true;
  sym.examples.push_back(
      {Vertex::fromBits("10000"), Vertex::fromBits("00000")});
  r.symmetry = sym;
  r.violations.push_back("asymmetric adjacency");

  nlohmann::json doc = nlohmann::json::parse(reportToJson(r));
  CHECK(doc.at("symmetry").at("examples").at(0).at("vertex") == "10000");
  CHECK(doc.at("symmetry").at("examples").at(0).at("missingFrom") == "00000");
}

TEST_CASE("schedules parse from json arrays") {
  std::string text = R"([
    {"n": 2, "k": 1, "q": 1, "blockSizes": [1], "s": 1, "g": 1},
    {"n": 6, "k": 0}
  ])";
  ParamSchedule schedule = parseParamSchedule(text);
  CHECK_FALSE(schedule.empty());
  auto inner = schedule.find(1, 2);
  REQUIRE(inner.has_value());
  CHECK(inner->q == 1);
  CHECK(inner->blockSizes == std::vector<uint32_t>{1});
  CHECK(inner->s == 1);
  CHECK(inner->g == 1);
  auto zero = schedule.find(0, 6);
  REQUIRE(zero.has_value());
  CHECK(zero->k == 0);
  CHECK_FALSE(schedule.find(1, 3).has_value());
}

TEST_CASE("schedule parsing rejects malformed documents") {
  CHECK_THROWS_AS(parseParamSchedule("{"), ParseError);
  CHECK_THROWS_AS(parseParamSchedule("{\"n\": 2}"), ParseError);
  CHECK_THROWS_AS(parseParamSchedule("[{\"k\": 1}]"), ParseError);
  CHECK_THROWS_AS(parseParamSchedule("[{\"n\": 5, \"k\": 1}]"), ParseError);
}

}  // TEST_SUITE
