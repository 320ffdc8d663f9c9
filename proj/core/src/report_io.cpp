#include "cubespan/report_io.hpp"

#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cubespan {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json degreeJson(const DegreeReport& d) {
  ordered_json j;
  j["scanned"] = d.scanned;
  j["min"] = d.minDegree;
  j["max"] = d.maxDegree;
  j["exhaustive"] = d.exhaustive;
  return j;
}

ordered_json symmetryJson(const SymmetryReport& s) {
  ordered_json j;
  j["scanned"] = s.scanned;
  j["violations"] = s.violations;
  j["exhaustive"] = s.exhaustive;
  ordered_json ex = ordered_json::array();
  for (const auto& [v, u] : s.examples)
    ex.push_back({{"vertex", v.toString()}, {"missingFrom", u.toString()}});
  j["examples"] = std::move(ex);
  return j;
}

ordered_json stretchJson(const StretchReport& s) {
  ordered_json j;
  j["pairs"] = s.pairs;
  j["unreachable"] = s.unreachable;
  j["maxStretch"] = s.maxStretch;
  j["totalStretch"] = s.totalStretch;
  j["allEven"] = s.allEven;
  return j;
}

}  // namespace

std::string reportToJson(const VerificationReport& r) {
  ordered_json j;
  j["schemaVersion"] = 1;
  j["graph"] = r.graphId;
  j["n"] = r.n;
  j["seed"] = r.seed;
  if (r.degree) j["degree"] = degreeJson(*r.degree);
  if (r.symmetry) j["symmetry"] = symmetryJson(*r.symmetry);
  if (r.edges) j["edges"] = *r.edges;
  if (r.minDegree) j["minDegree"] = *r.minDegree;
  if (r.diameter) {
    ordered_json d;
    d["connected"] = r.diameter->connected;
    d["value"] = r.diameter->diameter;
    j["diameter"] = std::move(d);
  }
  if (r.diameterFloor) j["diameterFloor"] = *r.diameterFloor;
  if (r.stretch) j["stretch"] = stretchJson(*r.stretch);
  j["violations"] = r.violations;
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

void writeEdgeList(std::ostream& os, const ImplicitGraph& g,
                   const Budgets& budgets) {
  if (g.n > budgets.materializeMax || g.n > 63)
    throw CapacityError("edge list export exceeds the materialization budget");
  std::ostringstream body;
  uint64_t edges = 0;
  for (uint64_t counter = 0; counter < (uint64_t{1} << g.n); ++counter) {
    Vertex v(g.n);
    for (uint32_t c = 0; c < g.n; ++c)
      if ((counter >> (g.n - 1 - c)) & 1) v.setBit(c, true);
    for (const Vertex& nb : g.neighbors(v)) {
      if (!(v < nb)) continue;
      body << v.toString() << ' ' << nb.toString() << '\n';
      ++edges;
    }
  }
  os << "n " << g.n << " m " << edges << '\n' << body.str();
}

EdgeList readEdgeList(std::istream& is) {
  EdgeList list;
  std::string tag;
  uint64_t m = 0;
  if (!(is >> tag) || tag != "n" || !(is >> list.n))
    throw ParseError("edge list header must start with 'n <dim>'");
  if (!(is >> tag) || tag != "m" || !(is >> m))
    throw ParseError("edge list header must continue with 'm <edges>'");
  list.edges.reserve(m);
  std::string a, b;
  for (uint64_t i = 0; i < m; ++i) {
    if (!(is >> a >> b)) throw ParseError("edge list ends before the declared count");
    Vertex u = Vertex::fromBits(a);
    Vertex v = Vertex::fromBits(b);
    if (u.dim() != list.n || v.dim() != list.n)
      throw ParseError("edge endpoint does not match the header dimension");
    list.edges.emplace_back(std::move(u), std::move(v));
  }
  return list;
}

ImplicitGraph edgeListGraph(EdgeList list, std::string id) {
  auto adj = std::make_shared<std::map<Vertex, std::vector<Vertex>>>();
  for (const auto& [u, v] : list.edges) {
    (*adj)[u].push_back(v);
    (*adj)[v].push_back(u);
  }
  ImplicitGraph g;
  g.id = std::move(id);
  g.n = list.n;
  g.append = [adj](const Vertex& v, std::vector<Vertex>& out) {
    auto it = adj->find(v);
    if (it == adj->end()) return;
    out.insert(out.end(), it->second.begin(), it->second.end());
  };
  return g;
}

ParamSchedule parseParamSchedule(const std::string& jsonText) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(jsonText);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("schedule is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("schedule must be a JSON array");
  ParamSchedule schedule;
  for (const auto& entry : doc) {
    if (!entry.is_object()) throw ParseError("schedule entries must be objects");
    SpannerParams p;
    try {
      p.n = entry.at("n").get<uint32_t>();
      p.k = entry.at("k").get<uint32_t>();
      if (p.k > 0) {
        p.q = entry.at("q").get<uint32_t>();
        p.blockSizes = entry.at("blockSizes").get<std::vector<uint32_t>>();
        p.s = entry.at("s").get<uint32_t>();
        p.g = entry.value("g", 1u);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad schedule entry: ") + e.what());
    }
    p.source = SpannerParams::Source::Override;
    schedule.add(p);
  }
  return schedule;
}

}  // namespace cubespan
