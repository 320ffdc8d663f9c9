#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubespan/additive_spanner.hpp"
#include "cubespan/antipodal.hpp"
#include "cubespan/diameter_spanner.hpp"
#include "cubespan/implicit_graph.hpp"
#include "cubespan/report_io.hpp"
#include "cubespan/verify.hpp"

namespace {

using namespace cubespan;

void emitError(const char* kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
}

uint32_t envBudget(const char* name, uint32_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end || v == 0 || v > 63) return fallback;
  return static_cast<uint32_t>(v);
}

struct RunConfig {
  std::string construction;
  uint32_t n = 0;
  uint32_t k = 1;
  uint32_t q = 0;
  std::vector<uint32_t> blocks;
  uint32_t s = 1;
  uint32_t g = 1;
  bool usePaperParams = false;
  std::string scheduleFile;
  uint32_t tau = 100;
  bool force = false;
  uint64_t seed = 1;
  uint64_t samples = 10000;
  uint32_t stretchSources = 20;
  uint32_t stretchTargets = 100;
  Budgets budgets;
  std::string out;
  std::string suites = "auto";
  std::string src, dst;
};

SpannerParams spannerParamsFrom(const RunConfig& cfg) {
  if (cfg.usePaperParams) {
    PaperParamsResult res = paperParams(cfg.n, cfg.k);
    if (!res.ok()) throw ParameterError(res.violations);
    return *res.params;
  }
  SpannerParams p;
  p.n = cfg.n;
  p.k = cfg.k;
  if (cfg.k == 0) return p;
  p.q = cfg.q;
  p.blockSizes = cfg.blocks;
  p.s = cfg.s;
  p.g = cfg.g;
  p.source = SpannerParams::Source::Override;
  return p;
}

struct Built {
  ImplicitGraph graph;
  std::shared_ptr<const AntipodalCycleGraph> antipodal;
  std::shared_ptr<const DiameterSpanner> diam;
  std::shared_ptr<const AdditiveSpanner> spanner;
};

Built buildConstruction(const RunConfig& cfg) {
  Built b;
  if (cfg.construction == "qn") {
    b.graph = hypercubeGraph(cfg.n);
  } else if (cfg.construction == "antipodal") {
    b.antipodal = std::make_shared<const AntipodalCycleGraph>(cfg.n);
    b.graph = antipodalGraph(b.antipodal);
  } else if (cfg.construction == "diam") {
    b.diam = std::make_shared<const DiameterSpanner>(
        DiameterSpanner::build(cfg.n, cfg.tau, cfg.force));
    b.graph = diameterSpannerGraph(b.diam);
  } else if (cfg.construction == "addspanner") {
    ParamSchedule schedule;
    if (!cfg.scheduleFile.empty()) {
      std::ifstream f(cfg.scheduleFile, std::ios::binary);
      if (!f)
        throw ParameterError({"cannot read schedule file " + cfg.scheduleFile});
      std::ostringstream text;
      text << f.rdbuf();
      schedule = parseParamSchedule(text.str());
    }
    b.spanner = std::make_shared<const AdditiveSpanner>(
        AdditiveSpanner::build(spannerParamsFrom(cfg), schedule));
    b.graph = additiveSpannerGraph(b.spanner);
  } else if (cfg.construction == "layermatch") {
    b.graph = layerMatchingGraph(cfg.n);
  } else if (cfg.construction == "brokensym") {
    b.graph = brokenSymmetryFixture(cfg.n);
  } else {
    throw ParameterError({"unknown construction '" + cfg.construction + "'"});
  }
  return b;
}

Vertex parseVertex(const std::string& text, uint32_t n) {
  Vertex v = text.rfind("0x", 0) == 0 ? Vertex::fromHex(text, n)
                                      : Vertex::fromBits(text);
  if (v.dim() != n)
    throw ParseError("vertex '" + text + "' does not have dimension " +
                     std::to_string(n));
  return v;
}

std::string vertexCountLabel(uint32_t n) {
  if (n <= 63) return std::to_string(uint64_t{1} << n);
  return "2^" + std::to_string(n);
}

int cmdBuild(const RunConfig& cfg) {
  Built b = buildConstruction(cfg);
  if (cfg.n > cfg.budgets.materializeMax || cfg.n > 63) {
    if (!cfg.out.empty())
      throw CapacityError("edge list export exceeds the materialization budget");
    // oracle-only summary with sampled degree
    DegreeReport deg =
        degreeScan(b.graph, ScanMode::Sampled, cfg.samples, cfg.seed, cfg.budgets);
    std::cout << "construction " << b.graph.id << "\n"
              << "vertices " << vertexCountLabel(cfg.n) << "\n"
              << "degreeSamples " << deg.scanned << "\n"
              << "maxDegreeSeen " << deg.maxDegree << "\n";
    return 0;
  }
  std::ostringstream list;
  writeEdgeList(list, b.graph, cfg.budgets);
  uint64_t edges = edgeCount(b.graph, cfg.budgets);
  DegreeReport deg = degreeScan(b.graph, ScanMode::Exhaustive, 0, 0, cfg.budgets);
  if (cfg.out.empty()) {
    std::cout << list.str();
    return 0;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ParameterError({"cannot open output file " + cfg.out});
  f << list.str();
  std::cout << "construction " << b.graph.id << "\n"
            << "vertices " << vertexCountLabel(cfg.n) << "\n"
            << "edges " << edges << "\n"
            << "maxDegree " << deg.maxDegree << "\n";
  return 0;
}

int cmdRoute(const RunConfig& cfg) {
  Built b = buildConstruction(cfg);
  Vertex src = parseVertex(cfg.src, cfg.n);
  Vertex dst = parseVertex(cfg.dst, cfg.n);
  Path path;
  bool withFallback = false;
  uint32_t fallbackRounds = 0;
  if (cfg.construction == "diam") {
    path = b.diam->route(src, dst);
  } else if (cfg.construction == "addspanner") {
    RouteReport r = b.spanner->route(src, dst);
    path = std::move(r.path);
    fallbackRounds = r.fallbackRounds;
    withFallback = true;
  } else if (cfg.construction == "qn") {
    path = greedyPath(src, dst);
  } else if (cfg.construction == "antipodal") {
    if (dst != antipode(src))
      throw ParameterError({"antipodal walks run between antipodal vertices"});
    path = b.antipodal->antipodalWalk(src);
  } else {
    throw ParameterError(
        {"construction '" + cfg.construction + "' has no router"});
  }
  PathCheck pc = validatePath(b.graph, path, src, dst);
  if (!pc.ok) {
    emitError("violation", "router produced an invalid path: " + pc.reason +
                               " at index " + std::to_string(pc.badIndex));
    return 1;
  }
  std::ostringstream osb;
  for (const Vertex& v : path.vertices) osb << v.toString() << "\n";
  osb << "length " << path.length() << "\n"
      << "hamming " << hammingDistance(src, dst) << "\n"
      << "slack " << path.length() - hammingDistance(src, dst) << "\n"
      << "distinctSums " << distinctCoordinateSums(path) << "\n";
  if (withFallback) osb << "fallbackRounds " << fallbackRounds << "\n";
  std::cout << osb.str();
  return 0;
}

std::set<std::string> resolveSuites(const RunConfig& cfg, const std::string& id) {
  std::set<std::string> suites;
  std::string_view spec = cfg.suites;
  bool inBudget = cfg.n <= cfg.budgets.materializeMax && cfg.n <= 63;
  bool diameterInBudget = inBudget && cfg.n <= cfg.budgets.diameterMax;
  if (spec == "auto") {
    suites.insert("degree");
    suites.insert("symmetry");
    if (id == "qn" || id == "diam") {
      if (diameterInBudget) {
        suites.insert("diameter");
        if (cfg.n >= 2) suites.insert("audit");
      }
    } else if (id == "addspanner") {
      if (inBudget) suites.insert("stretch");
    } else if (id == "layermatch") {
      if (inBudget) {
        suites.insert("edges");
        suites.insert("mindegree");
      }
      if (diameterInBudget) suites.insert("diameter");
    }
    return suites;
  }
  if (spec == "all")
    return {"degree", "symmetry", "edges", "mindegree", "diameter", "stretch",
            "audit"};
  size_t at = 0;
  while (at < spec.size()) {
    size_t comma = spec.find(',', at);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string token(spec.substr(at, comma - at));
    static const std::set<std::string> known = {
        "degree", "symmetry", "edges", "mindegree",
        "diameter", "stretch", "audit"};
    if (!known.count(token))
      throw ParameterError({"unknown suite '" + token + "'"});
    suites.insert(token);
    at = comma + 1;
  }
  return suites;
}

int cmdVerify(const RunConfig& cfg) {
  Built b = buildConstruction(cfg);
  const std::string& id = b.graph.id;
  std::set<std::string> suites = resolveSuites(cfg, id);
  bool inBudget = cfg.n <= cfg.budgets.materializeMax && cfg.n <= 63;
  ScanMode mode = inBudget ? ScanMode::Exhaustive : ScanMode::Sampled;

  VerificationReport rep;
  rep.graphId = id;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  char buf[160];

  if (suites.count("degree")) {
    rep.degree = degreeScan(b.graph, mode, cfg.samples, cfg.seed, cfg.budgets);
    std::optional<uint32_t> cap;
    if (id == "antipodal") cap = 10;
    if (id == "diam") cap = 120;
    if (cap && rep.degree->maxDegree > *cap) {
      std::snprintf(buf, sizeof buf, "max degree <= %u fails (found %u)", *cap,
                    rep.degree->maxDegree);
      rep.violations.push_back(buf);
    }
    if (id == "qn" &&
        (rep.degree->minDegree != cfg.n || rep.degree->maxDegree != cfg.n)) {
      std::snprintf(buf, sizeof buf, "degree = n fails (min %u, max %u)",
                    rep.degree->minDegree, rep.degree->maxDegree);
      rep.violations.push_back(buf);
    }
  }
  if (suites.count("symmetry")) {
    rep.symmetry =
        symmetryCheck(b.graph, mode, cfg.samples, cfg.seed, cfg.budgets);
    if (rep.symmetry->violations > 0) {
      std::snprintf(buf, sizeof buf,
                    "adjacency symmetry fails (%llu missing back edges)",
                    (unsigned long long)rep.symmetry->violations);
      rep.violations.push_back(buf);
    }
  }
  if (suites.count("edges")) {
    rep.edges = edgeCount(b.graph, cfg.budgets);
    if (id == "layermatch") {
      uint64_t mid = 1;
      for (uint32_t i = 0; i < cfg.n / 2; ++i) mid = mid * (cfg.n - i) / (i + 1);
      uint64_t want = (uint64_t{1} << cfg.n) + mid - 2;
      if (*rep.edges != want) {
        std::snprintf(buf, sizeof buf,
                      "edge count %llu differs from closed form %llu",
                      (unsigned long long)*rep.edges, (unsigned long long)want);
        rep.violations.push_back(buf);
      }
    }
  }
  if (suites.count("mindegree")) rep.minDegree = minDegreeCheck(b.graph, cfg.budgets);
  if (suites.count("diameter")) {
    rep.diameter = diameterExhaustive(b.graph, cfg.budgets);
    if ((id == "qn" || id == "diam")) {
      if (!rep.diameter->connected) {
        rep.violations.push_back("graph is disconnected");
      } else if (rep.diameter->diameter != cfg.n) {
        std::snprintf(buf, sizeof buf, "diameter = n fails (measured %u)",
                      rep.diameter->diameter);
        rep.violations.push_back(buf);
      }
    }
  }
  if (suites.count("stretch")) {
    rep.stretch = stretchScan(b.graph, cfg.stretchSources, cfg.stretchTargets,
                              cfg.seed, cfg.budgets);
    if (!rep.stretch->allEven)
      rep.violations.push_back("stretch parity fails (odd stretch seen)");
    if (rep.stretch->unreachable > 0) {
      std::snprintf(buf, sizeof buf, "%llu sampled pairs unreachable",
                    (unsigned long long)rep.stretch->unreachable);
      rep.violations.push_back(buf);
    }
  }
  if (suites.count("audit") && cfg.n >= 2) {
    if (!rep.diameter) rep.diameter = diameterExhaustive(b.graph, cfg.budgets);
    if (rep.diameter->connected && rep.diameter->diameter == cfg.n) {
      if (!rep.edges) rep.edges = edgeCount(b.graph, cfg.budgets);
      if (!rep.minDegree) rep.minDegree = minDegreeCheck(b.graph, cfg.budgets);
      BoundValue bound = propositionBound(cfg.n);
      if (*rep.edges < bound.ceil()) {
        std::snprintf(buf, sizeof buf,
                      "diameter-n graph has %llu edges, below the bound %s",
                      (unsigned long long)*rep.edges, bound.toString().c_str());
        rep.violations.push_back(buf);
      }
      if (*rep.minDegree < 2)
        rep.violations.push_back("diameter-n graph has a vertex of degree < 2");
    }
  }

  std::string doc = reportToJson(rep);
  if (cfg.out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ParameterError({"cannot open output file " + cfg.out});
    f << doc;
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.budgets.materializeMax = envBudget("CUBESPAN_MATERIALIZE_MAX", 24);
  cfg.budgets.diameterMax = envBudget("CUBESPAN_DIAMETER_MAX", 13);

  CLI::App app{
      "bounded-degree hypercube subgraphs: builders, routers, verification"};
  app.require_subcommand(1);

  auto addCommon = [&cfg](CLI::App* cmd) {
    cmd->add_option("--construction", cfg.construction,
                    "qn | antipodal | diam | addspanner | layermatch | brokensym")
        ->required();
    cmd->add_option("--n", cfg.n, "ambient dimension")->required();
    cmd->add_option("--k", cfg.k, "recursion depth (addspanner)");
    cmd->add_option("--q", cfg.q, "coded region length (addspanner)");
    cmd->add_option("--blocks", cfg.blocks,
                    "comma-separated block sizes (addspanner)")
        ->delimiter(',');
    cmd->add_option("--s", cfg.s, "blocks per routing step (addspanner)");
    cmd->add_option("--g", cfg.g, "residue group count (addspanner)");
    cmd->add_flag("--paper", cfg.usePaperParams,
                  "derive addspanner parameters from the published formulas");
    cmd->add_option("--schedule", cfg.scheduleFile,
                    "JSON parameter schedule for deeper recursion levels");
    cmd->add_option("--tau", cfg.tau, "threshold for the trivial regime (diam)");
    cmd->add_flag("--force", cfg.force, "structured construction below tau (diam)");
    cmd->add_option("--seed", cfg.seed, "sampling seed");
    cmd->add_option("--samples", cfg.samples, "sample count for sampled scans");
    cmd->add_option("--materialize-max", cfg.budgets.materializeMax,
                    "max n for index-addressed sweeps");
    cmd->add_option("--diameter-max", cfg.budgets.diameterMax,
                    "max n for exhaustive diameter");
  };

  CLI::App* build = app.add_subcommand("build", "export an edge list or summary");
  addCommon(build);
  build->add_option("--out", cfg.out, "edge list file (stdout without it)");

  CLI::App* route = app.add_subcommand("route", "run a constructive router");
  addCommon(route);
  route->add_option("--src", cfg.src, "source vertex (bits or 0x hex)")
      ->required();
  route->add_option("--dst", cfg.dst, "target vertex (bits or 0x hex)")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "measure and audit properties");
  addCommon(verify);
  verify->add_option("--out", cfg.out, "report file (stdout without it)");
  verify->add_option("--suites", cfg.suites,
                     "auto | all | comma list of degree,symmetry,edges,"
                     "mindegree,diameter,stretch,audit");
  verify->add_option("--stretch-sources", cfg.stretchSources,
                     "sources for the stretch scan");
  verify->add_option("--stretch-targets", cfg.stretchTargets,
                     "targets per source for the stretch scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emitError("config", e.what());
    return 2;
  }

  try {
    if (build->parsed()) return cmdBuild(cfg);
    if (route->parsed()) return cmdRoute(cfg);
    return cmdVerify(cfg);
  } catch (const CapacityError& e) {
    emitError("capacity", e.what());
    return 3;
  } catch (const ParameterError& e) {
    emitError("config", e.what());
    return 2;
  } catch (const ParseError& e) {
    emitError("config", e.what());
    return 2;
  } catch (const DimensionError& e) {
    emitError("config", e.what());
    return 2;
  } catch (const Error& e) {
    emitError("violation", e.what());
    return 1;
  } catch (const std::exception& e) {
    emitError("violation", e.what());
    return 1;
  }
}
