#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cubespan/additive_spanner.hpp"
#include "cubespan/antipodal.hpp"
#include "cubespan/codes.hpp"
#include "cubespan/diameter_spanner.hpp"
#include "cubespan/verify.hpp"

using namespace cubespan;

namespace {

void BM_CodeMembership(benchmark::State& state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  NearlyPerfectCode code(n);
  std::mt19937_64 rng(1);
  std::vector<Vertex> probes;
  for (int i = 0; i < 256; ++i) probes.push_back(randomVertex(n, rng));
  size_t at = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(code.member(probes[at & 255]));
    ++at;
  }
}
BENCHMARK(BM_CodeMembership)->Arg(15)->Arg(127)->Arg(1023);

void BM_AntipodalNeighbors(benchmark::State& state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  AntipodalCycleGraph g(n);
  std::mt19937_64 rng(2);
  std::vector<Vertex> probes;
  for (int i = 0; i < 256; ++i) probes.push_back(randomVertex(n, rng));
  std::vector<Vertex> out;
  size_t at = 0;
  for (auto _ : state) {
    out.clear();
    g.appendNeighbors(probes[at & 255], out);
    benchmark::DoNotOptimize(out.data());
    ++at;
  }
}
BENCHMARK(BM_AntipodalNeighbors)->Arg(16)->Arg(128)->Arg(1024);

void BM_AntipodalWalk(benchmark::State& state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  AntipodalCycleGraph g(n);
  std::mt19937_64 rng(3);
  std::vector<Vertex> probes;
  for (int i = 0; i < 64; ++i) probes.push_back(randomVertex(n, rng));
  size_t at = 0;
  for (auto _ : state) {
    Path p = g.antipodalWalk(probes[at & 63]);
    benchmark::DoNotOptimize(p.vertices.data());
    ++at;
  }
}
BENCHMARK(BM_AntipodalWalk)->Arg(16)->Arg(128);

void BM_DiameterRoute(benchmark::State& state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  DiameterSpanner g = DiameterSpanner::build(n, 100, true);
  std::mt19937_64 rng(4);
  std::vector<Vertex> src, dst;
  for (int i = 0; i < 64; ++i) {
    src.push_back(randomVertex(n, rng));
    dst.push_back(randomVertex(n, rng));
  }
  size_t at = 0;
  for (auto _ : state) {
    Path p = g.route(src[at & 63], dst[at & 63]);
    benchmark::DoNotOptimize(p.vertices.data());
    ++at;
  }
}
BENCHMARK(BM_DiameterRoute)->Arg(64)->Arg(512);

void BM_DiameterNeighbors(benchmark::State& state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  DiameterSpanner g = DiameterSpanner::build(n, 100, true);
  std::mt19937_64 rng(5);
  std::vector<Vertex> probes;
  for (int i = 0; i < 256; ++i) probes.push_back(randomVertex(n, rng));
  std::vector<Vertex> out;
  size_t at = 0;
  for (auto _ : state) {
    out.clear();
    g.appendNeighbors(probes[at & 255], out);
    benchmark::DoNotOptimize(out.data());
    ++at;
  }
}
BENCHMARK(BM_DiameterNeighbors)->Arg(64)->Arg(512);

void BM_AdditiveRoute(benchmark::State& state) {
  SpannerParams p;
  p.n = 19;
  p.k = 1;
  p.q = 7;
  p.blockSizes = {3, 3, 3, 3};
  p.s = 2;
  p.g = 2;
  AdditiveSpanner g = AdditiveSpanner::build(p);
  std::mt19937_64 rng(6);
  std::vector<Vertex> src, dst;
  for (int i = 0; i < 64; ++i) {
    src.push_back(randomVertex(19, rng));
    dst.push_back(randomVertex(19, rng));
  }
  size_t at = 0;
  for (auto _ : state) {
    RouteReport r = g.route(src[at & 63], dst[at & 63]);
    benchmark::DoNotOptimize(r.path.vertices.data());
    ++at;
  }
}
BENCHMARK(BM_AdditiveRoute);

}  // namespace

BENCHMARK_MAIN();
