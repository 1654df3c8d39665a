#include <benchmark/benchmark.h>

#include "unitlat/bundle.hpp"
#include "unitlat/enumerate.hpp"
#include "unitlat/independence.hpp"
#include "unitlat/log_lattice.hpp"
#include "unitlat/multipoly.hpp"
#include "unitlat/relation.hpp"
#include "unitlat/sym_forms.hpp"

using namespace unitlat;

namespace {

FieldBundle bundle(const char* name) {
  return FieldBundle::load(std::string(UNITLAT_DATA_DIR) + "/bundles/" + name + ".json");
}

}  // namespace

static void BM_RegulatorSeptic(benchmark::State& state) {
  FieldBundle b = bundle("septic1");
  Prec prec = static_cast<Prec>(state.range(0));
  for (auto _ : state) {
    NumberField k = b.field(prec);
    benchmark::DoNotOptimize(regulator(log_lattice(k, b.unit_elements(k), prec)));
  }
}
BENCHMARK(BM_RegulatorSeptic)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_ShortestVectorsSeptic(benchmark::State& state) {
  FieldBundle b = bundle("septic2");
  NumberField k = b.field(256);
  LogLattice l = log_lattice(k, b.unit_elements(k), 256);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_vectors(l.gram, 100));
}
BENCHMARK(BM_ShortestVectorsSeptic)->Unit(benchmark::kMillisecond);

static void BM_PairReportSeptics(benchmark::State& state) {
  FieldBundle a = bundle("septic1"), b = bundle("septic2");
  for (auto _ : state) benchmark::DoNotOptimize(pair_report(a, b, 256));
}
BENCHMARK(BM_PairReportSeptics)->Unit(benchmark::kMillisecond);

// log of the first n primes: no relation, so the whole reduction runs
static void BM_IntegerRelationLogPrimes(benchmark::State& state) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  size_t n = static_cast<size_t>(state.range(0));
  Prec prec = 64 * static_cast<Prec>(n);
  BallVector x;
  for (size_t i = 0; i < n; ++i) x.push_back(log(Ball(primes[i], prec)));
  for (auto _ : state) benchmark::DoNotOptimize(integer_relation(x, Integer(1000), prec));
}
BENCHMARK(BM_IntegerRelationLogPrimes)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_SignOrbitProduct(benchmark::State& state) {
  RationalVector c;
  for (long i = 0; i < state.range(0); ++i) c.push_back(Rational(i + 1, 2 * i + 3));
  for (auto _ : state) benchmark::DoNotOptimize(desquare(sign_orbit_product(c)));
}
BENCHMARK(BM_SignOrbitProduct)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_GassmannOrder168(benchmark::State& state) {
  FieldBundle b = bundle("septic1");
  const auto& c = *b.galois_closure;
  for (auto _ : state) {
    PermGroup g = c.group();
    benchmark::DoNotOptimize(gassmann_equivalent(g, c.subgroup(g, "point_stabilizer"), c.subgroup(g, "line_stabilizer")));
  }
}
BENCHMARK(BM_GassmannOrder168)->Unit(benchmark::kMillisecond);

static void BM_SymGSpace(benchmark::State& state) {
  PermGroup g = PermGroup::from_cycles(static_cast<int>(state.range(0)), {"(1,2)", "(1,2,3,4)"});
  for (auto _ : state) benchmark::DoNotOptimize(sym_g_space(g));
}
BENCHMARK(BM_SymGSpace)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
