// Microbenchmarks for the hot paths: point counting and group structure over
// finite fields, the two brute-force engines on staircase forms, the curve
// order search, the certificate prime scan, and the Galois cycle-type scan.

#include <benchmark/benchmark.h>

#include "abelcert/diagonal.hpp"
#include "abelcert/elliptic.hpp"
#include "abelcert/galois.hpp"
#include "abelcert/integer.hpp"
#include "abelcert/local.hpp"
#include "abelcert/poly.hpp"

using namespace abelcert;

namespace {

void BM_CountPoints(benchmark::State& state) {
  const uint64_t p = static_cast<uint64_t>(state.range(0));
  const Fq F(p, 1);
  const CurveModel E{0, 0, 0, 1, 1};  // y^2 = x^3 + x + 1
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_points(F, E));
  }
}
BENCHMARK(BM_CountPoints)->Arg(101)->Arg(1009)->Arg(10007);

void BM_GroupStructure(benchmark::State& state) {
  const uint64_t p = static_cast<uint64_t>(state.range(0));
  const Fq F(p, 1);
  const CurveModel E = reduce_curve(selmer_jacobian(), F);
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_structure(F, E));
  }
}
BENCHMARK(BM_GroupStructure)->Arg(101)->Arg(1009);

void BM_BruteForceExhaustive(benchmark::State& state) {
  const uint64_t p = static_cast<uint64_t>(state.range(0));
  const DiagonalForm form =
      build_theorem1_form(Integer(1), Integer(1), Integer(1), Integer(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_primitive(form, Integer(p), 3, BruteMode::Exhaustive));
  }
}
BENCHMARK(BM_BruteForceExhaustive)->Arg(5)->Arg(11)->Arg(23);

void BM_BruteForceCascade(benchmark::State& state) {
  const uint64_t p = static_cast<uint64_t>(state.range(0));
  const DiagonalForm form =
      build_theorem1_form(Integer(1), Integer(1), Integer(1), Integer(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_primitive(form, Integer(p), 3, BruteMode::Cascade));
  }
}
BENCHMARK(BM_BruteForceCascade)->Arg(5)->Arg(23)->Arg(101)->Arg(1009);

void BM_FindEll(benchmark::State& state) {
  const uint64_t q = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_ell(q));
  }
}
BENCHMARK(BM_FindEll)->Arg(8)->Arg(243)->Arg(9973);

void BM_SearchCurveWithOrder(benchmark::State& state) {
  const uint64_t q = static_cast<uint64_t>(state.range(0));
  const FindEllResult r = find_ell(q);
  const Fq F(q, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search_curve_with_order(F, [&](const Integer& N) { return N == r.N; }));
  }
}
BENCHMARK(BM_SearchCurveWithOrder)->Arg(101)->Arg(251);

void BM_CertificateScan(benchmark::State& state) {
  const DiagonalForm form = parse_diagonal_form("2x^3 + 4y^3 + 5z^3");
  const uint64_t p_max = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_primes_for_certificate(form, p_max));
  }
}
BENCHMARK(BM_CertificateScan)->Arg(100)->Arg(10000);

void BM_SnCertificate(benchmark::State& state) {
  const IntPoly f = parse_polynomial("x^5 - x - 1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sn_certificate(f, 500));
  }
}
BENCHMARK(BM_SnCertificate);

void BM_LocalSolveEscalating(benchmark::State& state) {
  const DiagonalForm selmer = parse_diagonal_form("3x^3 + 4y^3 + 5z^3");
  const uint64_t p = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_solve_escalating(selmer, Integer(p), 5));
  }
}
BENCHMARK(BM_LocalSolveEscalating)->Arg(3)->Arg(97);

}  // namespace

BENCHMARK_MAIN();
