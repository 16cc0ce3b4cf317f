#include <benchmark/benchmark.h>

#include "heunlie/heunlie.hpp"

namespace {

using namespace heunlie;

CRat q(long n, long d) { return CRat::fraction(n, d); }

HeunParams es_params(int n) {
  // alpha + beta = 1/2 - 3n/2 and the Fuchs constraint
  const CRat alpha = q(1, 3), beta = q(1, 2) - q(3 * n, 2) - alpha, gamma(2), delta = q(1, 5);
  return HeunParams(q(7, 3), q(1, 2), alpha, beta, gamma, delta, alpha + beta + CRat(1) - gamma - delta);
}

DiffOp dense_op(int order, int degree) {
  std::vector<Polynomial> terms;
  for (int i = 0; i <= order; ++i) {
    std::vector<CRat> c;
    for (int k = 0; k <= degree; ++k) c.push_back(CRat(Rational(k + 1, i + 2), Rational(i - k, 3)));
    terms.emplace_back(std::move(c));
  }
  return DiffOp(std::move(terms));
}

void BM_OpCompose(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const DiffOp a = dense_op(order, 4), b = dense_op(order, 4);
  for (auto _ : state) benchmark::DoNotOptimize(op_compose(a, b));
}
BENCHMARK(BM_OpCompose)->Arg(1)->Arg(2)->Arg(4);

void BM_UeaExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HeunParams p = es_params(n);
  const UEAExpr e = uea_heun(Spin(n), p);
  for (auto _ : state) benchmark::DoNotOptimize(uea_expand(e, Spin(n)));
}
BENCHMARK(BM_UeaExpand)->Arg(0)->Arg(4)->Arg(16);

void BM_ForwardSolve(benchmark::State& state) {
  RecurrenceSpec s;
  s.l = 2;
  s.a = q(7, 3);
  s.rho = q(1, 2);
  s.sigma = q(-2, 3);
  s.tau = q(5, 4);
  s.abProduct = q(3, 2);
  s.E = q(-1, 7);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(forward_solve(s, Branch::Real, CRat(1), CRat(0), K));
}
BENCHMARK(BM_ForwardSolve)->Arg(32)->Arg(128);

void BM_QesMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DiffOp L = es_operator(n, es_params(n));
  for (auto _ : state) benchmark::DoNotOptimize(qes_matrix(L, n));
}
BENCHMARK(BM_QesMatrix)->Arg(8)->Arg(32)->Arg(64);

void BM_EsSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HeunParams p = es_params(n);
  for (auto _ : state) benchmark::DoNotOptimize(es_spectrum(n, p, n));
}
BENCHMARK(BM_EsSpectrum)->Arg(8)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
