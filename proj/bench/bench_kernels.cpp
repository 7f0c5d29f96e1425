// Serial vs OpenMP timings for the parallel kernels. Arg 0 = serial, 1 = parallel.

#include "gfree/io.hpp"

#include <benchmark/benchmark.h>

using namespace gfree;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

// Generic-looking coefficients 1..p with a few repeats.
DetInstance det(std::size_t m, std::size_t n, std::size_t t) {
  const auto A = CoeffDomain::integers();
  std::vector<std::vector<RingElem>> c(m, std::vector<RingElem>(n));
  long v = 1;
  for (auto& row : c)
    for (auto& x : row) {
      x = A.from_int(v);
      v = v % 7 + 2;
    }
  return make_instance(A, m, n, t, std::move(c));
}

void BM_build_minors(benchmark::State& s) {
  auto inst = det(4, 6, 3);
  for (auto _ : s) benchmark::DoNotOptimize(build_minors(inst, exec_of(s)));
}

void BM_check_groebner(benchmark::State& s) {
  // a certified basis, so every pair is reduced
  auto inst = det(3, 4, 2);
  auto G = buchberger(inst.space, build_minors(inst));
  for (auto _ : s) benchmark::DoNotOptimize(check_groebner(inst.space, G.gens, exec_of(s)));
}

void BM_buchberger(benchmark::State& s) {
  auto inst = det(3, 4, 2);
  auto minors = build_minors(inst);
  BuchbergerOptions o;
  o.exec = exec_of(s);
  o.certify = false;
  for (auto _ : s) benchmark::DoNotOptimize(buchberger(inst.space, minors, o));
}

void BM_fiber_compare(benchmark::State& s) {
  auto inst = det(2, 4, 2);
  auto minors = build_minors(inst);
  std::vector<Point> pts;
  for (long p : {11, 13, 17, 19, 23, 29, 31, 37}) pts.push_back(Point{p});
  Grading g{std::vector<std::int64_t>(inst.space.nvars(), 1), {0}};
  for (auto _ : s) benchmark::DoNotOptimize(fiber_compare(inst.space, minors, pts, 0, 4, g, exec_of(s)));
}

}  // namespace

BENCHMARK(BM_build_minors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_groebner)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_buchberger)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fiber_compare)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
