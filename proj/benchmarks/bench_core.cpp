#include <benchmark/benchmark.h>

#include "diffnorm/algebra.hpp"
#include "diffnorm/pipeline.hpp"
#include "diffnorm/reduction.hpp"
#include "diffnorm/series.hpp"
#include "diffnorm/text.hpp"

using namespace diffnorm;

namespace {

const NameList xy{"x", "y"};

void BM_PartialReduce(benchmark::State& state) {
  const DiffPoly p = parse_diffpoly("x*(y')^2 + y*x' - y^2 + 1", xy);
  const DiffPoly q = DiffPoly::var(2, static_cast<int>(state.range(0))) * parse_diffpoly("x + y", xy);
  for (auto _ : state) benchmark::DoNotOptimize(partial_reduce(q, p, 2));
}
BENCHMARK(BM_PartialReduce)->DenseRange(2, 5);

void BM_Resultant(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const DiffPoly v = DiffPoly::var(2, 1);
  const DiffPoly p = v.pow(static_cast<unsigned>(k)) + parse_diffpoly("x*y' - y + x'", xy);
  const DiffPoly g = v.pow(static_cast<unsigned>(k - 1)) * parse_diffpoly("x + 1", xy) - parse_diffpoly("y", xy);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_with_cofactors(p, g, {2, 1}));
}
BENCHMARK(BM_Resultant)->DenseRange(2, 6);

void BM_DeriveProduct(benchmark::State& state) {
  const DiffPoly p = parse_diffpoly("(x*y' + y*x'' - 3)^4", xy);
  for (auto _ : state) benchmark::DoNotOptimize(derive(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DeriveProduct)->DenseRange(1, 4);

void BM_ExtendSquareRoot(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const DiffPoly p = parse_diffpoly("y*y' - x", xy);
  const TruncSeries one = TruncSeries::from_rationals({1}, m);
  for (auto _ : state) benchmark::DoNotOptimize(extend_solution(p, DiffPoly::var(2), {one}, m));
}
BENCHMARK(BM_ExtendSquareRoot)->RangeMultiplier(2)->Range(8, 32);

void BM_NormalizeRemark(benchmark::State& state) {
  System sys;
  sys.n = 2;
  sys.d = 1;
  sys.equations = {parse_diffpoly("x*y' + (x' + 1)*y - 1", xy)};
  sys.inequation = parse_diffpoly("x", xy);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(sys));
}
BENCHMARK(BM_NormalizeRemark);

void BM_SampleRemark(benchmark::State& state) {
  System sys;
  sys.n = 2;
  sys.d = 1;
  sys.equations = {parse_diffpoly("x*y' + (x' + 1)*y - 1", xy)};
  sys.inequation = parse_diffpoly("x", xy);
  const ChangeOfVariables cv = normalize(sys);
  for (auto _ : state) benchmark::DoNotOptimize(verify_surjectivity_sample(cv, 5, static_cast<int>(state.range(0)), 7));
}
BENCHMARK(BM_SampleRemark)->Arg(10)->Arg(20);

}  // namespace
BENCHMARK_MAIN();
