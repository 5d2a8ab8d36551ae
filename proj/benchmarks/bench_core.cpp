#include <benchmark/benchmark.h>

#include "gres/gres.hpp"

using namespace gres;

namespace {

IdealPresentation system(const std::vector<std::string>& gens) {
  const auto names = default_variable_names(2);
  std::vector<MultiPoly> polys;
  for (const auto& g : gens) polys.push_back(parse_poly(g, names));
  return IdealPresentation(std::move(polys));
}

// Dense systems of growing Bezout number.
IdealPresentation dense(int degree) {
  const std::string d = std::to_string(degree);
  return system({"s1^" + d + " + s1*s2 - 3*s2 + 1", "s2^" + d + " - s1^2 + 2*i*s1 - 5"});
}

// Leading monomials overlap, so Buchberger has real work to do.
IdealPresentation mixed(int degree) {
  const std::string d = std::to_string(degree);
  const std::string e = std::to_string(degree - 1);
  return system({"s1^" + d + " + s2^" + d + " - 3", "s1^" + e + "*s2 - s2^" + d + " + s1 - 2"});
}

void BM_Buchberger(benchmark::State& state) {
  const IdealPresentation pres = mixed(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(pres));
}
BENCHMARK(BM_Buchberger)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ResidueSystem(benchmark::State& state) {
  const IdealPresentation pres = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ResidueSystem(pres));
}
BENCHMARK(BM_ResidueSystem)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_GlobalResidue(benchmark::State& state) {
  const ResidueSystem sys(dense(static_cast<int>(state.range(0))));
  const MultiPoly h = parse_poly("s1^3*s2^2 - 7*s1*s2 + 2", default_variable_names(2));
  for (auto _ : state) benchmark::DoNotOptimize(global_residue(h, sys));
}
BENCHMARK(BM_GlobalResidue)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_QpMatrix(benchmark::State& state) {
  const ResidueSystem sys(dense(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qp_matrix(sys));
}
BENCHMARK(BM_QpMatrix)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_QpMatrixEuclid(benchmark::State& state) {
  const std::vector<Point> nodes{{Scalar(0), Scalar(1)}, {Scalar(2), Scalar(-1)}};
  const auto m = static_cast<Monomial::exponent_type>(state.range(0));
  const std::vector<Monomial> mults{Monomial{m, m}, Monomial{m, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(qp_matrix_euclid(nodes, mults));
}
BENCHMARK(BM_QpMatrixEuclid)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
