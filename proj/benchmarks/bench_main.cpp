#include "clifflines/circle.hpp"
#include "clifflines/hopf.hpp"
#include "clifflines/hurwitz_radon.hpp"
#include "clifflines/jet.hpp"
#include "clifflines/local_map.hpp"
#include "clifflines/random.hpp"
#include "clifflines/representation.hpp"

#include <benchmark/benchmark.h>

using namespace clifflines;

namespace {

const std::string& rep_name(const benchmark::State& state) {
  return builtin_names()[static_cast<std::size_t>(state.range(0))];
}

void BM_HopfEval(benchmark::State& state) {
  const HopfMap map(builtin(rep_name(state)), HopfForm::local);
  Rng rng(1);
  const Vec y = rng.normal_vec(map.domain_dim());
  for (auto _ : state) benchmark::DoNotOptimize(map.eval(y));
  state.SetLabel(rep_name(state));
}
BENCHMARK(BM_HopfEval)->DenseRange(0, 5);

void BM_LineImageAndClassify(benchmark::State& state) {
  const HopfMap map(builtin(rep_name(state)), HopfForm::local);
  Rng rng(2);
  const Vec d = rng.unit_vec(map.domain_dim());
  for (auto _ : state) {
    const auto pts = line_image(map, LineGerm{d});
    benchmark::DoNotOptimize(classify_points(pts, 1e-9));
  }
  state.SetLabel(rep_name(state));
}
BENCHMARK(BM_LineImageAndClassify)->DenseRange(0, 5);

void BM_Factor(benchmark::State& state) {
  const Representation rep = builtin(rep_name(state));
  Rng rng(3);
  const Mat a0 = rng.orthogonal(rep.n());
  const Mat basis = rng.orthogonal(rep.r() + 1);
  MatList slices;
  for (int i = 0; i <= rep.r(); ++i) slices.push_back(rep.operator_of(basis.col(i)) * a0);
  const auto gamma = BilinearMap::from_slices(slices);
  for (auto _ : state) benchmark::DoNotOptimize(factor(gamma));
  state.SetLabel(rep_name(state));
}
BENCHMARK(BM_Factor)->DenseRange(0, 5);

void BM_ExtractJet(benchmark::State& state) {
  const auto phi = hopf_local_projection(builtin(rep_name(state)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_jet(phi, kDefaultJetStep, true));
  state.SetLabel(rep_name(state));
}
BENCHMARK(BM_ExtractJet)->DenseRange(0, 5);

void BM_Reconstruct(benchmark::State& state) {
  const auto phi = hopf_local_projection(builtin(rep_name(state)), 0.1);
  ReconstructOptions opts;
  opts.lines = 50;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(phi, opts));
  state.SetLabel(rep_name(state));
}
BENCHMARK(BM_Reconstruct)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
