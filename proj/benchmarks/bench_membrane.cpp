#include <benchmark/benchmark.h>

#include "graphene/bending.hpp"
#include "graphene/geometry.hpp"
#include "graphene/membrane.hpp"
#include "graphene/scenarios.hpp"

using namespace graphene;

namespace {

struct Inputs {
  std::vector<SurfTensor2> C;
  std::vector<LatticeFrame> frame;
};

const Inputs& inputs() {
  static const Inputs in = [] {
    Inputs r;
    for (const auto& st : random_states(1024, 7, 0.95 * 0.95, 1.2 * 1.2)) {
      r.C.push_back(st.C);
      r.frame.push_back(make_frame(st.theta_lattice));
    }
    return r;
  }();
  return in;
}

template <class Fn>
void run(benchmark::State& state, Fn&& fn) {
  const Inputs& in = inputs();
  const MaterialParams p = MaterialParams::gga();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fn(in.C[i], in.frame[i], p));
    i = (i + 1) % in.C.size();
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_StressMetric(benchmark::State& s) { run(s, pk2_stress_metric); }
void BM_StressLog(benchmark::State& s) { run(s, pk2_stress_log); }

void BM_StressTangentMetric(benchmark::State& s) { run(s, stress_tangent_metric); }

void BM_StressTangentLog(benchmark::State& s) {
  run(s, [](const SurfTensor2& c, const LatticeFrame& f, const MaterialParams& p) {
    return std::make_pair(pk2_stress_log(c, f, p), tangent_log(c, f, p));
  });
}

void BM_BendingTangents(benchmark::State& state) {
  const SurfacePointGeometry g = evaluate_geometry(AnalyticSurface::sphere(1.5), {0.3, 1.1});
  const BendingKinematics k = BendingKinematics::from(g);
  for (auto _ : state) benchmark::DoNotOptimize(bending_tangents(k, bending_modulus::kQM));
}

}  // namespace

BENCHMARK(BM_StressMetric);
BENCHMARK(BM_StressLog);
BENCHMARK(BM_StressTangentMetric);
BENCHMARK(BM_StressTangentLog);
BENCHMARK(BM_BendingTangents);
BENCHMARK_MAIN();
