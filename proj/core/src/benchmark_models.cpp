#include <chrono>
#include <cmath>
#include <stdexcept>

#include "graphene/scenarios.hpp"

namespace graphene {

namespace {

using Clock = std::chrono::steady_clock;

struct Stream {
  std::vector<SurfTensor2> C;
  std::vector<LatticeFrame> frame;
};

Stream make_stream(int n, std::uint64_t seed) {
  Stream s;
  // principal stretches in [0.95, 1.2]
  for (const auto& st : random_states(n, seed, 0.95 * 0.95, 1.2 * 1.2)) {
    s.C.push_back(st.C);
    s.frame.push_back(make_frame(st.theta_lattice));
  }
  return s;
}

template <class Body>
double time_loop(const Stream& s, Body&& body) {
  volatile double sink = 0.0;
  const auto t0 = Clock::now();
  double acc = 0.0;
  for (std::size_t i = 0; i < s.C.size(); ++i) acc += body(s.C[i], s.frame[i]);
  const auto t1 = Clock::now();
  sink = acc;
  (void)sink;
  return std::chrono::duration<double>(t1 - t0).count();
}

std::string environment() {
  std::string env;
#if defined(__VERSION__)
  env += "compiler " __VERSION__;
#endif
#if defined(NDEBUG)
  env += ", optimized";
#else
  env += ", assertions on";
#endif
  env += ", single thread";
  return env;
}

}  // namespace

BenchmarkReport benchmark_models(const MaterialParams& params, int n_evals, std::uint64_t seed) {
  if (n_evals < 10000) throw std::invalid_argument("benchmark needs at least 10^4 evaluations");
  BenchmarkReport r;
  r.n_evals = n_evals;
  r.seed = seed;
  r.environment = environment();
  const Stream s = make_stream(n_evals, seed);

  for (std::size_t i = 0; i < s.C.size(); ++i) {
    const SurfTensor2 sm = pk2_stress_metric(s.C[i], s.frame[i], params);
    const SurfTensor2 sl = pk2_stress_log(s.C[i], s.frame[i], params);
    const double scale = std::max(max_abs(sl), 1e-3);
    r.consistency_max_rel = std::max(r.consistency_max_rel, max_abs(sm - sl) / scale);
  }
  r.consistency_passed = r.consistency_max_rel <= r.consistency_limit;
  if (!r.consistency_passed) return r;

  r.calibration_s = time_loop(s, [](const SurfTensor2& c, const LatticeFrame&) { return c.c11; });
  r.metric_stress_s = time_loop(s, [&](const SurfTensor2& c, const LatticeFrame& f) {
    return pk2_stress_metric(c, f, params).c11;
  });
  r.log_stress_s = time_loop(s, [&](const SurfTensor2& c, const LatticeFrame& f) {
    return pk2_stress_log(c, f, params).c11;
  });
  r.metric_full_s = time_loop(s, [&](const SurfTensor2& c, const LatticeFrame& f) {
    const StressTangent st = stress_tangent_metric(c, f, params);
    return st.S.c11 + st.C.comp[0];
  });
  r.log_full_s = time_loop(s, [&](const SurfTensor2& c, const LatticeFrame& f) {
    return pk2_stress_log(c, f, params).c11 + tangent_log(c, f, params).comp[0];
  });

  const auto net = [&](double t) { return std::max(t - r.calibration_s, 1e-12); };
  r.ratio_stress = net(r.log_stress_s) / net(r.metric_stress_s);
  r.ratio_full = net(r.log_full_s) / net(r.metric_full_s);
  return r;
}

}  // namespace graphene
