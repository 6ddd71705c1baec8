// Timing comparison of the serial reference path against the OpenMP one.
// Also verifies the two produce bitwise-identical results, which is the
// whole point of the deterministic slot-fill scheduling.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "hypab/ab_kernel.hpp"
#include "hypab/core.hpp"
#include "hypab/potentials.hpp"

using namespace hypab;

namespace {

double seconds_for(Complex (*fn)(const KernelRequest&), KernelRequest req,
                   Exec exec, int reps, Complex& out) {
  req.exec = exec;
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) out = fn(req);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

bool bitwise_equal(Complex a, Complex b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

Complex higgs_assembly(const KernelRequest& req) {
  HiggsParams h = HiggsParams::from_omega(3.0, req.params);
  return ab_partial_wave_assembly(PotentialKind::higgs, req, h);
}

void run_case(const char* name, Complex (*fn)(const KernelRequest&),
              const KernelRequest& req, int reps) {
  Complex serial, parallel;
  double ts = seconds_for(fn, req, Exec::serial, reps, serial);
  double tp = seconds_for(fn, req, Exec::openmp, reps, parallel);
  std::printf("%-24s serial %8.1f ms   openmp %8.1f ms   speedup %5.2fx   %s\n",
              name, 1e3 * ts, 1e3 * tp, ts / tp,
              bitwise_equal(serial, parallel) ? "bitwise equal"
                                              : "MISMATCH");
}

}  // namespace

int main() {
  KernelRequest req;
  req.p1 = PseudospherePoint::make(1.0, 0.0);
  req.p2 = PseudospherePoint::make(1.2, 0.7);
  req.beta = 0.5;
  req.xi = 0.3;

  KernelRequest wide = req;
  wide.l_max = 80;

  KernelRequest hot = req;  // slower spectral decay -> denser quadrature
  hot.beta = 0.15;

  KernelRequest windy = req;
  windy.n_max = 8;

  run_case("partial-wave l<=40", partial_wave_kernel, req, 3);
  run_case("partial-wave l<=80", partial_wave_kernel, wide, 1);
  run_case("partial-wave beta=0.15", partial_wave_kernel, hot, 1);
  run_case("winding |n|<=8", winding_kernel_sum, windy, 1);
  run_case("higgs assembly l<=40", higgs_assembly, req, 1);
  return 0;
}
