// Compares the serial reference path against the OpenMP trial runner on the
// heavier campaigns. Both paths produce identical reports (per-trial seeding);
// this target only measures wall time.

#include <chrono>
#include <cstdio>

#include "dkm/campaigns.hpp"

using namespace dkm;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(bool serial, int trials) {
  CampaignConfig cfg;
  cfg.trials = trials;
  cfg.seed = 7;
  cfg.serial = serial;
  const auto t0 = Clock::now();
  cmd_verify_surface(0, cx(1.05, 0.2), cx(0.6, -0.3), cfg);
  cmd_hilb_roundtrip(2, 4, cx(1.0, 0.15), cx(0.55, -0.25), cfg);
  cmd_twistor(1, trials, cx(0.8), cx(0.8), cfg);
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int trials = 400;
  if (argc > 1) trials = std::atoi(argv[1]);

  std::printf("%-10s %10s\n", "path", "wall ms");
  const double serial_ms = run_ms(true, trials);
  std::printf("%-10s %10.1f\n", "serial", serial_ms);
#ifdef DKM_WITH_OPENMP
  const double omp_ms = run_ms(false, trials);
  std::printf("%-10s %10.1f   speedup %.2fx\n", "openmp", omp_ms, serial_ms / omp_ms);
#else
  std::printf("%-10s %10s\n", "openmp", "(not built)");
#endif
  return 0;
}
