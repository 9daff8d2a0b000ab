#pragma once

#include <functional>
#include <optional>

#include "dkm/report.hpp"
#include "dkm/types.hpp"

namespace dkm {

// Knobs shared by all verification campaigns. Every trial draws its random
// stream from (seed, trial index) alone, so serial and OpenMP runs produce
// identical reports.
struct CampaignConfig {
  int trials = 100;
  std::uint64_t seed = 1;
  bool serial = false;                // force the serial reference path
  std::optional<double> tol_override; // replace every check tolerance
};

using TrialFn = std::function<std::vector<Check>(int trial, Rng& rng)>;

// Per-trial checks in trial order; parallelized over trials when OpenMP is
// enabled and serial is false. Exceptions inside a trial become failed checks.
std::vector<Check> run_trials(int trials, std::uint64_t seed, bool serial,
                              const TrialFn& fn);

// End-to-end surface -> slice verification for one kind (m = 1).
RunReport cmd_verify_surface(int kind, cx mu1, cx mu2, const CampaignConfig& cfg);

// gather -> slice -> coordinate polynomials -> scatter round trips on the
// kind-k surface, including the rational-map condition for kind 1, mu1 = mu2.
RunReport cmd_hilb_roundtrip(int kind, int m, cx mu1, cx mu2, const CampaignConfig& cfg);

// Emptiness certificate plus the rank obstruction measured on samples.
RunReport cmd_empty(int n, int d1, int d2, const CampaignConfig& cfg);

// Chart round trips, equation transport and quadric invariance on the band
// 0.5 <= |zeta| <= 2.
RunReport cmd_twistor(int kind, int samples, cx mu1, cx mu2, const CampaignConfig& cfg);

// Pole-solution tracking (mode "pole") or isospectral drift for bounded data
// (mode "bounded").
RunReport cmd_nahm(int n, double epsilon, double t_end, const std::string& mode,
                   const CampaignConfig& cfg);

}  // namespace dkm
