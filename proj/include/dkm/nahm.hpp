#pragma once

#include <array>
#include <vector>

#include "dkm/linalg.hpp"

namespace dkm {

// Quadruple (T0, T1, T2, T3) of n x n matrices at a time t in (0, 1].
struct NahmState {
  double t = 0.0;
  std::array<Matrix, 4> T;

  int n() const { return static_cast<int>(T[1].rows()); }
};

// Images of the su(2) generators under the irreducible n-dimensional
// representation, normalized so that [a_i, a_j] = -a_k (cyclic). With this
// sign the matrices a_i / t solve the flow below identically:
//   d(a_i/t)/dt = -a_i/t^2 = [a_j, a_k]/t^2.
struct PoleData {
  int n = 0;
  Matrix a1, a2, a3;
};
PoleData regular_triple(int n);

// Right-hand side dT_i/dt = [T_j, T_k] - [T_0, T_i] (cyclic), dT_0/dt = 0.
std::array<Matrix, 4> nahm_rhs(const NahmState& state);

struct IntegrateOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  double h_min = 1e-12;
  int max_steps = 2000000;
};

// Adaptive Runge-Kutta-Fehlberg 4(5) trajectory from state.t to t_end.
// Steps are additionally capped at a fraction of t so the 1/t pole scale is
// respected. Throws StiffnessFailure on step underflow.
std::vector<NahmState> integrate(const NahmState& start, double t_end,
                                 const IntegrateOptions& opts = {});

// Lax form A(zeta) = (T1 + i T2) - 2 i T3 zeta + (T1 - i T2) zeta^2, which
// satisfies dA/dt = [A, B] with B = T0 - i T3 + (T1 - i T2) zeta along the
// flow; its characteristic polynomial is a conserved quantity.
Matrix lax_matrix(const NahmState& state, cx zeta);

// Max coefficientwise drift of char_poly(A(zeta)) over the trajectory and the
// zeta samples, relative to the first sample. With pole_normalized, the
// coefficient of z^{n-k} is rescaled by t^k first, which removes the exact
// scaling of a solution with a simple pole at t = 0.
double spectral_drift(const std::vector<NahmState>& traj, const std::vector<cx>& zetas,
                      bool pole_normalized = false);

// Max over i of || T_i + T_i^dagger ||.
double skew_residual(const NahmState& state);

}  // namespace dkm
