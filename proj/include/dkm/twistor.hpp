#pragma once

#include "dkm/linalg.hpp"

namespace dkm {

// D(zeta) = diag(zeta^{-n+1}, zeta^{-n+3}, ..., zeta^{n-1}). ChartBoundary at
// zeta = 0.
Matrix d_matrix(int n, cx zeta);

// O(2) section mu + 2 r zeta - conj(mu) zeta^2 deforming an eigenvalue across
// the twistor fibers.
struct MuSection {
  cx mu;
  double r = 0.0;
};
cx mu_eval(const MuSection& ms, cx zeta);
// The same section read in the other chart: coefficients of the O(2) section
// zeta^{-2} mu(zeta) as a polynomial in 1/zeta.
MuSection mu_other_chart(const MuSection& ms);

// Antipodal reality of a degree-2r section s(zeta) = sum s_j zeta^j under
// (zeta, eta) -> (-1/conj(zeta), (-1)^r conj(eta)/conj(zeta)^{2r}):
// coefficientwise s_{2r-j} = (-1)^{r+j} conj(s_j). Returns the worst
// violation; 0 for real sections. The eigenvalue sections above are the
// r = 1 case, the base coordinate x(zeta) the r = 2 case.
double o2r_reality_residual(const std::vector<cx>& coeffs, int r);

// Gluing of the two charts of the twistor space of companion-slice pairs:
//   zetat = 1/zeta,
//   St = D(zeta) S D(zeta)^{-1} / zeta^2,
//   gt = g exp(-S/zeta) D(zeta)^{-1},
//   Yt = D(zeta) exp(S/zeta) (Y/zeta^2) exp(-S/zeta) D(zeta)^{-1}.
// The maps below implement the transition in both directions; going back is
// the inverse map (same formulas with the opposite exponential sign), so a
// forward/backward round trip is the identity.

struct ChartN {
  cx zeta;
  Matrix s, g;
};
ChartN transition_N(const ChartN& chart);
ChartN transition_N_back(const ChartN& chart);

struct ChartSY {
  cx zeta;
  Matrix s, y;
};
ChartSY transition_SY(const ChartSY& chart);
ChartSY transition_SY_back(const ChartSY& chart);

// Surface-coordinate transitions of the m = 1 charts over the curve
// lambda^2 = x(zeta); lambda_t = lambda / zeta^2 implicitly.
struct D2Chart {
  cx lambda, a, c;
};
D2Chart d2_chart_transition(cx zeta, const D2Chart& p);

struct D1Chart {
  cx lambda, y, z;
};
D1Chart d1_chart_transition(cx zeta, const D1Chart& p);

// General-parameter transitions, written in the multiplied-through variables.
// For kind 2 the pair (a, w = x c - tau/2) transforms so that w -/+ lambda a
// are e^{-/+ 2 lambda/zeta} / zeta^4 sections; for kind 1 the pair
// (q = y x + (mu1-mu2)/2, z) has q +/- lambda z as e^{-/+...}/zeta^2 sections;
// for kind 0 the factors x w - 1/2 -/+ t lambda carry e^{-/+ 2 lambda/zeta}
// alone.
struct D2GeneralChart {
  cx lambda, a, w;
};
D2GeneralChart d2_chart_transition_general(cx zeta, const D2GeneralChart& p);

struct D1GeneralChart {
  cx lambda, q, z;
};
D1GeneralChart d1_chart_transition_general(cx zeta, const D1GeneralChart& p);

struct D0Chart {
  cx lambda, t, w;  // lambda^2 = x
};
D0Chart d0_chart_transition(cx zeta, const D0Chart& p);

// Residuals of the multiplied-through quadric identities:
//   kind 2: (x c - tau/2)^2 - x a^2 = (x - (mu1-mu2)^2)(x - (mu1+mu2)^2)/4
//   kind 1: (y x + (mu1-mu2)/2)^2 - x z^2 = ((mu1-mu2)^2 - x)/4
//   kind 0: (x w - 1/2)^2 - x t^2 = 1/4
// each equal to the surface equation times x (or w).
double quadric_check_d2(cx a, cx c, cx x, cx mu1, cx mu2);
double quadric_check_d1(cx y, cx z, cx x, cx mu1, cx mu2);
double quadric_check_d0(cx t, cx w, cx x);

}  // namespace dkm
