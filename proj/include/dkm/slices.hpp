#pragma once

#include <utility>
#include <vector>

#include "dkm/linalg.hpp"

namespace dkm {

// Semisimple adjoint orbit with the two eigenvalues +mu, -mu of multiplicities
// k and l (k + l = n). Normalized at construction to k >= l by flipping the
// sign of mu, which does not change the orbit. mu = 0 selects the nilpotent
// closure A^2 = 0 of rank l instead; supported for n <= 4 and flagged.
struct OrbitSpec {
  cx mu;
  int k = 0, l = 0;

  OrbitSpec(cx mu_, int k_, int l_);
  int n() const { return k + l; }
  int d() const { return k - l; }
  bool nilpotent() const { return std::abs(mu) == 0.0; }
};

// Parameter block of a slice variety: the two orbits, ordered so that
// d1 >= d2 >= 0. kind() = 2, 1, 0 tags the three nonempty families
// (d1,d2) = (0,0), (1,1), (2,0); any other combination is provably empty.
struct SliceParams {
  OrbitSpec o1, o2;

  SliceParams(OrbitSpec a, OrbitSpec b);
  static SliceParams for_kind(int kind, int m, cx mu1, cx mu2);

  int n() const { return o1.n(); }
  cx tau() const { return o1.mu * o1.mu - o2.mu * o2.mu; }
  int d1() const { return o1.d(); }
  int d2() const { return o2.d(); }
  // 2, 1 or 0; -1 when the (d1,d2) pattern lies in the empty regime.
  int kind() const;
  int m() const;  // number of quadratic factors z^2 - x_i of the char poly
};

// A point of the slice variety in matrix form: S traceful part, Y half the
// difference of the orbit elements. S is companion in the slice presentation
// proper and block lower-triangular in the bordered canonical presentations;
// the residual checks below are shape-agnostic.
struct SlicePoint {
  Matrix S, Y;
  SliceParams params;

  int n() const { return static_cast<int>(S.rows()); }
};

// Random element of the orbit: mu (2P - I) with P a Gaussian-conjugated rank-k
// projector (condition-number rejection at 1e6); for mu = 0, a rank-l square
// -zero nilpotent conjugated the same way.
Matrix orbit_sample(const OrbitSpec& spec, Rng& rng);

// Max violation among: S Y + Y S = tau I, (Y - S/2)^2 = mu2^2 I,
// tr S = d1 mu1 + d2 mu2, tr Y = (d1 mu1 - d2 mu2)/2.
double slice_residual(const SlicePoint& pt);

// (A, B) = (S/2 + Y, S/2 - Y). Throws NotOnSlice above tol.
std::pair<Matrix, Matrix> slice_to_pair(const SlicePoint& pt, double tol = 1e-7);
SlicePoint pair_to_slice(const Matrix& a, const Matrix& b, const SliceParams& params);

// Factored shape of the characteristic polynomial of S: p linear factors at
// mu1 + mu2, q at mu1 - mu2, and an even polynomial prod(z^2 - x_i).
struct CharShape {
  int p = 0, q = 0;
  std::vector<cx> x_list;     // the m values x_i
  Polynomial even_factor;     // prod (z^2 - x_i), degree 2m in z
};
CharShape char_shape(const SlicePoint& pt, double tol = 1e-7);

// Emptiness certificate for the slice to the sum of the two orbits, with the
// rank obstruction of the proof evaluated on an actual sample:
// rank(A - mu1 I) + rank(B - mu2 I) = l1 + l2, which is < n-1 exactly in the
// empty regime |d1| + |d2| > 2.
struct EmptinessReport {
  bool empty = false;
  int rank_a = 0, rank_b = 0;  // measured on the sample
  int rank_bound = 0;          // n - 1
};
EmptinessReport emptiness_certificate(const OrbitSpec& s1, const OrbitSpec& s2, Rng& rng);

// --- canonical bordered forms -----------------------------------------------
//
// For kind 1 the pair is block lower-triangular with a companion core S0 of
// the even factor Q and border row e = (0,...,0,1):
//   S = [ S0 0 ; e  mu1+mu2 ],  Y = [ Y0 0 ; v  (mu1-mu2)/2 ]
// and for kind 0 with two border rows
//   S = [ S0 0 0 ; e mu1+mu2 0 ; e 0 mu1-mu2 ],
//   Y = [ Y0 0 0 ; v1 (mu1-mu2)/2 0 ; v2 0 (mu1+mu2)/2 ].

bool is_canonical(const SlicePoint& pt, double tol = 1e-7);

// Forgetful map onto the core: returns the (S0, Y0) block as a kind-2 point.
SlicePoint extract_phi(const SlicePoint& pt);
// The two minors of a kind-0 point: drop the second border (phi1, lands in
// D_1(mu1, mu2)) or the first border (phi2, lands in D_1(mu1, -mu2)).
SlicePoint extract_phi1(const SlicePoint& pt);
SlicePoint extract_phi2(const SlicePoint& pt);

// Border a kind-2 core (companion S0) with a row v and the scalar corners,
// giving a candidate kind-1 point for D_1(mu1, sign*mu2); validity is the
// caller's slice_residual check.
SlicePoint extend_phi_inverse(const SlicePoint& core, const Eigen::RowVectorXcd& v,
                              cx mu1, cx mu2, int mu2_sign = +1);

// Basis change between the companion presentation (S companion of the full
// characteristic polynomial) and the bordered canonical form above. Kind 2 is
// already companion; kind 0 needs mu2 != 0 (DegenerateParameter otherwise).
SlicePoint to_canonical_form(const SlicePoint& pt, double tol = 1e-7);
SlicePoint to_companion_form(const SlicePoint& pt, double tol = 1e-7);

}  // namespace dkm
