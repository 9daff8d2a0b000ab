#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dkm/surfaces.hpp"

namespace dkm {

// Affine variety X in C^kdim together with the projection onto the last
// coordinate z. Generators are evaluated inside C[z]: handing them degree-0
// polynomials recovers plain point evaluation.
struct AffineModel {
  std::string name;
  int kdim = 0;  // ambient dimension, fiber coordinates plus the base z
  std::vector<std::string> coord_names;
  std::vector<std::function<Polynomial(const std::vector<Polynomial>& w,
                                       const Polynomial& z)>>
      generators;
};

AffineModel d2_model(cx mu1, cx mu2);       // a^2 - x c^2 + x/4 + tau c - (mu1^2+mu2^2)/2
AffineModel d1_model(cx mu1, cx mu2);       // y^2 x - z^2 + 1/4 + (mu1-mu2) y
AffineModel d0_model();                     // t^2 - x w^2 + w
AffineModel surface_model(int kind, cx mu1, cx mu2);
AffineModel c2_xy_model();                  // x y = z  (C^2 projected by xy)
AffineModel cstar_model();                  // x y = 1  (C* x C)
AffineModel double_cover_model();           // x^2 - z y^2 = 1

// A point of the transverse Hilbert scheme: a monic degree-n polynomial q and
// fiber-coordinate polynomials of degree <= n-1 in the base variable.
struct HilbPoint {
  Polynomial q;
  std::vector<Polynomial> coords;

  int n() const { return q.degree(); }
};

// Max over generators of the coefficient sup-norm of f(w(z), z) mod q(z).
double hilb_residual(const AffineModel& model, const HilbPoint& pt);
// Same congruence at a single point (degree-0 data).
double point_residual(const AffineModel& model, const std::vector<cx>& point);

// Interpolate m points of X with pairwise separated base values into a
// HilbPoint (q = product of the base linear factors). Throws NodesTooClose /
// PointOffVariety.
HilbPoint gather(const AffineModel& model, const std::vector<std::vector<cx>>& points,
                 double separation = kNodeSep, double tol = 1e-7);

// Evaluate the coordinate sections at the roots of q. Distinct roots only
// (ConfluentRoots otherwise); residual checking stays available for any q.
std::vector<std::vector<cx>> scatter(const AffineModel& model, const HilbPoint& pt,
                                     double tol = 1e-6);

// The slice point assembled from a HilbPoint over the kind-k surface with
// projection onto x: per-root 2x2 blocks conjugated back through the
// Vandermonde-pair basis, bordered for kinds 1 and 0. Output is companion for
// kind 2 and bordered-canonical otherwise.
SlicePoint hilb_to_slice(int kind, const HilbPoint& pt, cx mu1, cx mu2,
                         double tol = 1e-7);

// Inverse: block-diagonalize a slice point with distinct x_i and interpolate
// the per-root surface coordinates into polynomials.
HilbPoint slice_to_hilb(const SlicePoint& pt, double tol = 1e-7);

// Commuting pair with product S for a HilbPoint on x y = z:
// B1 = x(S), B2 = y(S), S = companion(q).
struct NakajimaTriple {
  Matrix b1, b2;
  Matrix s;
  double product_residual = 0.0;  // ||B1 B2 - S||
  double commutator_norm = 0.0;   // ||B1 B2 - B2 B1||
};
NakajimaTriple nakajima_triple(const HilbPoint& pt, double tol = 1e-7);

// Based rational map data of a HilbPoint on the double cover x^2 - z y^2 = 1:
// p(u) = x(u^2) + u y(u^2) of degree <= 2n-1 against q(u^2), with
// p(u) p(-u) = 1 mod q(u^2).
struct RationalMapData {
  Polynomial p;
  Polynomial q2;  // q(u^2), even
};
RationalMapData rational_map_from_D1(const HilbPoint& pt, double tol = 1e-7);
// Parity-split inverse (exact in coefficient space).
HilbPoint rational_map_to_hilb(const RationalMapData& data);

// Rewrite a kind-1 surface HilbPoint with mu1 = mu2 over the double cover
// presentation: (y, z) -> (x, y) = (2z, 2y), the base coordinate renamed.
HilbPoint d1_to_double_cover(const HilbPoint& pt);

}  // namespace dkm
