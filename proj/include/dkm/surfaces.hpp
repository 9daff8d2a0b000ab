#pragma once

#include <variant>

#include "dkm/slices.hpp"

namespace dkm {

struct SurfaceParams {
  int kind = 2;  // 0, 1 or 2
  cx mu1, mu2;
  cx tau() const { return mu1 * mu1 - mu2 * mu2; }
};

// The three affine surfaces, each with its defining equation:
//   kind 2:  a^2 - x c^2 + x/4 + (mu1^2 - mu2^2) c - (mu1^2 + mu2^2)/2 = 0
//   kind 1:  y^2 x - z^2 + 1/4 + (mu1 - mu2) y = 0
//   kind 0:  t^2 - x w^2 + w = 0
struct D2Point {
  SurfaceParams params;  // kind == 2
  cx a, c, x;
};
struct D1Point {
  SurfaceParams params;  // kind == 1
  cx x, y, z;
};
struct D0Point {
  SurfaceParams params;  // kind == 0
  cx t, w, x;
};
using SurfacePoint = std::variant<D2Point, D1Point, D0Point>;

double surface_residual(const D2Point& p);
double surface_residual(const D1Point& p);
double surface_residual(const D0Point& p);
double surface_residual(const SurfacePoint& p);

// Random point: sample two free coordinates in a disk, solve the remaining
// quadratic, pick a branch.
SurfacePoint sample_surface_point(int kind, cx mu1, cx mu2, Rng& rng, double radius = 1.5);

// 2x2 slice point  S = [0 x; 1 0],  Y = [a  tau - c x; c  -a].
SlicePoint reconstruct_n2(const D2Point& p, double tol = 1e-7);

// 3x3 bordered point with c, a recovered from the two linear relations
// c + (mu1+mu2) y + z = 0 and a = (mu1+mu2) z + y x + (mu1-mu2)/2.
SlicePoint reconstruct_n3(const D1Point& p, double tol = 1e-7);

// 4x4 bordered point from the free coordinates (x, y, u); needs mu2 != 0.
// The derived quantities are w = (y-u)/(2 mu2), t = y + (mu1-mu2) w and the
// two border rows (y, z), (u, v).
SlicePoint reconstruct_n4(cx x, cx y, cx u, const SurfaceParams& params, double tol = 1e-7);
// The (t, w) coordinates induced by (x, y, u).
std::pair<cx, cx> d0_coords(cx x, cx y, cx u, const SurfaceParams& params);
// Free coordinates (y, u) of the 4x4 presentation from a surface point.
std::pair<cx, cx> d0_free_coords(const D0Point& p);

// Read surface coordinates back off a canonical slice point of size 2, 3, 4.
SurfacePoint extract_coords(const SlicePoint& pt, double tol = 1e-7);

}  // namespace dkm
