#include "dkm/surfaces.hpp"

#include <cmath>

namespace dkm {

double surface_residual(const D2Point& p) {
  const cx mu1 = p.params.mu1, mu2 = p.params.mu2;
  return std::abs(p.a * p.a - p.x * p.c * p.c + 0.25 * p.x + p.params.tau() * p.c -
                  0.5 * (mu1 * mu1 + mu2 * mu2));
}

double surface_residual(const D1Point& p) {
  const cx alpha = p.params.mu1 - p.params.mu2;
  return std::abs(p.y * p.y * p.x - p.z * p.z + 0.25 + alpha * p.y);
}

double surface_residual(const D0Point& p) {
  return std::abs(p.t * p.t - p.x * p.w * p.w + p.w);
}

double surface_residual(const SurfacePoint& p) {
  return std::visit([](const auto& q) { return surface_residual(q); }, p);
}

SurfacePoint sample_surface_point(int kind, cx mu1, cx mu2, Rng& rng, double radius) {
  SurfaceParams params{kind, mu1, mu2};
  const cx x = rng.disk(radius);
  const double branch = rng.uniform() < 0.5 ? 1.0 : -1.0;
  switch (kind) {
    case 2: {
      // solve the quadratic in a given (c, x)
      const cx c = rng.disk(radius);
      const cx rhs = x * c * c - 0.25 * x - (mu1 * mu1 - mu2 * mu2) * c +
                     0.5 * (mu1 * mu1 + mu2 * mu2);
      return D2Point{params, branch * std::sqrt(rhs), c, x};
    }
    case 1: {
      // solve for z given (x, y)
      const cx y = rng.disk(radius);
      const cx rhs = y * y * x + 0.25 + (mu1 - mu2) * y;
      return D1Point{params, x, y, branch * std::sqrt(rhs)};
    }
    case 0: {
      // solve for t given (w, x)
      const cx w = rng.disk(radius);
      const cx rhs = x * w * w - w;
      return D0Point{params, branch * std::sqrt(rhs), w, x};
    }
    default:
      throw Error("surface kind must be 0, 1 or 2");
  }
}

SlicePoint reconstruct_n2(const D2Point& p, double tol) {
  if (surface_residual(p) > tol) throw NotOnSurface("kind-2 equation violated");
  Matrix s(2, 2), y(2, 2);
  s << cx(0), p.x, cx(1), cx(0);
  y << p.a, p.params.tau() - p.c * p.x, p.c, -p.a;
  return SlicePoint{s, y, SliceParams::for_kind(2, 1, p.params.mu1, p.params.mu2)};
}

SlicePoint reconstruct_n3(const D1Point& p, double tol) {
  if (surface_residual(p) > tol) throw NotOnSurface("kind-1 equation violated");
  const cx ap = p.params.mu1 + p.params.mu2, am = p.params.mu1 - p.params.mu2;
  const cx c = -ap * p.y - p.z;
  const cx a = ap * p.z + p.y * p.x + 0.5 * am;
  const cx b = p.params.tau() - c * p.x;
  Matrix s = Matrix::Zero(3, 3), y = Matrix::Zero(3, 3);
  s(0, 1) = p.x;
  s(1, 0) = cx(1);
  s(2, 1) = cx(1);
  s(2, 2) = ap;
  y(0, 0) = a;
  y(0, 1) = b;
  y(1, 0) = c;
  y(1, 1) = -a;
  y(2, 0) = p.y;
  y(2, 1) = p.z;
  y(2, 2) = 0.5 * am;
  return SlicePoint{s, y, SliceParams::for_kind(1, 1, p.params.mu1, p.params.mu2)};
}

std::pair<cx, cx> d0_coords(cx /*x*/, cx y, cx u, const SurfaceParams& params) {
  if (std::abs(params.mu2) < 1e-12)
    throw DegenerateParameter("the 4x4 presentation needs mu2 != 0");
  const cx w = (y - u) / (2.0 * params.mu2);
  const cx t = ((params.mu1 + params.mu2) * y - (params.mu1 - params.mu2) * u) /
               (2.0 * params.mu2);
  return {t, w};
}

std::pair<cx, cx> d0_free_coords(const D0Point& p) {
  const cx am = p.params.mu1 - p.params.mu2, ap = p.params.mu1 + p.params.mu2;
  return {p.t - am * p.w, p.t - ap * p.w};  // (y, u)
}

SlicePoint reconstruct_n4(cx x, cx y, cx u, const SurfaceParams& params, double tol) {
  const auto [t, w] = d0_coords(x, y, u, params);
  if (std::abs(t * t - x * w * w + w) > tol)
    throw NotOnSurface("kind-0 equation violated by the induced (t, w, x)");
  const cx ap = params.mu1 + params.mu2, am = params.mu1 - params.mu2;
  const cx z = (am * am - x) * w + am * y + 0.5;
  const cx v = (ap * ap - x) * w + ap * u + 0.5;
  const cx c = -ap * y - z;
  const cx a = ap * z + y * x + 0.5 * am;
  const cx b = params.tau() - c * x;
  Matrix s = Matrix::Zero(4, 4), ym = Matrix::Zero(4, 4);
  s(0, 1) = x;
  s(1, 0) = cx(1);
  s(2, 1) = cx(1);
  s(2, 2) = ap;
  s(3, 1) = cx(1);
  s(3, 3) = am;
  ym(0, 0) = a;
  ym(0, 1) = b;
  ym(1, 0) = c;
  ym(1, 1) = -a;
  ym(2, 0) = y;
  ym(2, 1) = z;
  ym(2, 2) = 0.5 * am;
  ym(3, 0) = u;
  ym(3, 1) = v;
  ym(3, 3) = 0.5 * ap;
  return SlicePoint{s, ym, SliceParams::for_kind(0, 1, params.mu1, params.mu2)};
}

SurfacePoint extract_coords(const SlicePoint& pt, double tol) {
  if (!is_canonical(pt, tol)) throw NotCanonical("point is not in canonical form");
  const int kind = pt.params.kind();
  const cx mu1 = pt.params.o1.mu, mu2 = pt.params.o2.mu;
  SurfaceParams params{kind, mu1, mu2};
  switch (kind) {
    case 2: {
      if (pt.n() != 2) throw NotCanonical("kind-2 coordinates need n = 2");
      return D2Point{params, pt.Y(0, 0), pt.Y(1, 0), pt.S(0, 1)};
    }
    case 1: {
      if (pt.n() != 3) throw NotCanonical("kind-1 coordinates need n = 3");
      return D1Point{params, pt.S(0, 1), pt.Y(2, 0), pt.Y(2, 1)};
    }
    case 0: {
      if (pt.n() != 4) throw NotCanonical("kind-0 coordinates need n = 4");
      const cx y = pt.Y(2, 0), u = pt.Y(3, 0);
      const auto [t, w] = d0_coords(pt.S(0, 1), y, u, params);
      return D0Point{params, t, w, pt.S(0, 1)};
    }
    default:
      throw ShapeViolation("empty-regime parameters");
  }
}

}  // namespace dkm
