#include "dkm/slices.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace dkm {

namespace {

// Bound for |p| evaluated near z, used to scale root-membership residuals.
double eval_scale(const Polynomial& p, cx z) {
  double s = 1.0, zp = 1.0;
  const double az = std::abs(z);
  for (int i = 0; i <= p.degree(); ++i) {
    s += std::abs(p.coeff(i)) * zp;
    zp *= az;
  }
  return s;
}

Matrix conjugate(const Matrix& t, const Matrix& m) {
  return t * m * t.inverse();
}

}  // namespace

OrbitSpec::OrbitSpec(cx mu_, int k_, int l_) : mu(mu_), k(k_), l(l_) {
  if (k < 0 || l < 0 || k + l < 1) throw Error("orbit multiplicities must be nonnegative");
  if (k < l) {
    std::swap(k, l);
    mu = -mu;
  }
  if (!is_finite(mu)) throw Error("orbit eigenvalue is not finite");
}

SliceParams::SliceParams(OrbitSpec a, OrbitSpec b) : o1(std::move(a)), o2(std::move(b)) {
  if (o1.n() != o2.n()) throw Error("orbit dimensions differ");
  if (o1.d() < o2.d()) std::swap(o1, o2);
}

SliceParams SliceParams::for_kind(int kind, int m, cx mu1, cx mu2) {
  switch (kind) {
    case 2: return SliceParams(OrbitSpec(mu1, m, m), OrbitSpec(mu2, m, m));
    case 1: return SliceParams(OrbitSpec(mu1, m + 1, m), OrbitSpec(mu2, m + 1, m));
    case 0: return SliceParams(OrbitSpec(mu1, m + 2, m), OrbitSpec(mu2, m + 1, m + 1));
    default: throw Error("kind must be 0, 1 or 2");
  }
}

int SliceParams::kind() const {
  if (d1() == 0 && d2() == 0) return 2;
  if (d1() == 1 && d2() == 1) return 1;
  if (d1() == 2 && d2() == 0) return 0;
  return -1;
}

int SliceParams::m() const {
  switch (kind()) {
    case 2: return n() / 2;
    case 1: return (n() - 1) / 2;
    case 0: return (n() - 2) / 2;
    default: throw Error("no quadratic-factor count in the empty regime");
  }
}

Matrix orbit_sample(const OrbitSpec& spec, Rng& rng) {
  const int n = spec.n();
  Matrix g(n, n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
    Eigen::JacobiSVD<Matrix> svd(g);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0 && sv(0) / sv(sv.size() - 1) < 1e6) break;
  }
  Matrix core = Matrix::Zero(n, n);
  if (spec.nilpotent()) {
    // square-zero closure; the canonical forms degenerate beyond n = 4, so
    // larger sizes are not offered
    if (n > 4) throw DegenerateParameter("nilpotent sampling is limited to n <= 4");
    for (int i = 0; i < spec.l; ++i) core(2 * i, 2 * i + 1) = cx(1);
    return conjugate(g, core);
  }
  for (int i = 0; i < spec.k; ++i) core(i, i) = cx(1);
  const Matrix p = conjugate(g, core);
  return spec.mu * (2.0 * p - Matrix::Identity(n, n));
}

double slice_residual(const SlicePoint& pt) {
  const int n = pt.n();
  const Matrix id = Matrix::Identity(n, n);
  const cx mu1 = pt.params.o1.mu, mu2 = pt.params.o2.mu;
  const Matrix b = pt.Y - 0.5 * pt.S;
  const double r1 = sup_norm(pt.S * pt.Y + pt.Y * pt.S - pt.params.tau() * id);
  const double r2 = sup_norm(b * b - (mu2 * mu2) * id);
  const double r3 = std::abs(pt.S.trace() - (double(pt.params.d1()) * mu1 +
                                             double(pt.params.d2()) * mu2));
  const double r4 = std::abs(pt.Y.trace() - 0.5 * (double(pt.params.d1()) * mu1 -
                                                   double(pt.params.d2()) * mu2));
  return std::max(std::max(r1, r2), std::max(r3, r4));
}

std::pair<Matrix, Matrix> slice_to_pair(const SlicePoint& pt, double tol) {
  if (slice_residual(pt) > tol)
    throw NotOnSlice("slice equations violated beyond tolerance");
  return {0.5 * pt.S + pt.Y, 0.5 * pt.S - pt.Y};
}

SlicePoint pair_to_slice(const Matrix& a, const Matrix& b, const SliceParams& params) {
  return SlicePoint{a + b, 0.5 * (a - b), params};
}

CharShape char_shape(const SlicePoint& pt, double tol) {
  if (pt.params.kind() < 0)
    throw ShapeViolation("parameters lie in the empty regime");
  const cx mu1 = pt.params.o1.mu, mu2 = pt.params.o2.mu;
  const int p = (pt.params.d1() + pt.params.d2()) / 2;
  const int q = (pt.params.d1() - pt.params.d2()) / 2;

  Polynomial rest = char_poly(pt.S);
  const cx alpha[2] = {mu1 + mu2, mu1 - mu2};
  const int counts[2] = {p, q};
  for (int which = 0; which < 2; ++which) {
    for (int i = 0; i < counts[which]; ++i) {
      if (std::abs(rest(alpha[which])) > tol * eval_scale(rest, alpha[which]))
        throw ShapeViolation("expected linear factor is missing");
      rest = poly_divmod(rest, Polynomial({-alpha[which], cx(1)})).first;
    }
  }
  if (rest.odd_coeff_norm() > tol * std::max(1.0, rest.norm()))
    throw ShapeViolation("even factor has odd-power leakage");

  CharShape shape;
  shape.p = p;
  shape.q = q;
  shape.even_factor = rest;
  const Polynomial qhat = rest.even_part();
  if (qhat.degree() >= 1) shape.x_list = roots(qhat);
  return shape;
}

EmptinessReport emptiness_certificate(const OrbitSpec& s1, const OrbitSpec& s2, Rng& rng) {
  if (s1.n() != s2.n()) throw Error("orbit dimensions differ");
  const int n = s1.n();
  EmptinessReport rep;
  rep.empty = std::abs(s1.d()) + std::abs(s2.d()) > 2;
  const Matrix a = orbit_sample(s1, rng);
  const Matrix b = orbit_sample(s2, rng);
  rep.rank_a = rank_with_reference(a - s1.mu * Matrix::Identity(n, n), 1e-7,
                                   1.0 + sup_norm(a));
  rep.rank_b = rank_with_reference(b - s2.mu * Matrix::Identity(n, n), 1e-7,
                                   1.0 + sup_norm(b));
  rep.rank_bound = n - 1;
  return rep;
}

// --- canonical forms ---------------------------------------------------------

namespace {

bool near(cx a, cx b, double tol) { return std::abs(a - b) <= tol; }

bool border_row_ok(const Matrix& s, int row, int core, double tol) {
  for (int j = 0; j + 1 < core; ++j)
    if (!near(s(row, j), cx(0), tol)) return false;
  return near(s(row, core - 1), cx(1), tol);
}

bool canonical_shape(const SlicePoint& pt, double tol) {
  const int kind = pt.params.kind();
  if (kind == 2) return is_companion_shaped(pt.S, tol);
  const int m = pt.params.m();
  const int core = 2 * m;
  const int n = pt.n();
  const cx mu1 = pt.params.o1.mu, mu2 = pt.params.o2.mu;
  const cx ap = mu1 + mu2, am = mu1 - mu2;

  if (!is_companion_shaped(pt.S.topLeftCorner(core, core), tol)) return false;
  if (companion_poly(pt.S.topLeftCorner(core, core)).odd_coeff_norm() > tol) return false;
  if (pt.S.topRightCorner(core, n - core).cwiseAbs().maxCoeff() > tol) return false;
  if (pt.Y.topRightCorner(core, n - core).cwiseAbs().maxCoeff() > tol) return false;

  if (kind == 1) {
    return border_row_ok(pt.S, core, core, tol) && near(pt.S(core, core), ap, tol) &&
           near(pt.Y(core, core), 0.5 * am, tol);
  }
  if (kind == 0) {
    return border_row_ok(pt.S, core, core, tol) && border_row_ok(pt.S, core + 1, core, tol) &&
           near(pt.S(core, core), ap, tol) && near(pt.S(core, core + 1), cx(0), tol) &&
           near(pt.S(core + 1, core), cx(0), tol) && near(pt.S(core + 1, core + 1), am, tol) &&
           near(pt.Y(core, core), 0.5 * am, tol) && near(pt.Y(core, core + 1), cx(0), tol) &&
           near(pt.Y(core + 1, core), cx(0), tol) && near(pt.Y(core + 1, core + 1), 0.5 * ap, tol);
  }
  return false;
}

// Change-of-basis matrix whose last column(s) replace the top monomials by the
// even factor Q (kind 1) or the pair (z -/+ (mu1 -/+ mu2)) Q / (+-2 mu2) (kind 0).
Matrix border_basis(const SliceParams& params, const Polynomial& q_even) {
  const int n = params.n();
  const int core = 2 * params.m();
  Matrix t = Matrix::Identity(n, n);
  const cx mu1 = params.o1.mu, mu2 = params.o2.mu;
  if (params.kind() == 1) {
    for (int i = 0; i <= q_even.degree(); ++i) t(i, core) = q_even.coeff(i);
  } else {
    if (std::abs(mu2) < 1e-12)
      throw DegenerateParameter("bordered basis for kind 0 needs mu2 != 0");
    const cx inv = cx(1) / (2.0 * mu2);
    const Polynomial h1 = Polynomial({-(mu1 - mu2), cx(1)}) * q_even * inv;
    const Polynomial h2 = Polynomial({-(mu1 + mu2), cx(1)}) * q_even * (-inv);
    for (int i = 0; i <= h1.degree(); ++i) t(i, core) = h1.coeff(i);
    for (int i = 0; i <= h2.degree(); ++i) t(i, core + 1) = h2.coeff(i);
  }
  return t;
}

}  // namespace

bool is_canonical(const SlicePoint& pt, double tol) { return canonical_shape(pt, tol); }

SlicePoint extract_phi(const SlicePoint& pt) {
  const int kind = pt.params.kind();
  if (kind != 0 && kind != 1) throw NotCanonical("phi expects a bordered kind-0/1 point");
  if (!canonical_shape(pt, 1e-7)) throw NotCanonical("point is not in canonical form");
  const int m = pt.params.m();
  const int core = 2 * m;
  return SlicePoint{pt.S.topLeftCorner(core, core), pt.Y.topLeftCorner(core, core),
                    SliceParams::for_kind(2, m, pt.params.o1.mu, pt.params.o2.mu)};
}

namespace {

SlicePoint d0_minor(const SlicePoint& pt, int border, int mu2_sign) {
  if (pt.params.kind() != 0) throw NotCanonical("minor maps expect a kind-0 point");
  if (!canonical_shape(pt, 1e-7)) throw NotCanonical("point is not in canonical form");
  const int m = pt.params.m();
  const int core = 2 * m;
  const int keep = core + border;  // index of the border row/column kept
  Matrix s(core + 1, core + 1), y(core + 1, core + 1);
  s.topLeftCorner(core, core) = pt.S.topLeftCorner(core, core);
  y.topLeftCorner(core, core) = pt.Y.topLeftCorner(core, core);
  s.topRightCorner(core, 1) = pt.S.block(0, keep, core, 1);
  y.topRightCorner(core, 1) = pt.Y.block(0, keep, core, 1);
  s.bottomLeftCorner(1, core) = pt.S.block(keep, 0, 1, core);
  y.bottomLeftCorner(1, core) = pt.Y.block(keep, 0, 1, core);
  s(core, core) = pt.S(keep, keep);
  y(core, core) = pt.Y(keep, keep);
  return SlicePoint{s, y,
                    SliceParams::for_kind(1, m, pt.params.o1.mu,
                                          double(mu2_sign) * pt.params.o2.mu)};
}

}  // namespace

SlicePoint extract_phi1(const SlicePoint& pt) { return d0_minor(pt, 0, +1); }
SlicePoint extract_phi2(const SlicePoint& pt) { return d0_minor(pt, 1, -1); }

SlicePoint extend_phi_inverse(const SlicePoint& core, const Eigen::RowVectorXcd& v,
                              cx mu1, cx mu2, int mu2_sign) {
  if (core.params.kind() != 2) throw NotCanonical("core must be a kind-2 point");
  if (!is_companion_shaped(core.S, 1e-7)) throw NotCanonical("core S must be companion");
  const int c = core.n();
  if (v.size() != c) throw Error("border row has the wrong length");
  const cx m2 = double(mu2_sign) * mu2;
  Matrix s = Matrix::Zero(c + 1, c + 1), y = Matrix::Zero(c + 1, c + 1);
  s.topLeftCorner(c, c) = core.S;
  y.topLeftCorner(c, c) = core.Y;
  s(c, c - 1) = cx(1);
  s(c, c) = mu1 + m2;
  y.block(c, 0, 1, c) = v;
  y(c, c) = 0.5 * (mu1 - m2);
  return SlicePoint{s, y, SliceParams::for_kind(1, c / 2, mu1, m2)};
}

SlicePoint to_canonical_form(const SlicePoint& pt, double tol) {
  const int kind = pt.params.kind();
  if (kind == 2) {
    if (!is_companion_shaped(pt.S, tol)) throw NotCanonical("S is not companion");
    return pt;
  }
  if (kind != 0 && kind != 1) throw ShapeViolation("empty-regime parameters");
  if (!is_companion_shaped(pt.S, tol))
    throw NotCanonical("basis change is defined for the companion presentation");
  const cx mu1 = pt.params.o1.mu, mu2 = pt.params.o2.mu;

  Polynomial rest = companion_poly(pt.S);
  std::vector<cx> strip{mu1 + mu2};
  if (kind == 0) strip.push_back(mu1 - mu2);
  for (cx a : strip) {
    if (std::abs(rest(a)) > tol * eval_scale(rest, a))
      throw ShapeViolation("characteristic polynomial misses a required root");
    rest = poly_divmod(rest, Polynomial({-a, cx(1)})).first;
  }

  const Matrix t = border_basis(pt.params, rest);
  const Matrix tinv = t.inverse();
  return SlicePoint{tinv * pt.S * t, tinv * pt.Y * t, pt.params};
}

SlicePoint to_companion_form(const SlicePoint& pt, double tol) {
  const int kind = pt.params.kind();
  if (kind == 2) {
    if (!is_companion_shaped(pt.S, tol)) throw NotCanonical("S is not companion");
    return pt;
  }
  if (!canonical_shape(pt, tol)) throw NotCanonical("point is not in canonical form");
  const int core = 2 * pt.params.m();
  const Polynomial q_even = companion_poly(pt.S.topLeftCorner(core, core));
  const Matrix t = border_basis(pt.params, q_even);
  return SlicePoint{t * pt.S * t.inverse(), t * pt.Y * t.inverse(), pt.params};
}

}  // namespace dkm
