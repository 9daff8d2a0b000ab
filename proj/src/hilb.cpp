#include "dkm/hilb.hpp"

#include <cmath>

namespace dkm {

namespace {

Polynomial pc(cx v) { return Polynomial::constant(v); }

}  // namespace

AffineModel d2_model(cx mu1, cx mu2) {
  AffineModel m;
  m.name = "d2";
  m.kdim = 3;
  m.coord_names = {"a", "c"};
  const cx tau = mu1 * mu1 - mu2 * mu2;
  const cx sum = 0.5 * (mu1 * mu1 + mu2 * mu2);
  m.generators.push_back([tau, sum](const std::vector<Polynomial>& w, const Polynomial& z) {
    const Polynomial &a = w[0], &c = w[1];
    return a * a - z * c * c + z * cx(0.25) + c * tau - pc(sum);
  });
  return m;
}

AffineModel d1_model(cx mu1, cx mu2) {
  AffineModel m;
  m.name = "d1";
  m.kdim = 3;
  m.coord_names = {"y", "z"};
  const cx alpha = mu1 - mu2;
  m.generators.push_back([alpha](const std::vector<Polynomial>& w, const Polynomial& z) {
    const Polynomial &y = w[0], &zz = w[1];
    return y * y * z - zz * zz + pc(cx(0.25)) + y * alpha;
  });
  return m;
}

AffineModel d0_model() {
  AffineModel m;
  m.name = "d0";
  m.kdim = 3;
  m.coord_names = {"t", "w"};
  m.generators.push_back([](const std::vector<Polynomial>& w, const Polynomial& z) {
    const Polynomial &t = w[0], &ww = w[1];
    return t * t - z * ww * ww + ww;
  });
  return m;
}

AffineModel surface_model(int kind, cx mu1, cx mu2) {
  switch (kind) {
    case 2: return d2_model(mu1, mu2);
    case 1: return d1_model(mu1, mu2);
    case 0: return d0_model();
    default: throw Error("surface kind must be 0, 1 or 2");
  }
}

AffineModel c2_xy_model() {
  AffineModel m;
  m.name = "c2_xy";
  m.kdim = 3;
  m.coord_names = {"x", "y"};
  m.generators.push_back([](const std::vector<Polynomial>& w, const Polynomial& z) {
    return w[0] * w[1] - z;
  });
  return m;
}

AffineModel cstar_model() {
  AffineModel m;
  m.name = "cstar";
  m.kdim = 3;
  m.coord_names = {"x", "y"};
  m.generators.push_back([](const std::vector<Polynomial>& w, const Polynomial&) {
    return w[0] * w[1] - pc(cx(1));
  });
  return m;
}

AffineModel double_cover_model() {
  AffineModel m;
  m.name = "double_cover";
  m.kdim = 3;
  m.coord_names = {"x", "y"};
  m.generators.push_back([](const std::vector<Polynomial>& w, const Polynomial& z) {
    return w[0] * w[0] - z * w[1] * w[1] - pc(cx(1));
  });
  return m;
}

double hilb_residual(const AffineModel& model, const HilbPoint& pt) {
  const Polynomial z = Polynomial::identity();
  double worst = 0.0;
  for (const auto& f : model.generators) {
    const Polynomial value = poly_mod(f(pt.coords, z), pt.q);
    worst = std::max(worst, value.norm());
  }
  return worst;
}

double point_residual(const AffineModel& model, const std::vector<cx>& point) {
  if (static_cast<int>(point.size()) != model.kdim)
    throw Error("point dimension does not match the model");
  std::vector<Polynomial> w;
  for (int i = 0; i + 1 < model.kdim; ++i) w.push_back(pc(point[i]));
  const Polynomial z = pc(point.back());
  double worst = 0.0;
  for (const auto& f : model.generators) worst = std::max(worst, f(w, z).norm());
  return worst;
}

HilbPoint gather(const AffineModel& model, const std::vector<std::vector<cx>>& points,
                 double separation, double tol) {
  if (points.empty()) throw Error("gather needs at least one point");
  for (const auto& p : points)
    if (point_residual(model, p) > tol)
      throw PointOffVariety("input point violates the defining equations");
  std::vector<cx> bases;
  for (const auto& p : points) bases.push_back(p.back());
  for (size_t i = 0; i < bases.size(); ++i)
    for (size_t j = i + 1; j < bases.size(); ++j)
      if (std::abs(bases[i] - bases[j]) < separation)
        throw NodesTooClose("base projections are too close to interpolate");

  HilbPoint pt;
  pt.q = Polynomial::from_roots(bases);
  for (int c = 0; c + 1 < model.kdim; ++c) {
    std::vector<std::pair<cx, cx>> nodes;
    for (const auto& p : points) nodes.emplace_back(p.back(), p[c]);
    pt.coords.push_back(lagrange_interpolate(nodes, separation));
  }
  return pt;
}

std::vector<std::vector<cx>> scatter(const AffineModel& model, const HilbPoint& pt,
                                     double tol) {
  const std::vector<cx> rts = roots(pt.q);
  double maxr = 0.0;
  for (cx r : rts) maxr = std::max(maxr, std::abs(r));
  const double radius = 1e-6 * (1.0 + maxr);
  for (size_t i = 0; i < rts.size(); ++i)
    for (size_t j = i + 1; j < rts.size(); ++j)
      if (std::abs(rts[i] - rts[j]) <= radius)
        throw ConfluentRoots("q has confluent roots; only residual checks apply");

  std::vector<std::vector<cx>> out;
  for (cx r : rts) {
    std::vector<cx> p;
    for (const auto& w : pt.coords) p.push_back(w(r));
    p.push_back(r);
    if (point_residual(model, p) > tol)
      throw PointOffVariety("section value leaves the variety");
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

struct RootData {
  std::vector<cx> x;      // roots of q, pairwise distinct
  int m = 0;
};

RootData distinct_roots(const Polynomial& q) {
  RootData rd;
  rd.x = roots(q);
  rd.m = static_cast<int>(rd.x.size());
  double maxr = 0.0;
  for (cx r : rd.x) maxr = std::max(maxr, std::abs(r));
  const double radius = 1e-6 * (1.0 + maxr);
  for (int i = 0; i < rd.m; ++i)
    for (int j = i + 1; j < rd.m; ++j)
      if (std::abs(rd.x[i] - rd.x[j]) <= radius)
        throw ConfluentRoots("construction path needs distinct x_i");
  return rd;
}

// Columns 2i, 2i+1 hold the coefficients of g_i(z^2) and z g_i(z^2), where
// g_i is the Lagrange basis polynomial of the nodes (normalized) or the bare
// product of the other factors (unnormalized, for the bordered kinds where
// the border row must read (0,1,0,1,...)).
Matrix interleaved_basis(const std::vector<cx>& x, bool normalized) {
  const int m = static_cast<int>(x.size());
  Matrix c = Matrix::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    Polynomial g = Polynomial::constant(cx(1));
    cx denom(1);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      g = g * Polynomial({-x[j], cx(1)});
      denom *= x[i] - x[j];
    }
    if (normalized) g = g * (cx(1) / denom);
    const Polynomial even = g.inflate(2);
    for (int r = 0; r <= even.degree(); ++r) c(r, 2 * i) = even.coeff(r);
    for (int r = 0; r <= even.degree(); ++r) c(r + 1, 2 * i + 1) = even.coeff(r);
  }
  return c;
}

struct BlockData {
  cx a, b, c, y, z, u, v;  // per-root slice data; (y,z),(u,v) only for kinds 1,0
};

BlockData block_from_surface(int kind, cx x, const std::vector<cx>& w, cx mu1, cx mu2) {
  const cx tau = mu1 * mu1 - mu2 * mu2;
  const cx ap = mu1 + mu2, am = mu1 - mu2;
  BlockData d{};
  if (kind == 2) {
    d.a = w[0];
    d.c = w[1];
    d.b = tau - d.c * x;
    return d;
  }
  if (kind == 1) {
    d.y = w[0];
    d.z = w[1];
  } else {
    // kind 0: recover the two border rows from (t, w)
    const cx t = w[0], ww = w[1];
    d.y = t - am * ww;
    d.u = t - ap * ww;
    d.z = (am * am - x) * ww + am * d.y + 0.5;
    d.v = (ap * ap - x) * ww + ap * d.u + 0.5;
  }
  d.c = -ap * d.y - d.z;
  d.a = ap * d.z + d.y * x + 0.5 * am;
  d.b = tau - d.c * x;
  return d;
}

}  // namespace

SlicePoint hilb_to_slice(int kind, const HilbPoint& pt, cx mu1, cx mu2, double tol) {
  if (kind < 0 || kind > 2) throw Error("kind must be 0, 1 or 2");
  if (kind == 0 && std::abs(mu2) < 1e-12)
    throw DegenerateParameter("kind 0 needs mu2 != 0");
  const AffineModel model = surface_model(kind, mu1, mu2);
  if (hilb_residual(model, pt) > tol)
    throw PointOffVariety("coordinate polynomials violate the congruence");

  const RootData rd = distinct_roots(pt.q);
  const int m = rd.m;
  const int border = (kind == 2) ? 0 : (kind == 1 ? 1 : 2);
  const int n = 2 * m + border;
  const cx ap = mu1 + mu2, am = mu1 - mu2;

  Matrix y_blk = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    std::vector<cx> w;
    for (const auto& c : pt.coords) w.push_back(c(rd.x[i]));
    const BlockData d = block_from_surface(kind, rd.x[i], w, mu1, mu2);
    y_blk(2 * i, 2 * i) = d.a;
    y_blk(2 * i, 2 * i + 1) = d.b;
    y_blk(2 * i + 1, 2 * i) = d.c;
    y_blk(2 * i + 1, 2 * i + 1) = -d.a;
    if (kind <= 1) {
      y_blk(2 * m, 2 * i) = d.y;
      y_blk(2 * m, 2 * i + 1) = d.z;
    }
    if (kind == 0) {
      y_blk(2 * m + 1, 2 * i) = d.u;
      y_blk(2 * m + 1, 2 * i + 1) = d.v;
    }
  }
  if (kind <= 1) y_blk(2 * m, 2 * m) = 0.5 * am;
  if (kind == 0) {
    y_blk(2 * m + 1, 2 * m + 1) = 0.5 * ap;
  }

  Matrix basis = Matrix::Identity(n, n);
  basis.topLeftCorner(2 * m, 2 * m) = interleaved_basis(rd.x, /*normalized=*/kind == 2);
  const Matrix y_out = basis * y_blk * basis.inverse();

  // The S side is exact: companion of q(z^2) for kind 2, bordered otherwise.
  const Polynomial big_q = pt.q.inflate(2);
  Matrix s_out = Matrix::Zero(n, n);
  s_out.topLeftCorner(2 * m, 2 * m) = companion(big_q).matrix();
  if (kind <= 1 && border >= 1) {
    s_out(2 * m, 2 * m - 1) = cx(1);
    s_out(2 * m, 2 * m) = ap;
  }
  if (kind == 0) {
    s_out(2 * m + 1, 2 * m - 1) = cx(1);
    s_out(2 * m + 1, 2 * m + 1) = am;
  }

  SliceParams params = SliceParams::for_kind(kind, m, mu1, mu2);
  return SlicePoint{s_out, y_out, params};
}

HilbPoint slice_to_hilb(const SlicePoint& pt, double tol) {
  const int kind = pt.params.kind();
  if (kind < 0) throw ShapeViolation("empty-regime parameters");
  if (kind == 0 && std::abs(pt.params.o2.mu) < 1e-12)
    throw DegenerateParameter("kind 0 needs mu2 != 0");
  SlicePoint can = is_canonical(pt, tol) ? pt : to_canonical_form(pt, tol);
  const int m = pt.params.m();
  const cx mu1 = pt.params.o1.mu, mu2 = pt.params.o2.mu;
  const cx ap = mu1 + mu2, am = mu1 - mu2;

  const Polynomial core_poly = companion_poly(can.S.topLeftCorner(2 * m, 2 * m), tol);
  if (core_poly.odd_coeff_norm() > tol * std::max(1.0, core_poly.norm()))
    throw ShapeViolation("core polynomial is not even");
  HilbPoint out;
  out.q = core_poly.even_part();
  const RootData rd = distinct_roots(out.q);

  Matrix basis = Matrix::Identity(can.n(), can.n());
  basis.topLeftCorner(2 * m, 2 * m) = interleaved_basis(rd.x, /*normalized=*/kind == 2);
  const Matrix y_blk = basis.inverse() * can.Y * basis;

  std::vector<std::pair<cx, cx>> n1, n2;
  for (int i = 0; i < m; ++i) {
    if (kind == 2) {
      n1.emplace_back(rd.x[i], y_blk(2 * i, 2 * i));          // a(x_i)
      n2.emplace_back(rd.x[i], y_blk(2 * i + 1, 2 * i));      // c(x_i)
    } else if (kind == 1) {
      n1.emplace_back(rd.x[i], y_blk(2 * m, 2 * i));          // y(x_i)
      n2.emplace_back(rd.x[i], y_blk(2 * m, 2 * i + 1));      // z(x_i)
    } else {
      const cx y = y_blk(2 * m, 2 * i), u = y_blk(2 * m + 1, 2 * i);
      n1.emplace_back(rd.x[i], (ap * y - am * u) / (2.0 * mu2));  // t(x_i)
      n2.emplace_back(rd.x[i], (y - u) / (2.0 * mu2));            // w(x_i)
    }
  }
  const double sep = 0.0;  // distinctness already enforced by the cluster radius
  out.coords.push_back(lagrange_interpolate(n1, sep));
  out.coords.push_back(lagrange_interpolate(n2, sep));
  return out;
}

NakajimaTriple nakajima_triple(const HilbPoint& pt, double tol) {
  if (hilb_residual(c2_xy_model(), pt) > tol)
    throw PointOffVariety("x(z) y(z) = z fails mod q");
  NakajimaTriple t;
  t.s = companion(pt.q).matrix();
  t.b1 = poly_eval_matrix(pt.coords[0], t.s);
  t.b2 = poly_eval_matrix(pt.coords[1], t.s);
  t.product_residual = sup_norm(t.b1 * t.b2 - t.s);
  t.commutator_norm = sup_norm(t.b1 * t.b2 - t.b2 * t.b1);
  return t;
}

RationalMapData rational_map_from_D1(const HilbPoint& pt, double tol) {
  if (hilb_residual(double_cover_model(), pt) > tol)
    throw PointOffVariety("x^2 - z y^2 = 1 fails mod q");
  RationalMapData data;
  data.q2 = pt.q.inflate(2);
  const Polynomial xe = pt.coords[0].inflate(2);
  const Polynomial yo = pt.coords[1].inflate(2) * Polynomial::identity();
  data.p = xe + yo;
  return data;
}

HilbPoint rational_map_to_hilb(const RationalMapData& data) {
  HilbPoint pt;
  pt.q = data.q2.even_part();
  pt.coords = {data.p.even_part(), data.p.odd_part()};
  return pt;
}

HilbPoint d1_to_double_cover(const HilbPoint& pt) {
  HilbPoint out;
  out.q = pt.q;
  out.coords = {pt.coords[1] * cx(2), pt.coords[0] * cx(2)};
  return out;
}

}  // namespace dkm
