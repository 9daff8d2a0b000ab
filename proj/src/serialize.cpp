#include "dkm/serialize.hpp"

#include <chrono>

namespace dkm {

nlohmann::json to_json(cx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cx cx_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("complex scalar must be a [re, im] pair");
  const cx z(j[0].get<double>(), j[1].get<double>());
  if (!is_finite(z)) throw Error("complex scalar is not finite");
  return z;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (cx c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Polynomial poly_from_json(const nlohmann::json& j) {
  std::vector<cx> c;
  for (const auto& e : j) c.push_back(cx_from_json(e));
  return Polynomial(std::move(c), 0.0);
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const int n = static_cast<int>(j.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(j[i].size()) != n) throw Error("matrix document must be square");
    for (int c = 0; c < n; ++c) m(i, c) = cx_from_json(j[i][c]);
  }
  return m;
}

nlohmann::json to_json(const SlicePoint& pt) {
  return {{"type", "SlicePoint"},
          {"n", pt.n()},
          {"mu1", to_json(pt.params.o1.mu)},
          {"k1", pt.params.o1.k},
          {"l1", pt.params.o1.l},
          {"mu2", to_json(pt.params.o2.mu)},
          {"k2", pt.params.o2.k},
          {"l2", pt.params.o2.l},
          {"S", to_json(pt.S)},
          {"Y", to_json(pt.Y)}};
}

SlicePoint slice_point_from_json(const nlohmann::json& j) {
  OrbitSpec o1(cx_from_json(j.at("mu1")), j.at("k1").get<int>(), j.at("l1").get<int>());
  OrbitSpec o2(cx_from_json(j.at("mu2")), j.at("k2").get<int>(), j.at("l2").get<int>());
  return SlicePoint{matrix_from_json(j.at("S")), matrix_from_json(j.at("Y")),
                    SliceParams(o1, o2)};
}

nlohmann::json to_json(const HilbPoint& pt, const std::string& model, cx mu1, cx mu2) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : pt.coords) coords.push_back(to_json(c));
  return {{"type", "HilbPoint"}, {"model", model},      {"mu1", to_json(mu1)},
          {"mu2", to_json(mu2)}, {"q", to_json(pt.q)},  {"coords", coords}};
}

nlohmann::json to_json(const SurfacePoint& pt) {
  return std::visit(
      [](const auto& p) -> nlohmann::json {
        using T = std::decay_t<decltype(p)>;
        nlohmann::json j{{"type", "SurfacePoint"},
                         {"kind", p.params.kind},
                         {"mu1", to_json(p.params.mu1)},
                         {"mu2", to_json(p.params.mu2)}};
        if constexpr (std::is_same_v<T, D2Point>) {
          j["a"] = to_json(p.a);
          j["c"] = to_json(p.c);
          j["x"] = to_json(p.x);
        } else if constexpr (std::is_same_v<T, D1Point>) {
          j["x"] = to_json(p.x);
          j["y"] = to_json(p.y);
          j["z"] = to_json(p.z);
        } else {
          j["t"] = to_json(p.t);
          j["w"] = to_json(p.w);
          j["x"] = to_json(p.x);
        }
        return j;
      },
      pt);
}

SurfacePoint surface_point_from_json(const nlohmann::json& j) {
  const int kind = j.at("kind").get<int>();
  SurfaceParams params{kind, cx_from_json(j.at("mu1")), cx_from_json(j.at("mu2"))};
  switch (kind) {
    case 2:
      return D2Point{params, cx_from_json(j.at("a")), cx_from_json(j.at("c")),
                     cx_from_json(j.at("x"))};
    case 1:
      return D1Point{params, cx_from_json(j.at("x")), cx_from_json(j.at("y")),
                     cx_from_json(j.at("z"))};
    case 0:
      return D0Point{params, cx_from_json(j.at("t")), cx_from_json(j.at("w")),
                     cx_from_json(j.at("x"))};
    default:
      throw Error("surface kind must be 0, 1 or 2");
  }
}

namespace {

AffineModel model_by_name(const std::string& name, cx mu1, cx mu2) {
  if (name == "d2") return d2_model(mu1, mu2);
  if (name == "d1") return d1_model(mu1, mu2);
  if (name == "d0") return d0_model();
  if (name == "c2_xy") return c2_xy_model();
  if (name == "cstar") return cstar_model();
  if (name == "double_cover") return double_cover_model();
  throw Error("unknown model: " + name);
}

}  // namespace

RunReport verify_document(const nlohmann::json& doc) {
  RunReport rep;
  rep.command = "verify";
  const std::string type = doc.at("type").get<std::string>();
  rep.params = {{"type", type}};

  if (type == "SlicePoint") {
    const SlicePoint pt = slice_point_from_json(doc);
    rep.params["n"] = pt.n();
    const int nn = pt.n();
    const Matrix id = Matrix::Identity(nn, nn);
    const cx mu2 = pt.params.o2.mu;
    rep.checks.push_back(make_check(
        "S Y + Y S = tau I",
        sup_norm(pt.S * pt.Y + pt.Y * pt.S - pt.params.tau() * id), 1e-8));
    const Matrix b = pt.Y - 0.5 * pt.S;
    rep.checks.push_back(
        make_check("(Y - S/2)^2 = mu2^2 I", sup_norm(b * b - mu2 * mu2 * id), 1e-8));
    rep.checks.push_back(make_check("slice residual (incl. traces)", slice_residual(pt), 1e-8));
    try {
      const CharShape shape = char_shape(pt);
      rep.checks.push_back(make_check(
          "char poly factors as stated", 0.0, 1.0));
      rep.params["p"] = shape.p;
      rep.params["q"] = shape.q;
    } catch (const ShapeViolation& e) {
      rep.checks.push_back(Check{"char poly factors as stated", 1.0, 0.0, false});
    }
  } else if (type == "HilbPoint") {
    const cx mu1 = cx_from_json(doc.at("mu1")), mu2 = cx_from_json(doc.at("mu2"));
    const AffineModel model = model_by_name(doc.at("model").get<std::string>(), mu1, mu2);
    HilbPoint pt;
    pt.q = poly_from_json(doc.at("q"));
    for (const auto& c : doc.at("coords")) pt.coords.push_back(poly_from_json(c));
    rep.params["model"] = model.name;
    rep.params["n"] = pt.n();
    rep.checks.push_back(
        make_check("coordinate congruence mod q", hilb_residual(model, pt), 1e-8));
    rep.checks.push_back(make_check("q monic", pt.q.is_monic() ? 0.0 : 1.0, 0.0));
  } else if (type == "SurfacePoint") {
    const SurfacePoint pt = surface_point_from_json(doc);
    rep.params["kind"] = std::visit([](const auto& p) { return p.params.kind; }, pt);
    rep.checks.push_back(make_check("surface equation", surface_residual(pt), 1e-8));
  } else {
    rep.error = "unknown document type: " + type;
  }
  return rep;
}

}  // namespace dkm
