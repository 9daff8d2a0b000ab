#include "dkm/nahm.hpp"

#include <cmath>

namespace dkm {

PoleData regular_triple(int n) {
  if (n < 1) throw Error("representation dimension must be >= 1");
  const double j = 0.5 * (n - 1);
  Matrix jp = Matrix::Zero(n, n), j3 = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) j3(i, i) = cx(j - i);
  for (int i = 1; i < n; ++i) jp(i - 1, i) = cx(std::sqrt(double(i) * (2.0 * j + 1.0 - i)));
  const Matrix jm = jp.transpose();
  const cx im(0, 1);
  PoleData pd;
  pd.n = n;
  pd.a1 = im * 0.5 * (jp + jm);
  pd.a2 = im * (jp - jm) / (2.0 * im);
  pd.a3 = im * j3;
  return pd;
}

std::array<Matrix, 4> nahm_rhs(const NahmState& state) {
  const auto& T = state.T;
  auto br = [](const Matrix& a, const Matrix& b) { return a * b - b * a; };
  std::array<Matrix, 4> dt;
  dt[0] = Matrix::Zero(state.n(), state.n());
  dt[1] = br(T[2], T[3]) - br(T[0], T[1]);
  dt[2] = br(T[3], T[1]) - br(T[0], T[2]);
  dt[3] = br(T[1], T[2]) - br(T[0], T[3]);
  return dt;
}

namespace {

using Triple = std::array<Matrix, 3>;

Triple rhs3(const Matrix& t0, const Triple& y, double t_now) {
  NahmState s;
  s.t = t_now;
  s.T = {t0, y[0], y[1], y[2]};
  const auto d = nahm_rhs(s);
  return {d[1], d[2], d[3]};
}

Triple axpy(const Triple& y, double h, const std::vector<std::pair<double, const Triple*>>& terms) {
  Triple out = y;
  for (const auto& [w, k] : terms)
    for (int i = 0; i < 3; ++i) out[i] += (h * w) * (*k)[i];
  return out;
}

double triple_sup(const Triple& y) {
  double m = 0.0;
  for (const auto& a : y) m = std::max(m, sup_norm(a));
  return m;
}

}  // namespace

std::vector<NahmState> integrate(const NahmState& start, double t_end,
                                 const IntegrateOptions& opts) {
  if (start.t <= 0.0) throw Error("the flow lives on t > 0");
  const Matrix t0 = start.T[0];
  Triple y = {start.T[1], start.T[2], start.T[3]};
  double t = start.t;
  const double dir = (t_end >= t) ? 1.0 : -1.0;

  std::vector<NahmState> traj;
  traj.push_back(start);

  double h = dir * std::min(0.05 * t, std::abs(t_end - t));
  for (int step = 0; step < opts.max_steps; ++step) {
    if (dir * (t_end - t) <= 0.0) break;
    if (std::abs(h) > std::abs(t_end - t)) h = t_end - t;
    // near the pole the curvature scales like 1/t; keep steps below that scale
    if (std::abs(h) > 0.2 * t) h = dir * 0.2 * t;
    if (std::abs(h) < opts.h_min) throw StiffnessFailure("step size underflow");

    const Triple k1 = rhs3(t0, y, t);
    const Triple k2 = rhs3(t0, axpy(y, h, {{0.25, &k1}}), t + 0.25 * h);
    const Triple k3 = rhs3(t0, axpy(y, h, {{3.0 / 32, &k1}, {9.0 / 32, &k2}}), t + 0.375 * h);
    const Triple k4 = rhs3(
        t0,
        axpy(y, h, {{1932.0 / 2197, &k1}, {-7200.0 / 2197, &k2}, {7296.0 / 2197, &k3}}),
        t + 12.0 / 13 * h);
    const Triple k5 = rhs3(t0,
                           axpy(y, h, {{439.0 / 216, &k1},
                                       {-8.0, &k2},
                                       {3680.0 / 513, &k3},
                                       {-845.0 / 4104, &k4}}),
                           t + h);
    const Triple k6 = rhs3(t0,
                           axpy(y, h, {{-8.0 / 27, &k1},
                                       {2.0, &k2},
                                       {-3544.0 / 2565, &k3},
                                       {1859.0 / 4104, &k4},
                                       {-11.0 / 40, &k5}}),
                           t + 0.5 * h);

    const Triple y5 = axpy(y, h, {{16.0 / 135, &k1},
                                  {6656.0 / 12825, &k3},
                                  {28561.0 / 56430, &k4},
                                  {-9.0 / 50, &k5},
                                  {2.0 / 55, &k6}});
    const Triple y4 = axpy(y, h, {{25.0 / 216, &k1},
                                  {1408.0 / 2565, &k3},
                                  {2197.0 / 4104, &k4},
                                  {-1.0 / 5, &k5}});

    Triple diff;
    for (int i = 0; i < 3; ++i) diff[i] = y5[i] - y4[i];
    const double scale = opts.atol + opts.rtol * std::max(triple_sup(y), triple_sup(y5));
    const double err = triple_sup(diff) / scale;

    if (err <= 1.0) {
      t += h;
      y = y5;
      NahmState s;
      s.t = t;
      s.T = {t0, y[0], y[1], y[2]};
      traj.push_back(std::move(s));
    }
    const double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, factor));
  }
  if (dir * (t_end - t) > 1e-12) throw StiffnessFailure("step budget exhausted");
  return traj;
}

Matrix lax_matrix(const NahmState& state, cx zeta) {
  const cx im(0, 1);
  return (state.T[1] + im * state.T[2]) - 2.0 * im * state.T[3] * zeta +
         (state.T[1] - im * state.T[2]) * (zeta * zeta);
}

double spectral_drift(const std::vector<NahmState>& traj, const std::vector<cx>& zetas,
                      bool pole_normalized) {
  if (traj.size() < 2) return 0.0;
  const int n = traj.front().n();
  double drift = 0.0;
  for (cx zeta : zetas) {
    std::vector<cx> base;
    for (size_t s = 0; s < traj.size(); ++s) {
      Polynomial p = char_poly(lax_matrix(traj[s], zeta));
      std::vector<cx> c(n + 1);
      for (int i = 0; i <= n; ++i) {
        c[i] = p.coeff(i);
        if (pole_normalized) c[i] *= std::pow(traj[s].t, double(n - i));
      }
      if (s == 0) {
        base = c;
        continue;
      }
      for (int i = 0; i <= n; ++i) drift = std::max(drift, std::abs(c[i] - base[i]));
    }
  }
  return drift;
}

double skew_residual(const NahmState& state) {
  double m = 0.0;
  for (const auto& t : state.T) m = std::max(m, sup_norm(t + t.adjoint()));
  return m;
}

}  // namespace dkm
