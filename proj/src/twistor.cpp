#include "dkm/twistor.hpp"

#include <cmath>

namespace dkm {

namespace {

void check_chart(cx zeta) {
  if (std::abs(zeta) < 1e-12) throw ChartBoundary("transition undefined at zeta = 0");
}

void check_exp_arg(double a) {
  if (a > 300.0) throw NormTooLarge("exponential argument too large for the chart band");
}

}  // namespace

Matrix d_matrix(int n, cx zeta) {
  check_chart(zeta);
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = std::pow(zeta, -n + 1 + 2 * i);
  return d;
}

cx mu_eval(const MuSection& ms, cx zeta) {
  return ms.mu + 2.0 * ms.r * zeta - std::conj(ms.mu) * zeta * zeta;
}

MuSection mu_other_chart(const MuSection& ms) { return MuSection{-std::conj(ms.mu), ms.r}; }

double o2r_reality_residual(const std::vector<cx>& coeffs, int r) {
  if (static_cast<int>(coeffs.size()) != 2 * r + 1)
    throw Error("a degree-2r section needs 2r + 1 coefficients");
  double worst = 0.0;
  for (int j = 0; j <= 2 * r; ++j) {
    const double sign = ((r + j) % 2 == 0) ? 1.0 : -1.0;
    worst = std::max(worst, std::abs(coeffs[2 * r - j] - sign * std::conj(coeffs[j])));
  }
  return worst;
}

ChartN transition_N(const ChartN& chart) {
  check_chart(chart.zeta);
  check_exp_arg(sup_norm(chart.s) / std::abs(chart.zeta));
  const int n = static_cast<int>(chart.s.rows());
  const Matrix d = d_matrix(n, chart.zeta);
  const Matrix dinv = d_matrix(n, cx(1) / chart.zeta);
  ChartN out;
  out.zeta = cx(1) / chart.zeta;
  out.s = d * chart.s * dinv / (chart.zeta * chart.zeta);
  out.g = chart.g * matrix_exp(-chart.s / chart.zeta) * dinv;
  return out;
}

ChartN transition_N_back(const ChartN& chart) {
  check_chart(chart.zeta);
  check_exp_arg(sup_norm(chart.s) / std::abs(chart.zeta));
  const int n = static_cast<int>(chart.s.rows());
  const Matrix d = d_matrix(n, chart.zeta);
  const Matrix dinv = d_matrix(n, cx(1) / chart.zeta);
  ChartN out;
  out.zeta = cx(1) / chart.zeta;
  out.s = d * chart.s * dinv / (chart.zeta * chart.zeta);
  out.g = chart.g * matrix_exp(chart.s / chart.zeta) * dinv;
  return out;
}

ChartSY transition_SY(const ChartSY& chart) {
  check_chart(chart.zeta);
  check_exp_arg(sup_norm(chart.s) / std::abs(chart.zeta));
  const int n = static_cast<int>(chart.s.rows());
  const Matrix d = d_matrix(n, chart.zeta);
  const Matrix dinv = d_matrix(n, cx(1) / chart.zeta);
  const Matrix e = matrix_exp(chart.s / chart.zeta);
  const Matrix einv = matrix_exp(-chart.s / chart.zeta);
  const cx z2 = chart.zeta * chart.zeta;
  ChartSY out;
  out.zeta = cx(1) / chart.zeta;
  out.s = d * chart.s * dinv / z2;
  out.y = d * e * (chart.y / z2) * einv * dinv;
  return out;
}

ChartSY transition_SY_back(const ChartSY& chart) {
  check_chart(chart.zeta);
  check_exp_arg(sup_norm(chart.s) / std::abs(chart.zeta));
  const int n = static_cast<int>(chart.s.rows());
  const Matrix d = d_matrix(n, chart.zeta);
  const Matrix dinv = d_matrix(n, cx(1) / chart.zeta);
  const Matrix e = matrix_exp(chart.s / chart.zeta);
  const Matrix einv = matrix_exp(-chart.s / chart.zeta);
  const cx z2 = chart.zeta * chart.zeta;
  ChartSY out;
  out.zeta = cx(1) / chart.zeta;
  out.s = d * chart.s * dinv / z2;
  out.y = d * einv * (chart.y / z2) * e * dinv;
  return out;
}

D2Chart d2_chart_transition(cx zeta, const D2Chart& p) {
  check_chart(zeta);
  if (std::abs(p.lambda) < 1e-12) throw ChartBoundary("lambda = 0 is outside the chart");
  const cx arg = 2.0 * p.lambda / zeta;
  check_exp_arg(std::abs(arg));
  const cx ch = std::cosh(arg), sh = std::sinh(arg);
  const cx z2 = zeta * zeta;
  D2Chart out;
  out.lambda = p.lambda / z2;
  out.a = (p.a * ch + p.c * p.lambda * sh) / z2;
  out.c = (p.a / p.lambda) * sh + p.c * ch;
  return out;
}

D1Chart d1_chart_transition(cx zeta, const D1Chart& p) {
  check_chart(zeta);
  if (std::abs(p.lambda) < 1e-12) throw ChartBoundary("lambda = 0 is outside the chart");
  const cx arg = 2.0 * p.lambda / zeta;
  check_exp_arg(std::abs(arg));
  const cx ch = std::cosh(arg), sh = std::sinh(arg);
  const cx z2 = zeta * zeta;
  D1Chart out;
  out.lambda = p.lambda / z2;
  out.y = z2 * (p.y * ch - (p.z / p.lambda) * sh);
  out.z = p.z * ch - p.y * p.lambda * sh;
  return out;
}

D2GeneralChart d2_chart_transition_general(cx zeta, const D2GeneralChart& p) {
  check_chart(zeta);
  if (std::abs(p.lambda) < 1e-12) throw ChartBoundary("lambda = 0 is outside the chart");
  const cx arg = 2.0 * p.lambda / zeta;
  check_exp_arg(std::abs(arg));
  const cx ch = std::cosh(arg), sh = std::sinh(arg);
  const cx z2 = zeta * zeta;
  D2GeneralChart out;
  out.lambda = p.lambda / z2;
  out.a = (p.a * ch + (p.w / p.lambda) * sh) / z2;
  out.w = (p.a * p.lambda * sh + p.w * ch) / (z2 * z2);
  return out;
}

D1GeneralChart d1_chart_transition_general(cx zeta, const D1GeneralChart& p) {
  check_chart(zeta);
  if (std::abs(p.lambda) < 1e-12) throw ChartBoundary("lambda = 0 is outside the chart");
  const cx arg = 2.0 * p.lambda / zeta;
  check_exp_arg(std::abs(arg));
  const cx z2 = zeta * zeta;
  const cx sp = std::exp(-arg) * (p.q + p.lambda * p.z) / z2;
  const cx sm = std::exp(arg) * (p.q - p.lambda * p.z) / z2;
  D1GeneralChart out;
  out.lambda = p.lambda / z2;
  out.q = 0.5 * (sp + sm);
  out.z = 0.5 * (sp - sm) / out.lambda;
  return out;
}

D0Chart d0_chart_transition(cx zeta, const D0Chart& p) {
  check_chart(zeta);
  if (std::abs(p.lambda) < 1e-12) throw ChartBoundary("lambda = 0 is outside the chart");
  const cx arg = 2.0 * p.lambda / zeta;
  check_exp_arg(std::abs(arg));
  const cx x = p.lambda * p.lambda;
  const cx sp = std::exp(arg) * (x * p.w - 0.5 + p.t * p.lambda);
  const cx sm = std::exp(-arg) * (x * p.w - 0.5 - p.t * p.lambda);
  D0Chart out;
  out.lambda = p.lambda / (zeta * zeta);
  const cx xt = out.lambda * out.lambda;
  out.w = (0.5 * (sp + sm) + 0.5) / xt;
  out.t = 0.5 * (sp - sm) / out.lambda;
  return out;
}

double quadric_check_d2(cx a, cx c, cx x, cx mu1, cx mu2) {
  const cx tau = mu1 * mu1 - mu2 * mu2;
  const cx w = x * c - 0.5 * tau;
  const cx ap = mu1 + mu2, am = mu1 - mu2;
  return std::abs(w * w - x * a * a - 0.25 * (x - am * am) * (x - ap * ap));
}

double quadric_check_d1(cx y, cx z, cx x, cx mu1, cx mu2) {
  const cx am = mu1 - mu2;
  const cx q = y * x + 0.5 * am;
  return std::abs(q * q - x * z * z - 0.25 * (am * am - x));
}

double quadric_check_d0(cx t, cx w, cx x) {
  const cx s = x * w - 0.5;
  return std::abs(s * s - x * t * t - 0.25);
}

}  // namespace dkm
