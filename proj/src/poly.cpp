#include "dkm/poly.hpp"

#include <algorithm>
#include <cmath>

namespace dkm {

Polynomial::Polynomial(std::vector<cx> coeffs, double tol) : coeffs_(std::move(coeffs)) {
  for (cx c : coeffs_) {
    if (!is_finite(c)) throw Error("polynomial coefficient is not finite");
  }
  double scale = 0.0;
  for (cx c : coeffs_) scale = std::max(scale, std::abs(c));
  const double cut = tol * std::max(1.0, scale);
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<cx>& roots) {
  std::vector<cx> c{cx(1)};
  for (cx r : roots) {
    c.push_back(cx(0));
    for (int i = static_cast<int>(c.size()) - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] *= -r;
  }
  // Build with tol=0: the product of exact linear factors is kept verbatim.
  return Polynomial(std::move(c), 0.0);
}

bool Polynomial::is_monic(double tol) const {
  return !coeffs_.empty() && std::abs(coeffs_.back() - cx(1)) <= tol;
}

double Polynomial::norm() const {
  double m = 0.0;
  for (cx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cx Polynomial::operator()(cx z) const {
  cx acc(0);
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) acc = acc * z + coeffs_[i];
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<cx> c(std::max(coeffs_.size(), rhs.coeffs_.size()), cx(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
  return Polynomial(std::move(c), 0.0);
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<cx> c(coeffs_.size() + rhs.coeffs_.size() - 1, cx(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(c), 0.0);
}

Polynomial Polynomial::operator*(cx s) const {
  std::vector<cx> c = coeffs_;
  for (cx& v : c) v *= s;
  return Polynomial(std::move(c), 0.0);
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<cx> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * cx(double(i));
  return Polynomial(std::move(c), 0.0);
}

Polynomial Polynomial::inflate(int k) const {
  if (is_zero()) return Polynomial();
  std::vector<cx> c(k * (coeffs_.size() - 1) + 1, cx(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[k * i] = coeffs_[i];
  return Polynomial(std::move(c), 0.0);
}

Polynomial Polynomial::even_part() const {
  std::vector<cx> c;
  for (size_t i = 0; i < coeffs_.size(); i += 2) c.push_back(coeffs_[i]);
  return Polynomial(std::move(c), 0.0);
}

Polynomial Polynomial::odd_part() const {
  std::vector<cx> c;
  for (size_t i = 1; i < coeffs_.size(); i += 2) c.push_back(coeffs_[i]);
  return Polynomial(std::move(c), 0.0);
}

double Polynomial::odd_coeff_norm() const {
  double m = 0.0;
  for (size_t i = 1; i < coeffs_.size(); i += 2) m = std::max(m, std::abs(coeffs_[i]));
  return m;
}

bool Polynomial::almost_equal(const Polynomial& rhs, double tol) const {
  const int d = std::max(degree(), rhs.degree());
  for (int i = 0; i <= d; ++i)
    if (std::abs(coeff(i) - rhs.coeff(i)) > tol) return false;
  return true;
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& q) {
  if (q.degree() < 1 || !q.is_monic())
    throw InvalidModulus("divisor must be monic of degree >= 1");
  std::vector<cx> rem(p.coeffs());
  const int dq = q.degree();
  const int dp = p.degree();
  if (dp < dq) return {Polynomial(), p};
  std::vector<cx> quot(dp - dq + 1, cx(0));
  for (int i = dp; i >= dq; --i) {
    const cx f = rem[i];
    if (f == cx(0)) continue;
    quot[i - dq] = f;
    rem[i] = cx(0);
    for (int j = 0; j < dq; ++j) rem[i - dq + j] -= f * q.coeff(j);
  }
  rem.resize(dq);
  return {Polynomial(std::move(quot), 0.0), Polynomial(std::move(rem), 0.0)};
}

Polynomial poly_mod(const Polynomial& p, const Polynomial& q) {
  return poly_divmod(p, q).second;
}

Polynomial lagrange_interpolate(const std::vector<std::pair<cx, cx>>& nodes,
                                double separation) {
  const size_t m = nodes.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (std::abs(nodes[i].first - nodes[j].first) < separation)
        throw NodesTooClose("interpolation nodes closer than the separation bound");
  Polynomial acc;
  for (size_t i = 0; i < m; ++i) {
    Polynomial basis = Polynomial::constant(cx(1));
    cx denom(1);
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      basis = basis * Polynomial({-nodes[j].first, cx(1)});
      denom *= nodes[i].first - nodes[j].first;
    }
    acc = acc + basis * (nodes[i].second / denom);
  }
  return acc;
}

std::vector<cx> roots(const Polynomial& p, double tol, int max_iter) {
  const int n = p.degree();
  if (n < 1) throw Error("root finding needs degree >= 1");
  // Normalize to a monic coefficient vector.
  std::vector<cx> a(p.coeffs());
  const cx lead = a.back();
  for (cx& c : a) c /= lead;

  // Cauchy bound for the root radius, centre at the coefficient centroid.
  const cx centre = -a[n - 1] / cx(double(n));
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0 / (n - i)));
  radius = std::max(0.5, 1.2 * radius);

  std::vector<cx> z(n);
  for (int k = 0; k < n; ++k) {
    const double th = 6.283185307179586 * k / n + 0.4;
    z[k] = centre + radius * cx(std::cos(th), std::sin(th));
  }

  Polynomial monic(a, 0.0);
  Polynomial dmonic = monic.derivative();
  const double pnorm = std::max(monic.norm(), 1e-300);

  // Aberth-Ehrlich sweeps until the update stagnates near machine precision.
  for (int iter = 0; iter < max_iter; ++iter) {
    double step = 0.0;
    for (int k = 0; k < n; ++k) {
      const cx pv = monic(z[k]);
      if (std::abs(pv) == 0.0) continue;
      const cx dv = dmonic(z[k]);
      cx newton = (dv == cx(0)) ? cx(0.5, 0.5) : pv / dv;
      cx repel(0);
      for (int j = 0; j < n; ++j)
        if (j != k) repel += cx(1) / (z[k] - z[j]);
      const cx denom = cx(1) - newton * repel;
      const cx delta = (std::abs(denom) < 1e-300) ? newton : newton / denom;
      z[k] -= delta;
      step = std::max(step, std::abs(delta));
    }
    if (step < 1e-14 * (1.0 + radius)) break;
  }

  for (int k = 0; k < n; ++k) {
    // Residual gate relative to the coefficient norm; multiple roots pass it
    // at distance ~ eps^(1/mult), well inside the clustering radius.
    const double res = std::abs(monic(z[k]));
    const double growth = std::max(1.0, std::pow(std::abs(z[k]), n));
    if (res > std::max(tol, 1e4 * 2.2e-16) * pnorm * growth)
      throw RootFindingFailed("simultaneous iteration did not meet the residual gate");
  }
  std::sort(z.begin(), z.end(), [](cx a_, cx b_) {
    if (a_.real() != b_.real()) return a_.real() < b_.real();
    return a_.imag() < b_.imag();
  });
  return z;
}

std::vector<std::pair<cx, int>> cluster_roots(const std::vector<cx>& rts, double radius) {
  if (radius < 0.0) {
    double m = 0.0;
    for (cx r : rts) m = std::max(m, std::abs(r));
    radius = 1e-6 * (1.0 + m);
  }
  std::vector<std::pair<cx, int>> out;
  std::vector<bool> used(rts.size(), false);
  for (size_t i = 0; i < rts.size(); ++i) {
    if (used[i]) continue;
    cx sum = rts[i];
    int count = 1;
    used[i] = true;
    for (size_t j = i + 1; j < rts.size(); ++j) {
      if (!used[j] && std::abs(rts[j] - rts[i]) <= radius) {
        sum += rts[j];
        ++count;
        used[j] = true;
      }
    }
    out.emplace_back(sum / cx(double(count)), count);
  }
  return out;
}

cx elementary_symmetric(const std::vector<cx>& values, int l) {
  if (l < 0 || l > static_cast<int>(values.size()))
    throw IndexError("elementary symmetric index out of range");
  std::vector<cx> e(l + 1, cx(0));
  e[0] = cx(1);
  for (size_t t = 0; t < values.size(); ++t)
    for (int i = std::min<int>(l, static_cast<int>(t) + 1); i >= 1; --i)
      e[i] += e[i - 1] * values[t];
  return e[l];
}

Eigen::MatrixXcd vandermonde(const std::vector<cx>& x) {
  const int m = static_cast<int>(x.size());
  Eigen::MatrixXcd V(m, m);
  for (int i = 0; i < m; ++i) {
    cx p(1);
    for (int j = 0; j < m; ++j) {
      V(i, j) = p;
      p *= x[i];
    }
  }
  return V;
}

Eigen::MatrixXcd vandermonde_inverse(const std::vector<cx>& x, double separation) {
  const int m = static_cast<int>(x.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(x[i] - x[j]) < separation)
        throw NodesTooClose("Vandermonde nodes closer than the separation bound");
  Eigen::MatrixXcd W(m, m);
  for (int j = 0; j < m; ++j) {
    std::vector<cx> rest;
    rest.reserve(m - 1);
    cx denom(1);
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      rest.push_back(x[k]);
      denom *= x[j] - x[k];
    }
    for (int i = 0; i < m; ++i) {
      const double sign = ((m - 1 - i) % 2 == 0) ? 1.0 : -1.0;
      W(i, j) = sign * elementary_symmetric(rest, m - 1 - i) / denom;
    }
  }
  return W;
}

}  // namespace dkm
