#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "dkm/types.hpp"

namespace dkm {

// Dense univariate polynomial over C, coefficients stored by ascending power
// (coeffs[i] multiplies z^i). The zero polynomial has an empty coefficient
// vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cx> coeffs, double tol = kTol);
  static Polynomial constant(cx c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({cx(0), cx(1)}); }
  // Monic polynomial with the given roots (with multiplicity).
  static Polynomial from_roots(const std::vector<cx>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic(double tol = kTol) const;
  cx leading() const { return coeffs_.empty() ? cx(0) : coeffs_.back(); }
  cx coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : cx(0);
  }
  const std::vector<cx>& coeffs() const { return coeffs_; }

  // Sup-norm of the coefficient vector.
  double norm() const;

  cx operator()(cx z) const;  // Horner evaluation

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(cx s) const;
  Polynomial operator-() const { return *this * cx(-1); }

  Polynomial derivative() const;
  // Substitution z -> z^k (spreads coefficient i to position k*i).
  Polynomial inflate(int k) const;
  // Even/odd coefficient split: p(z) = even(z^2) + z*odd(z^2).
  Polynomial even_part() const;
  Polynomial odd_part() const;
  // Largest absolute value among coefficients of odd powers of z.
  double odd_coeff_norm() const;

  // Retrim with an explicit tolerance (relative to the sup-norm).
  Polynomial trimmed(double tol) const { return Polynomial(coeffs_, tol); }

  bool almost_equal(const Polynomial& rhs, double tol = kTol) const;

 private:
  std::vector<cx> coeffs_;
};

// Quotient and remainder with a monic divisor; the division is exact in the
// arithmetic model (no pivoting, the divisor's leading coefficient is 1).
// Throws InvalidModulus for a non-monic or constant divisor.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& q);
Polynomial poly_mod(const Polynomial& p, const Polynomial& q);

// Degree <= m-1 interpolant through m nodes (x_i, v_i). Nodes closer than
// `separation` throw NodesTooClose.
Polynomial lagrange_interpolate(const std::vector<std::pair<cx, cx>>& nodes,
                                double separation = kNodeSep);

// All roots (with multiplicity, as a flat list) by Aberth-Ehrlich simultaneous
// iteration. Residual gate |p(root)| <= tol * norm(p); failure to reach it
// within max_iter sweeps throws RootFindingFailed.
std::vector<cx> roots(const Polynomial& p, double tol = kTol, int max_iter = 400);

// Greedy clustering of a root list; the default radius is
// 1e-6 * (1 + max |root|). Returns (center, multiplicity) pairs.
std::vector<std::pair<cx, int>> cluster_roots(const std::vector<cx>& rts,
                                              double radius = -1.0);

// l-th elementary symmetric function of the inputs, e_0 = 1.
cx elementary_symmetric(const std::vector<cx>& values, int l);

// Inverse of the Vandermonde matrix V_ij = x_i^(j-1) from the closed-form
// cofactor expression in elementary symmetric functions. Nodes closer than
// `separation` throw NodesTooClose.
Eigen::MatrixXcd vandermonde_inverse(const std::vector<cx>& x,
                                     double separation = kNodeSep);
Eigen::MatrixXcd vandermonde(const std::vector<cx>& x);

}  // namespace dkm
