#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dkm/poly.hpp"
#include "dkm/types.hpp"

namespace dkm {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline double sup_norm(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Companion matrix of a monic polynomial: ones on the subdiagonal, the
// coefficient data in the last column, all other entries zero. For
// q(z) = z^n + c_{n-1} z^{n-1} + ... + c_0 the last column reads
// (-c_0, -c_1, ..., -c_{n-1}) top to bottom, i.e. the matrix of
// multiplication by z on C[z]/(q) in the basis 1, z, ..., z^{n-1}.
class CompanionMatrix {
 public:
  explicit CompanionMatrix(Polynomial q);
  const Polynomial& q() const { return q_; }
  const Matrix& matrix() const { return m_; }
  int n() const { return static_cast<int>(m_.rows()); }

 private:
  Polynomial q_;
  Matrix m_;
};

CompanionMatrix companion(const Polynomial& q);
// Shape test: exact companion pattern up to `tol` on the off-pattern entries.
bool is_companion_shaped(const Matrix& m, double tol = kTol);
// Read the monic polynomial back off a companion-shaped matrix.
Polynomial companion_poly(const Matrix& m, double tol = kTol);

// Characteristic polynomial det(zI - M), monic, by the Faddeev-LeVerrier
// trace recursion.
Polynomial char_poly(const Matrix& m);

// Full affine solution set of the anticommutator equation S*Y + Y*S = C,
// obtained from the (n^2 x n^2) Kronecker system via SVD: a minimum-norm
// particular solution plus an orthonormal kernel basis.
struct AnticommutatorSolution {
  Matrix particular;
  std::vector<Matrix> kernel;
  double residual = 0.0;  // ||S*Yp + Yp*S - C||_sup
};
AnticommutatorSolution anticommutator_solve(const Matrix& s, const Matrix& c,
                                            double tol = kTol);

// Regularity (minimal polynomial == characteristic polynomial) via cyclic
// vectors: the Krylov matrix of a generic vector has full rank. Three fixed
// pseudo-random trials keep the test deterministic.
bool is_regular(const Matrix& m, double tol = 1e-8);

// Scaling-and-squaring Pade(13) matrix exponential. Throws NormTooLarge when
// entries of the result would overflow.
Matrix matrix_exp(const Matrix& m);

// Numerical rank: number of singular values above tol * sigma_max.
int rank(const Matrix& m, double tol = 1e-9);
// Rank against an external scale, for differences that may vanish entirely:
// counts singular values above tol * max(sigma_max, reference).
int rank_with_reference(const Matrix& m, double tol, double reference);

Matrix kron(const Matrix& a, const Matrix& b);

// p(M) by Horner's rule.
Matrix poly_eval_matrix(const Polynomial& p, const Matrix& m);

}  // namespace dkm
