#include "dkm/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace dkm {

CompanionMatrix::CompanionMatrix(Polynomial q) : q_(std::move(q)) {
  if (!q_.is_monic() || q_.degree() < 1)
    throw InvalidModulus("companion matrix needs a monic polynomial of degree >= 1");
  const int n = q_.degree();
  m_ = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) m_(i + 1, i) = cx(1);
  for (int i = 0; i < n; ++i) m_(i, n - 1) = -q_.coeff(i);
}

CompanionMatrix companion(const Polynomial& q) { return CompanionMatrix(q); }

bool is_companion_shaped(const Matrix& m, double tol) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      const cx want = (i == j + 1) ? cx(1) : cx(0);
      if (std::abs(m(i, j) - want) > tol) return false;
    }
  return true;
}

Polynomial companion_poly(const Matrix& m, double tol) {
  if (!is_companion_shaped(m, tol))
    throw ShapeViolation("matrix is not in companion form");
  const int n = static_cast<int>(m.rows());
  std::vector<cx> c(n + 1);
  for (int i = 0; i < n; ++i) c[i] = -m(i, n - 1);
  c[n] = cx(1);
  return Polynomial(std::move(c), 0.0);
}

Polynomial char_poly(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<cx> c(n + 1, cx(0));
  c[n] = cx(1);
  Matrix mk = Matrix::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * Matrix::Identity(n, n);
    c[n - k] = -(m * mk).trace() / cx(double(k));
  }
  return Polynomial(std::move(c), 0.0);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

AnticommutatorSolution anticommutator_solve(const Matrix& s, const Matrix& c,
                                            double tol) {
  const int n = static_cast<int>(s.rows());
  const Matrix id = Matrix::Identity(n, n);
  // vec(SY) = (I (x) S) vec Y, vec(YS) = (S^T (x) I) vec Y, columns stacked.
  const Matrix k = kron(id, s) + kron(s.transpose(), id);
  const Vector rhs = Eigen::Map<const Vector>(c.data(), n * n);

  Eigen::JacobiSVD<Matrix> svd(k, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double cut = std::max(tol * smax, 1e-13 * std::max(1.0, smax));

  Vector y = Vector::Zero(n * n);
  const Vector utb = svd.matrixU().adjoint() * rhs;
  int rank_k = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) {
      y += (utb(i) / sv(i)) * svd.matrixV().col(i);
      ++rank_k;
    }
  }

  AnticommutatorSolution sol;
  sol.particular = Eigen::Map<const Matrix>(y.data(), n, n);
  sol.residual = sup_norm(s * sol.particular + sol.particular * s - c);
  for (int i = rank_k; i < n * n; ++i) {
    const Vector v = svd.matrixV().col(i);
    sol.kernel.push_back(Eigen::Map<const Matrix>(v.data(), n, n));
  }
  if (sol.residual > tol * (1.0 + sup_norm(c)))
    throw NoSolution("anticommutator equation is inconsistent");
  return sol;
}

bool is_regular(const Matrix& m, double tol) {
  const int n = static_cast<int>(m.rows());
  if (n == 1) return true;
  for (std::uint64_t trial = 0; trial < 3; ++trial) {
    Rng rng(0x5eedULL + 7919 * trial);
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
    Matrix krylov(n, n);
    Vector w = v;
    for (int j = 0; j < n; ++j) {
      krylov.col(j) = w;
      w = m * w;
    }
    if (rank(krylov, tol) == n) return true;
  }
  return false;
}

Matrix matrix_exp(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  if (norm > 350.0) throw NormTooLarge("matrix exponential would overflow");

  // Pade(13) with scaling by 2^s, then s squarings.
  int s = 0;
  const double theta13 = 5.371920351148152;
  if (norm > theta13) s = static_cast<int>(std::ceil(std::log2(norm / theta13)));
  const Matrix a = m / std::pow(2.0, s);

  static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                             1187353796428800.0,  129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,       1323241920.0,
                             40840800.0,          960960.0,            16380.0,
                             182.0,               1.0};
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a2 * a4;
  const Matrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                        b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                   b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  Matrix r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

int rank(const Matrix& m, double tol) { return rank_with_reference(m, tol, 0.0); }

int rank_with_reference(const Matrix& m, double tol, double reference) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  if (smax == 0.0) return 0;
  const double cut = tol * std::max(smax, reference);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

Matrix poly_eval_matrix(const Polynomial& p, const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  Matrix acc = Matrix::Zero(n, n);
  for (int i = p.degree(); i >= 0; --i) acc = acc * m + p.coeff(i) * Matrix::Identity(n, n);
  return acc;
}

}  // namespace dkm
