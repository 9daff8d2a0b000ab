#include <doctest.h>

#include "dkm/linalg.hpp"

using namespace dkm;

TEST_CASE("companion matrix shape") {
  // q = z^2 - x  ->  [[0, x], [1, 0]]
  const cx x(2.5, -0.5);
  auto c = companion(Polynomial({-x, cx(0), cx(1)}));
  CHECK(std::abs(c.matrix()(0, 1) - x) < 1e-15);
  CHECK(std::abs(c.matrix()(1, 0) - cx(1)) < 1e-15);
  CHECK(std::abs(c.matrix()(0, 0)) < 1e-15);
  CHECK(std::abs(c.matrix()(1, 1)) < 1e-15);

  // q = z - c -> [c]
  auto c1 = companion(Polynomial({cx(-3, 1), cx(1)}));
  CHECK(std::abs(c1.matrix()(0, 0) - cx(3, -1)) < 1e-15);

  // q = z^3 -> nilpotent single block, last column zero
  auto c3 = companion(Polynomial({cx(0), cx(0), cx(0), cx(1)}));
  CHECK(sup_norm(c3.matrix() * c3.matrix() * c3.matrix()) < 1e-15);

  CHECK_THROWS_AS(companion(Polynomial({cx(1), cx(2)})), InvalidModulus);
  CHECK(is_companion_shaped(c3.matrix()));
  CHECK_FALSE(is_companion_shaped(Matrix::Identity(3, 3)));
}

TEST_CASE("char poly") {
  CHECK(char_poly(Matrix::Identity(2, 2))
            .almost_equal(Polynomial({cx(1), cx(-2), cx(1)}), 1e-12));

  const cx x(1.5, 0.25);
  const Polynomial q({-x, cx(0), cx(1)});
  CHECK(char_poly(companion(q).matrix()).almost_equal(q, 1e-12));

  const cx mu(0.7, -0.3);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = mu;
  d(1, 1) = -mu;
  CHECK(char_poly(d).almost_equal(Polynomial({-mu * mu, cx(0), cx(1)}), 1e-12));
}

TEST_CASE("companion of char poly round trips on companion matrices") {
  Rng rng(3);
  for (int n = 1; n <= 12; ++n) {
    std::vector<cx> coeffs;
    for (int i = 0; i < n; ++i) coeffs.push_back(rng.disk(1.0));
    coeffs.push_back(cx(1));
    const Matrix m = companion(Polynomial(coeffs, 0.0)).matrix();
    const Matrix back = companion(char_poly(m)).matrix();
    CHECK(sup_norm(m - back) < 1e-9 * (1.0 + sup_norm(m)));
  }
}

TEST_CASE("anticommutator: kind-2 structure") {
  const cx x(1.2, 0.4), tau(0.35, -0.2);
  Matrix s(2, 2), c(2, 2);
  s << cx(0), x, cx(1), cx(0);
  c = tau * Matrix::Identity(2, 2);
  auto sol = anticommutator_solve(s, c);
  CHECK(sol.residual < 1e-10);
  // solutions are traceless with b + c x = tau; kernel dimension 2
  CHECK(sol.kernel.size() == 2);
  CHECK(std::abs(sol.particular(0, 0) + sol.particular(1, 1)) < 1e-10);
  CHECK(std::abs(sol.particular(0, 1) + sol.particular(1, 0) * x - tau) < 1e-10);
  for (const auto& k : sol.kernel) {
    CHECK(sup_norm(s * k + k * s) < 1e-10);
    CHECK(std::abs(k(0, 0) + k(1, 1)) < 1e-10);
  }
}

TEST_CASE("anticommutator: S = I forces Y = C/2, no kernel") {
  auto sol = anticommutator_solve(Matrix::Identity(3, 3), Matrix::Zero(3, 3));
  CHECK(sol.kernel.empty());
  CHECK(sup_norm(sol.particular) < 1e-12);
}

TEST_CASE("anticommutator: diagonal S kernel is antidiagonal") {
  const cx lam(0.9, 0.1);
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = lam;
  s(1, 1) = -lam;
  auto sol = anticommutator_solve(s, Matrix::Zero(2, 2));
  CHECK(sol.kernel.size() == 2);
  for (const auto& k : sol.kernel) {
    CHECK(std::abs(k(0, 0)) < 1e-10);
    CHECK(std::abs(k(1, 1)) < 1e-10);
  }
}

TEST_CASE("anticommutator: inconsistent system throws") {
  // For S = [[0,1],[0,0]] the image of Y -> S Y + Y S consists of upper
  // triangular matrices with equal diagonal entries.
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = cx(1);
  Matrix c = Matrix::Zero(2, 2);
  c(1, 0) = cx(1);
  CHECK_THROWS_AS(anticommutator_solve(s, c), NoSolution);
}

TEST_CASE("regularity") {
  Rng rng(17);
  for (int n = 1; n <= 12; ++n) {
    std::vector<cx> coeffs;
    for (int i = 0; i < n; ++i) coeffs.push_back(rng.disk(1.5));
    coeffs.push_back(cx(1));
    CHECK(is_regular(companion(Polynomial(coeffs, 0.0)).matrix()));
  }
  CHECK_FALSE(is_regular(Matrix::Identity(4, 4)));
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = cx(1);
  d(1, 1) = cx(2);
  d(2, 2) = cx(3);
  CHECK(is_regular(d));
}

TEST_CASE("matrix exponential") {
  CHECK(sup_norm(matrix_exp(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)) < 1e-14);

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = cx(0.3, 1.0);
  d(1, 1) = cx(-2.0, 0.5);
  Matrix e = matrix_exp(d);
  CHECK(std::abs(e(0, 0) - std::exp(d(0, 0))) < 1e-12);
  CHECK(std::abs(e(1, 1) - std::exp(d(1, 1))) < 1e-12);

  Matrix nil = Matrix::Zero(2, 2);
  nil(0, 1) = cx(4, -3);
  CHECK(sup_norm(matrix_exp(nil) - Matrix::Identity(2, 2) - nil) < 1e-12);

  Rng rng(23);
  Matrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rng.disk(1.0);
  CHECK(sup_norm(matrix_exp(m) * matrix_exp(-m) - Matrix::Identity(4, 4)) < 1e-11);

  CHECK_THROWS_AS(matrix_exp(1000.0 * Matrix::Identity(2, 2)), NormTooLarge);
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::Zero(3, 3)) == 0);
  Matrix s(2, 2);
  s << cx(0), cx(2.0, 1.0), cx(1), cx(0);
  CHECK(rank(s) == 2);

  // A - mu I = -2 mu (I - P) has rank n - k for a rank-k projector P
  Rng rng(31);
  const int n = 5, k = 2;
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  Matrix diag = Matrix::Zero(n, n);
  for (int i = 0; i < k; ++i) diag(i, i) = cx(1);
  const cx mu(0.8, -0.2);
  Matrix p = g * diag * g.inverse();
  Matrix a = mu * (2.0 * p - Matrix::Identity(n, n));
  CHECK(rank(a - mu * Matrix::Identity(n, n), 1e-7) == n - k);
}
