#include <doctest.h>

#include "dkm/surfaces.hpp"

using namespace dkm;

TEST_CASE("surface residual zeros") {
  CHECK(surface_residual(D2Point{{2, cx(1), cx(1)}, cx(1), cx(0), cx(0)}) < 1e-15);
  CHECK(surface_residual(D1Point{{1, cx(0.8), cx(0.8)}, cx(0), cx(0), cx(0.5)}) < 1e-15);
  CHECK(surface_residual(D0Point{{0, cx(1), cx(0.6)}, cx(0), cx(0), cx(-2.3, 1)}) < 1e-15);
  CHECK(surface_residual(D2Point{{2, cx(1), cx(1)}, cx(0.9), cx(0), cx(0)}) > 1e-3);
}

TEST_CASE("sampled points lie on their surface") {
  Rng rng(61);
  for (int kind : {0, 1, 2}) {
    for (int trial = 0; trial < 25; ++trial) {
      const SurfacePoint p = sample_surface_point(kind, cx(1.1, 0.2), cx(0.7, -0.3), rng);
      CHECK(surface_residual(p) < 1e-12);
    }
  }
}

TEST_CASE("reconstruct_n2") {
  const D2Point p{{2, cx(1), cx(1)}, cx(1), cx(0), cx(0)};
  const SlicePoint pt = reconstruct_n2(p);
  CHECK(std::abs(pt.S(1, 0) - cx(1)) < 1e-15);
  CHECK(std::abs(pt.S(0, 1)) < 1e-15);
  CHECK(std::abs(pt.Y(0, 0) - cx(1)) < 1e-15);
  CHECK(std::abs(pt.Y(1, 1) + cx(1)) < 1e-15);
  CHECK(std::abs(pt.Y(0, 1)) < 1e-15);
  CHECK(slice_residual(pt) < 1e-12);

  // b entry is tau - c x for random surface points
  Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const cx mu1 = rng.disk(1.0) + cx(0.2), mu2 = rng.disk(1.0) - cx(0.3);
    const auto sp = std::get<D2Point>(sample_surface_point(2, mu1, mu2, rng));
    const SlicePoint q = reconstruct_n2(sp);
    CHECK(std::abs(q.Y(0, 1) - (mu1 * mu1 - mu2 * mu2 - sp.c * sp.x)) < 1e-12);
    CHECK(slice_residual(q) < 1e-9);
  }
  CHECK_THROWS_AS(reconstruct_n2(D2Point{{2, cx(1), cx(1)}, cx(2), cx(0), cx(0)}),
                  NotOnSurface);
}

TEST_CASE("reconstruct_n3") {
  const cx mu(0.9, 0.1);
  const D1Point p{{1, mu, mu}, cx(0), cx(0), cx(0.5)};
  const SlicePoint pt = reconstruct_n3(p);
  // c = -1/2, a = (mu1+mu2)/2, b = 0
  CHECK(std::abs(pt.Y(1, 0) + cx(0.5)) < 1e-15);
  CHECK(std::abs(pt.Y(0, 0) - mu) < 1e-15);
  CHECK(std::abs(pt.Y(0, 1)) < 1e-15);
  // bordered corner entries
  CHECK(std::abs(pt.S(2, 2) - 2.0 * mu) < 1e-15);
  CHECK(std::abs(pt.Y(2, 2)) < 1e-15);
  CHECK(slice_residual(pt) < 1e-12);
  CHECK(char_shape(pt).p == 1);
  CHECK(char_shape(pt).q == 0);

  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const cx mu1 = rng.disk(1.0) + cx(0.4), mu2 = rng.disk(1.0) - cx(0.2);
    const auto sp = std::get<D1Point>(sample_surface_point(1, mu1, mu2, rng));
    CHECK(slice_residual(reconstruct_n3(sp)) < 1e-9);
  }
}

TEST_CASE("reconstruct_n4 and the derived coordinates") {
  const cx mu1(1.2, 0.3), mu2(0.8, -0.25);
  const SurfaceParams params{0, mu1, mu2};
  Rng rng(73);

  for (int trial = 0; trial < 20; ++trial) {
    const auto sp = std::get<D0Point>(sample_surface_point(0, mu1, mu2, rng));
    const auto [y, u] = d0_free_coords(sp);

    // w = (y - u)/(2 mu2) and t = ((mu1+mu2) y - (mu1-mu2) u)/(2 mu2)
    const auto [t, w] = d0_coords(sp.x, y, u, params);
    CHECK(std::abs(w - (y - u) / (2.0 * mu2)) < 1e-14);
    CHECK(std::abs(t - ((mu1 + mu2) * y - (mu1 - mu2) * u) / (2.0 * mu2)) < 1e-14);
    CHECK(std::abs(t - sp.t) < 1e-12);
    CHECK(std::abs(w - sp.w) < 1e-12);

    const SlicePoint pt = reconstruct_n4(sp.x, y, u, params);
    CHECK(slice_residual(pt) < 1e-8);

    // both 3x3 minors satisfy their cubic identities
    const cx z = pt.Y(2, 1), v = pt.Y(3, 1);
    CHECK(std::abs(y * y * sp.x - z * z + 0.25 + (mu1 - mu2) * y) < 1e-10);
    CHECK(std::abs(u * u * sp.x - v * v + 0.25 + (mu1 + mu2) * u) < 1e-10);
    CHECK(slice_residual(extract_phi1(pt)) < 1e-9);
    CHECK(slice_residual(extract_phi2(pt)) < 1e-9);

    // the second pair of linear relations holds on the assembled matrices
    const cx a = pt.Y(0, 0), c = pt.Y(1, 0);
    CHECK(std::abs(c + (mu1 - mu2) * u + v) < 1e-10);
    CHECK(std::abs(-a + (mu1 - mu2) * v + u * sp.x + 0.5 * (mu1 + mu2)) < 1e-10);
  }

  // y = u forces w = 0, t = y; the constraint becomes y^2 = 0
  CHECK_THROWS_AS(reconstruct_n4(cx(0.7), cx(0.2), cx(0.2), params), NotOnSurface);
  const SlicePoint degenerate_ok = reconstruct_n4(cx(0.7), cx(0), cx(0), params);
  CHECK(slice_residual(degenerate_ok) < 1e-10);

  CHECK_THROWS_AS(reconstruct_n4(cx(0.7), cx(0.1), cx(0.2), SurfaceParams{0, mu1, cx(0)}),
                  DegenerateParameter);
}

TEST_CASE("extract_coords inverts the reconstructions") {
  Rng rng(79);
  const cx mu1(1.05, -0.2), mu2(0.6, 0.35);
  for (int trial = 0; trial < 100; ++trial) {
    const int kind = trial % 3;
    const SurfacePoint sp = sample_surface_point(kind, mu1, mu2, rng);
    SlicePoint pt = [&] {
      if (kind == 2) return reconstruct_n2(std::get<D2Point>(sp));
      if (kind == 1) return reconstruct_n3(std::get<D1Point>(sp));
      const D0Point& d0 = std::get<D0Point>(sp);
      const auto [y, u] = d0_free_coords(d0);
      return reconstruct_n4(d0.x, y, u, d0.params);
    }();
    const SurfacePoint back = extract_coords(pt);
    CHECK(surface_residual(back) < 1e-10);
    if (kind == 2) {
      const auto &a = std::get<D2Point>(sp), &b = std::get<D2Point>(back);
      CHECK(std::abs(a.a - b.a) + std::abs(a.c - b.c) + std::abs(a.x - b.x) < 1e-10);
    } else if (kind == 1) {
      const auto &a = std::get<D1Point>(sp), &b = std::get<D1Point>(back);
      CHECK(std::abs(a.y - b.y) + std::abs(a.z - b.z) + std::abs(a.x - b.x) < 1e-10);
    } else {
      const auto &a = std::get<D0Point>(sp), &b = std::get<D0Point>(back);
      CHECK(std::abs(a.t - b.t) + std::abs(a.w - b.w) + std::abs(a.x - b.x) < 1e-10);
    }
  }
  CHECK_THROWS_AS(extract_coords(SlicePoint{Matrix::Identity(2, 2), Matrix::Identity(2, 2),
                                            SliceParams::for_kind(2, 1, mu1, mu2)}),
                  NotCanonical);
}

TEST_CASE("double cover identity for the kind-0 surface") {
  Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sp = std::get<D0Point>(sample_surface_point(0, cx(1), cx(0.5), rng));
    for (double sign : {1.0, -1.0}) {
      const cx s = sign * std::sqrt(sp.x);
      const cx prod = (sp.x * sp.w - 0.5 + sp.t * s) * (sp.x * sp.w - 0.5 - sp.t * s);
      CHECK(std::abs(prod - 0.25) < 1e-12);
    }
  }
}

TEST_CASE("kind-2 quadric form at equal parameters") {
  Rng rng(89);
  const cx mu(1.3, -0.4);  // mu1 = mu2 = mu/2
  for (int trial = 0; trial < 50; ++trial) {
    const auto sp = std::get<D2Point>(sample_surface_point(2, 0.5 * mu, 0.5 * mu, rng));
    const cx lam = std::sqrt(sp.x);
    CHECK(std::abs((sp.a + lam * sp.c) * (sp.a - lam * sp.c) -
                   0.25 * (mu * mu - sp.x)) < 1e-12);
  }
}
