#include "dkm/campaigns.hpp"

#include <chrono>
#include <cmath>

#include "dkm/hilb.hpp"
#include "dkm/nahm.hpp"
#include "dkm/twistor.hpp"

namespace dkm {

namespace {

using Clock = std::chrono::steady_clock;

nlohmann::json cx_json(cx z) { return nlohmann::json::array({z.real(), z.imag()}); }

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

RunReport finish(RunReport rep, std::vector<Check> checks, const CampaignConfig& cfg,
                 Clock::time_point t0) {
  rep.checks = aggregate_max(checks);
  if (cfg.tol_override) {
    for (auto& c : rep.checks) {
      c.tol = *cfg.tol_override;
      c.pass = c.residual <= c.tol;
    }
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// p(-u): alternate the coefficient signs.
Polynomial flip_sign(const Polynomial& p) {
  std::vector<cx> c(p.coeffs());
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c), 0.0);
}

double max_coeff_diff(const Polynomial& a, const Polynomial& b) {
  double m = 0.0;
  for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i)
    m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
  return m;
}

// Pairwise-separated points in a disk; deterministic rejection sampling.
std::vector<cx> separated_disk_points(int m, double radius, double sep, Rng& rng) {
  std::vector<cx> xs;
  int guard = 0;
  while (static_cast<int>(xs.size()) < m) {
    const cx x = rng.disk(radius);
    bool ok = true;
    for (cx prev : xs)
      if (std::abs(x - prev) < sep) ok = false;
    if (ok) xs.push_back(x);
    if (++guard > 10000) throw Error("separation sampling stalled");
  }
  return xs;
}

double multiset_match_distance(const std::vector<std::vector<cx>>& a,
                               const std::vector<std::vector<cx>>& b) {
  if (a.size() != b.size()) return 1e300;
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const auto& p : a) {
    double best = 1e300;
    int best_j = -1;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double d = 0.0;
      for (size_t c = 0; c < p.size(); ++c) d = std::max(d, std::abs(p[c] - b[j][c]));
      if (d < best) {
        best = d;
        best_j = static_cast<int>(j);
      }
    }
    if (best_j >= 0) used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

std::vector<Check> run_trials(int trials, std::uint64_t seed, bool serial,
                              const TrialFn& fn) {
  std::vector<std::vector<Check>> per(trials);
  auto body = [&](int i) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(i));
    try {
      per[i] = fn(i, rng);
    } catch (const std::exception& e) {
      per[i] = {Check{std::string("trial aborted: ") + e.what(), 1e300, 0.0, false}};
    }
  };
#ifdef DKM_WITH_OPENMP
  if (!serial) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) body(i);
  } else {
    for (int i = 0; i < trials; ++i) body(i);
  }
#else
  (void)serial;
  for (int i = 0; i < trials; ++i) body(i);
#endif
  std::vector<Check> flat;
  for (auto& v : per)
    for (auto& c : v) flat.push_back(std::move(c));
  return flat;
}

// ---------------------------------------------------------------------------

RunReport cmd_verify_surface(int kind, cx mu1, cx mu2, const CampaignConfig& cfg) {
  const auto t0 = Clock::now();
  RunReport rep;
  rep.command = "verify-surface";
  rep.params = {{"kind", kind},   {"mu1", cx_json(mu1)},   {"mu2", cx_json(mu2)},
                {"trials", cfg.trials}, {"seed", cfg.seed}};
  if (kind < 0 || kind > 2) {
    rep.error = "usage: kind must be 0, 1 or 2";
    return finish(std::move(rep), {}, cfg, t0);
  }
  if (kind == 0 && std::abs(mu2) < 1e-12) {
    rep.error = "DegenerateParameter: the 4x4 presentation needs mu2 != 0";
    return finish(std::move(rep), {}, cfg, t0);
  }

  auto checks = run_trials(cfg.trials, cfg.seed, cfg.serial, [&](int, Rng& rng) {
    std::vector<Check> cs;
    const SurfacePoint sp = sample_surface_point(kind, mu1, mu2, rng);
    cs.push_back(make_check("surface equation", surface_residual(sp), 1e-8));

    SlicePoint pt = [&] {
      if (kind == 2) return reconstruct_n2(std::get<D2Point>(sp));
      if (kind == 1) return reconstruct_n3(std::get<D1Point>(sp));
      const D0Point& d0 = std::get<D0Point>(sp);
      const auto [y, u] = d0_free_coords(d0);
      return reconstruct_n4(d0.x, y, u, d0.params);
    }();

    const int n = pt.n();
    const Matrix id = Matrix::Identity(n, n);
    const cx tau = pt.params.tau();
    cs.push_back(make_check("S Y + Y S = tau I",
                            sup_norm(pt.S * pt.Y + pt.Y * pt.S - tau * id), 1e-8));
    const Matrix bm = pt.Y - 0.5 * pt.S;
    cs.push_back(make_check("(Y - S/2)^2 = mu2^2 I",
                            sup_norm(bm * bm - (mu2 * mu2) * id), 1e-8));
    cs.push_back(make_check(
        "tr S = d1 mu1 + d2 mu2",
        std::abs(pt.S.trace() - (double(pt.params.d1()) * mu1 + double(pt.params.d2()) * mu2)),
        1e-8));
    cs.push_back(make_check(
        "tr Y = (d1 mu1 - d2 mu2)/2",
        std::abs(pt.Y.trace() -
                 0.5 * (double(pt.params.d1()) * mu1 - double(pt.params.d2()) * mu2)),
        1e-8));
    const auto [a, b] = slice_to_pair(pt, 1e-7);
    cs.push_back(make_check("A^2 = mu1^2 I", sup_norm(a * a - (mu1 * mu1) * id), 1e-8));
    cs.push_back(make_check("B^2 = mu2^2 I", sup_norm(b * b - (mu2 * mu2) * id), 1e-8));
    return cs;
  });
  return finish(std::move(rep), std::move(checks), cfg, t0);
}

// ---------------------------------------------------------------------------

namespace {

// Random point on the kind-k surface above a prescribed base value x.
std::vector<cx> surface_point_over(int kind, cx x, cx mu1, cx mu2, Rng& rng) {
  const double branch = rng.uniform() < 0.5 ? 1.0 : -1.0;
  const cx free = rng.disk(1.2);
  switch (kind) {
    case 2: {
      const cx c = free;
      const cx rhs = x * c * c - 0.25 * x - (mu1 * mu1 - mu2 * mu2) * c +
                     0.5 * (mu1 * mu1 + mu2 * mu2);
      return {branch * std::sqrt(rhs), c, x};
    }
    case 1: {
      const cx y = free;
      const cx rhs = y * y * x + 0.25 + (mu1 - mu2) * y;
      return {y, branch * std::sqrt(rhs), x};
    }
    default: {
      const cx w = free;
      const cx rhs = x * w * w - w;
      return {branch * std::sqrt(rhs), w, x};
    }
  }
}

}  // namespace

RunReport cmd_hilb_roundtrip(int kind, int m, cx mu1, cx mu2, const CampaignConfig& cfg) {
  const auto t0 = Clock::now();
  RunReport rep;
  rep.command = "hilb-roundtrip";
  rep.params = {{"kind", kind},         {"m", m},
                {"mu1", cx_json(mu1)},  {"mu2", cx_json(mu2)},
                {"trials", cfg.trials}, {"seed", cfg.seed}};
  if (kind < 0 || kind > 2 || m < 1) {
    rep.error = "usage: kind must be 0, 1 or 2 and m >= 1";
    return finish(std::move(rep), {}, cfg, t0);
  }
  if (kind == 0 && std::abs(mu2) < 1e-12) {
    rep.error = "DegenerateParameter: kind 0 needs mu2 != 0";
    return finish(std::move(rep), {}, cfg, t0);
  }
  const AffineModel model = surface_model(kind, mu1, mu2);

  auto checks = run_trials(cfg.trials, cfg.seed, cfg.serial, [&](int, Rng& rng) {
    std::vector<Check> cs;
    const std::vector<cx> xs = separated_disk_points(m, 1.5, 0.25, rng);
    std::vector<std::vector<cx>> points;
    for (cx x : xs) points.push_back(surface_point_over(kind, x, mu1, mu2, rng));

    const HilbPoint hp = gather(model, points, 1e-3);
    cs.push_back(make_check("coordinate congruence mod q", hilb_residual(model, hp), 1e-8));

    const SlicePoint pt = hilb_to_slice(kind, hp, mu1, mu2);
    cs.push_back(make_check("slice equations", slice_residual(pt), 1e-7));

    const HilbPoint hp2 = slice_to_hilb(pt);
    double coeff_drift = max_coeff_diff(hp.q, hp2.q);
    for (size_t i = 0; i < hp.coords.size(); ++i)
      coeff_drift = std::max(coeff_drift, max_coeff_diff(hp.coords[i], hp2.coords[i]));
    cs.push_back(make_check("coordinate polynomials round trip", coeff_drift, 1e-6));

    const auto points2 = scatter(model, hp2);
    cs.push_back(make_check("point multiset round trip",
                            multiset_match_distance(points, points2), 1e-6));

    if (m == 1) {
      SlicePoint direct = [&] {
        const auto& p = points[0];
        if (kind == 2) return reconstruct_n2(D2Point{{2, mu1, mu2}, p[0], p[1], p[2]});
        if (kind == 1) return reconstruct_n3(D1Point{{1, mu1, mu2}, p[2], p[0], p[1]});
        const D0Point d0{{0, mu1, mu2}, p[0], p[1], p[2]};
        const auto [y, u] = d0_free_coords(d0);
        return reconstruct_n4(d0.x, y, u, d0.params);
      }();
      const double agree =
          std::max(sup_norm(direct.S - pt.S), sup_norm(direct.Y - pt.Y));
      cs.push_back(make_check("m = 1 agrees with the direct reconstruction", agree, 1e-8));
    }

    if (kind == 1 && std::abs(mu1 - mu2) < 1e-12) {
      const HilbPoint dc = d1_to_double_cover(hp);
      const RationalMapData rm = rational_map_from_D1(dc);
      const Polynomial prod = rm.p * flip_sign(rm.p);
      const Polynomial rem = poly_mod(prod - Polynomial::constant(cx(1)), rm.q2);
      cs.push_back(make_check("p(u) p(-u) = 1 mod q(u^2)", rem.norm(), 1e-8));
      cs.push_back(make_check("q(u^2) has even coefficients only",
                              rm.q2.odd_coeff_norm(), 0.0));
      cs.push_back(make_check("deg p <= 2n - 1",
                              std::max(0, rm.p.degree() - (2 * dc.n() - 1)), 0.0));
      const HilbPoint back = rational_map_to_hilb(rm);
      double inv = max_coeff_diff(back.q, dc.q);
      inv = std::max(inv, max_coeff_diff(back.coords[0], dc.coords[0]));
      inv = std::max(inv, max_coeff_diff(back.coords[1], dc.coords[1]));
      cs.push_back(make_check("parity split recovers (x(z), y(z))", inv, 0.0));
    }
    return cs;
  });
  return finish(std::move(rep), std::move(checks), cfg, t0);
}

// ---------------------------------------------------------------------------

RunReport cmd_empty(int n, int d1, int d2, const CampaignConfig& cfg) {
  const auto t0 = Clock::now();
  RunReport rep;
  rep.command = "empty";
  d1 = std::abs(d1);
  d2 = std::abs(d2);
  rep.params = {{"n", n}, {"d1", d1}, {"d2", d2}, {"trials", cfg.trials}, {"seed", cfg.seed}};
  if (n < 1 || d1 > n || d2 > n || (n - d1) % 2 != 0 || (n - d2) % 2 != 0) {
    rep.error = "usage: need 0 <= d_i <= n with d_i = n (mod 2)";
    return finish(std::move(rep), {}, cfg, t0);
  }
  const bool empty = d1 + d2 > 2;
  rep.params["empty"] = empty;
  const cx mu1(0.9, 0.27), mu2(0.55, -0.41);  // generic fixed eigenvalues
  const OrbitSpec s1(mu1, (n + d1) / 2, (n - d1) / 2);
  const OrbitSpec s2(mu2, (n + d2) / 2, (n - d2) / 2);

  auto checks = run_trials(cfg.trials, cfg.seed, cfg.serial, [&](int, Rng& rng) {
    std::vector<Check> cs;
    const EmptinessReport er = emptiness_certificate(s1, s2, rng);
    cs.push_back(make_check("rank(A - mu1 I) = l1", std::abs(er.rank_a - s1.l), 0.0));
    cs.push_back(make_check("rank(B - mu2 I) = l2", std::abs(er.rank_b - s2.l), 0.0));
    const int sum = er.rank_a + er.rank_b;
    if (empty) {
      cs.push_back(make_check("rank sum < n - 1 blocks regularity of A + B",
                              std::max(0, sum - (n - 2)), 0.0));
    } else {
      cs.push_back(make_check("rank sum reaches n - 1",
                              std::max(0, (n - 1) - sum), 0.0));
    }
    return cs;
  });
  return finish(std::move(rep), std::move(checks), cfg, t0);
}

// ---------------------------------------------------------------------------

RunReport cmd_twistor(int kind, int samples, cx mu1, cx mu2, const CampaignConfig& cfg) {
  const auto t0 = Clock::now();
  RunReport rep;
  rep.command = "twistor";
  rep.params = {{"kind", kind},    {"samples", samples},   {"mu1", cx_json(mu1)},
                {"mu2", cx_json(mu2)}, {"seed", cfg.seed}};
  if (kind < 0 || kind > 2 || samples < 1) {
    rep.error = "usage: kind must be 0, 1 or 2 and samples >= 1";
    return finish(std::move(rep), {}, cfg, t0);
  }
  if (kind == 0 && std::abs(mu2) < 1e-12) {
    rep.error = "DegenerateParameter: kind 0 needs mu2 != 0";
    return finish(std::move(rep), {}, cfg, t0);
  }
  const bool equal_mu = std::abs(mu1 - mu2) < 1e-12;

  auto checks = run_trials(samples, cfg.seed, cfg.serial, [&](int, Rng& rng) {
    std::vector<Check> cs;
    // zeta in the band 0.5 <= |zeta| <= 2, log-uniform radius
    const double lr = rng.uniform(std::log(0.5), std::log(2.0));
    const double th = rng.uniform(0.0, 6.283185307179586);
    const cx zeta = std::exp(lr) * cx(std::cos(th), std::sin(th));

    // base coordinate bounded away from the branch point x = 0
    cx x = rng.disk(1.5);
    while (std::abs(x) < 0.3) x = rng.disk(1.5);
    const cx lambda = std::sqrt(x);

    // m = 1 slice point over x, in the companion presentation
    SlicePoint pt = [&]() -> SlicePoint {
      switch (kind) {
        case 2: {
          const auto p = surface_point_over(2, x, mu1, mu2, rng);
          return reconstruct_n2(D2Point{{2, mu1, mu2}, p[0], p[1], p[2]});
        }
        case 1: {
          const auto p = surface_point_over(1, x, mu1, mu2, rng);
          return to_companion_form(
              reconstruct_n3(D1Point{{1, mu1, mu2}, p[2], p[0], p[1]}));
        }
        default: {
          const auto p = surface_point_over(0, x, mu1, mu2, rng);
          const D0Point d0{{0, mu1, mu2}, p[0], p[1], p[2]};
          const auto [yy, uu] = d0_free_coords(d0);
          return to_companion_form(reconstruct_n4(d0.x, yy, uu, d0.params));
        }
      }
    }();
    const int n = pt.n();

    // cocycle on (S, g)
    Matrix g = Matrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) += 0.3 * rng.gaussian();
    const ChartN fwd = transition_N(ChartN{zeta, pt.S, g});
    const ChartN rtn = transition_N_back(fwd);
    cs.push_back(make_check("chart round trip (S, g)",
                            std::max(sup_norm(rtn.s - pt.S), sup_norm(rtn.g - g)), 1e-7));

    // transformed S is the companion matrix of P(zeta^2 z)/zeta^(2n)
    const Polynomial p = companion_poly(pt.S);
    std::vector<cx> ct(n + 1);
    for (int i = 0; i <= n; ++i) ct[i] = p.coeff(i) * std::pow(zeta, 2 * (i - n));
    cs.push_back(make_check("transformed S stays companion",
                            sup_norm(fwd.s - companion(Polynomial(ct, 0.0)).matrix()),
                            1e-9));

    // cocycle and equation transport on (S, Y)
    const ChartSY fsy = transition_SY(ChartSY{zeta, pt.S, pt.Y});
    const ChartSY rsy = transition_SY_back(fsy);
    cs.push_back(make_check("chart round trip (S, Y)",
                            std::max(sup_norm(rsy.s - pt.S), sup_norm(rsy.y - pt.Y)),
                            1e-7));
    const cx z2 = zeta * zeta;
    const SlicePoint transported{fsy.s, fsy.y,
                                 SliceParams::for_kind(kind, 1, mu1 / z2, mu2 / z2)};
    cs.push_back(make_check("slice equations transported", slice_residual(transported), 1e-7));

    // kind-specific chart identities over lambda^2 = x
    if (kind == 2) {
      const cx a = pt.Y(0, 0), c = pt.Y(1, 0);
      if (equal_mu) {
        const cx mu = mu1 + mu2;
        const D2Chart out = d2_chart_transition(zeta, D2Chart{lambda, a, c});
        const cx mut = mu / z2, xt = x / (z2 * z2);
        cs.push_back(make_check(
            "(a + l c)(a - l c) = (mu^2 - x)/4 in both charts",
            std::max(std::abs((a + lambda * c) * (a - lambda * c) - 0.25 * (mu * mu - x)),
                     std::abs((out.a + out.lambda * out.c) * (out.a - out.lambda * out.c) -
                              0.25 * (mut * mut - xt))),
            1e-9));
        const cx s = a - lambda * c;
        const cx st = out.a - out.lambda * out.c;
        cs.push_back(make_check("a - l c is an L^2(2) section",
                                std::abs(st - std::exp(-2.0 * lambda / zeta) * s / z2),
                                1e-10 * (1.0 + std::abs(s))));
        // two-path agreement with the matrix transition
        cs.push_back(make_check(
            "chart matches the matrix transition",
            std::max(std::abs(fsy.y(0, 0) - out.a), std::abs(fsy.y(1, 0) - out.c)), 1e-8));
      } else {
        const cx w = x * c - 0.5 * pt.params.tau();
        const D2GeneralChart out = d2_chart_transition_general(zeta, D2GeneralChart{lambda, a, w});
        const cx xt = x / (z2 * z2);
        const double scale = 1.0 + std::norm(out.w) + std::abs(xt) * std::norm(out.a);
        cs.push_back(make_check(
            "w^2 - x a^2 quadric transported (relative)",
            std::max(quadric_check_d2(a, c, x, mu1, mu2),
                     std::abs(out.w * out.w - xt * out.a * out.a -
                              0.25 * (xt - (mu1 - mu2) * (mu1 - mu2) / (z2 * z2)) *
                                  (xt - (mu1 + mu2) * (mu1 + mu2) / (z2 * z2)))) /
                scale,
            1e-9));
      }
    } else if (kind == 1) {
      const SlicePoint can = to_canonical_form(pt);
      const cx y = can.Y(2, 0), zz = can.Y(2, 1);
      if (equal_mu) {
        const D1Chart out = d1_chart_transition(zeta, D1Chart{lambda, y, zz});
        cs.push_back(make_check(
            "(z + l y)(z - l y) = 1/4 in both charts",
            std::max(std::abs((zz + lambda * y) * (zz - lambda * y) - 0.25),
                     std::abs((out.z + out.lambda * out.y) * (out.z - out.lambda * out.y) -
                              0.25)),
            1e-9));
        const cx s = zz + lambda * y;
        const cx st = out.z + out.lambda * out.y;
        cs.push_back(make_check("z + l y is an L^2 section",
                                std::abs(st - std::exp(-2.0 * lambda / zeta) * s),
                                1e-10 * (1.0 + std::abs(s))));
      } else {
        const cx q = y * x + 0.5 * (mu1 - mu2);
        const D1GeneralChart out = d1_chart_transition_general(zeta, D1GeneralChart{lambda, q, zz});
        const cx xt = x / (z2 * z2), amt = (mu1 - mu2) / z2;
        cs.push_back(make_check(
            "q^2 - x z^2 quadric transported",
            std::max(quadric_check_d1(y, zz, x, mu1, mu2),
                     std::abs(out.q * out.q - xt * out.z * out.z - 0.25 * (amt * amt - xt))),
            1e-9));
      }
    } else {
      const SlicePoint can = to_canonical_form(pt);
      const auto coords = extract_coords(can);
      const D0Point& d0 = std::get<D0Point>(coords);
      const D0Chart out = d0_chart_transition(zeta, D0Chart{lambda, d0.t, d0.w});
      const cx xt = out.lambda * out.lambda;
      const cx sp = xt * out.w - 0.5 + out.t * out.lambda;
      const cx sm = xt * out.w - 0.5 - out.t * out.lambda;
      const cx s0p = x * d0.w - 0.5 + d0.t * lambda;
      const cx s0m = x * d0.w - 0.5 - d0.t * lambda;
      cs.push_back(make_check("D0 product = 1/4 in both charts",
                              std::max(std::abs(s0p * s0m - 0.25), std::abs(sp * sm - 0.25)),
                              1e-9));
      const double scale =
          1.0 + std::norm(out.t) + std::abs(xt) * std::norm(out.w) + std::abs(out.w);
      cs.push_back(make_check("transported point stays on the surface (relative)",
                              std::abs(out.t * out.t - xt * out.w * out.w + out.w) / scale,
                              1e-9));
    }
    return cs;
  });
  return finish(std::move(rep), std::move(checks), cfg, t0);
}

// ---------------------------------------------------------------------------

RunReport cmd_nahm(int n, double epsilon, double t_end, const std::string& mode,
                   const CampaignConfig& cfg) {
  const auto t0 = Clock::now();
  RunReport rep;
  rep.command = "nahm";
  rep.params = {{"n", n},       {"epsilon", epsilon}, {"t_end", t_end},
                {"mode", mode}, {"seed", cfg.seed}};
  if (n < 1 || epsilon <= 0.0 || t_end <= epsilon) {
    rep.error = "usage: need n >= 1 and 0 < epsilon < t_end";
    return finish(std::move(rep), {}, cfg, t0);
  }
  if (mode != "pole" && mode != "bounded") {
    rep.error = "usage: mode must be 'pole' or 'bounded'";
    return finish(std::move(rep), {}, cfg, t0);
  }
  const std::vector<cx> zetas = {cx(0, 0), cx(0.5, 0), cx(0, 1.1), cx(-0.7, 0.2), cx(1, 0)};

  std::vector<Check> checks;
  if (mode == "pole") {
    const PoleData pd = regular_triple(n);
    NahmState start;
    start.t = epsilon;
    start.T = {Matrix::Zero(n, n), pd.a1 / epsilon, pd.a2 / epsilon, pd.a3 / epsilon};
    IntegrateOptions opts;
    opts.rtol = 1e-11;
    opts.atol = 1e-13;
    const auto traj = integrate(start, t_end, opts);

    const double anorm = std::max(
        {sup_norm(pd.a1), sup_norm(pd.a2), sup_norm(pd.a3), 1e-300});
    double rel = 0.0, skew = 0.0;
    for (const auto& s : traj) {
      const Matrix ref[3] = {pd.a1 / s.t, pd.a2 / s.t, pd.a3 / s.t};
      for (int i = 0; i < 3; ++i)
        rel = std::max(rel, sup_norm(s.T[i + 1] - ref[i]) / (anorm / s.t));
      skew = std::max(skew, skew_residual(s));
    }
    checks.push_back(make_check("pole solution alpha_i / t tracked (relative)", rel, 1e-6));
    checks.push_back(make_check("skew-hermitian preserved", skew,
                                1e-7 * std::max(1.0, t_end - epsilon)));
    // scale of the normalized char-poly coefficients at the start
    double base = 1.0;
    for (cx zeta : zetas) {
      const Polynomial p0 = char_poly(lax_matrix(traj.front(), zeta));
      for (int i = 0; i <= n; ++i)
        base = std::max(base, std::abs(p0.coeff(i)) * std::pow(traj.front().t, n - i));
    }
    // the pole solution has unstable linearized modes, so early roundoff is
    // amplified along the flow and again by the coefficient conditioning;
    // the gate reflects that amplification on top of the tracking bound
    checks.push_back(make_check("isospectral drift (pole scaling removed, relative)",
                                spectral_drift(traj, zetas, true) / base, 1e-4));
  } else {
    auto trial_checks = run_trials(cfg.trials, cfg.seed, cfg.serial, [&](int, Rng& rng) {
      std::vector<Check> cs;
      NahmState start;
      start.t = epsilon;
      start.T[0] = Matrix::Zero(n, n);
      for (int i = 1; i < 4; ++i) {
        Matrix g(n, n);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) g(r, c) = rng.gaussian();
        Matrix skew = g - g.adjoint();
        // keep the data small enough that no movable pole enters the interval
        start.T[i] = (0.35 / std::max(1e-12, sup_norm(skew))) * skew;
      }
      IntegrateOptions opts;
      opts.rtol = 1e-10;
      const auto traj = integrate(start, t_end, opts);
      cs.push_back(make_check("isospectral drift", spectral_drift(traj, zetas, false), 1e-6));
      double skew = 0.0;
      for (const auto& s : traj) skew = std::max(skew, skew_residual(s));
      cs.push_back(make_check("skew-hermitian preserved", skew,
                              1e-7 * std::max(1.0, t_end - epsilon)));
      return cs;
    });
    checks = std::move(trial_checks);
  }
  return finish(std::move(rep), std::move(checks), cfg, t0);
}

}  // namespace dkm
