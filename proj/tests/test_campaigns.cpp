#include <doctest.h>

#include "dkm/campaigns.hpp"
#include "dkm/serialize.hpp"
#include "dkm/surfaces.hpp"

using namespace dkm;

TEST_CASE("reports are deterministic given the seed") {
  CampaignConfig cfg;
  cfg.trials = 8;
  cfg.seed = 1234;
  const std::string a = cmd_verify_surface(2, cx(1), cx(0.6), cfg).to_json().dump();
  const std::string b = cmd_verify_surface(2, cx(1), cx(0.6), cfg).to_json().dump();
  CHECK(a == b);

  const std::string h1 = cmd_hilb_roundtrip(1, 2, cx(0.8), cx(0.8), cfg).to_json().dump();
  const std::string h2 = cmd_hilb_roundtrip(1, 2, cx(0.8), cx(0.8), cfg).to_json().dump();
  CHECK(h1 == h2);

  cfg.seed = 99;
  const std::string c = cmd_verify_surface(2, cx(1), cx(0.6), cfg).to_json().dump();
  CHECK(a != c);  // different seed samples different points
}

TEST_CASE("serial and parallel runs agree byte for byte") {
  CampaignConfig par;
  par.trials = 12;
  par.seed = 7;
  CampaignConfig ser = par;
  ser.serial = true;
  for (int kind : {0, 1, 2}) {
    CHECK(cmd_verify_surface(kind, cx(1.1, 0.2), cx(0.7, -0.3), par).to_json().dump() ==
          cmd_verify_surface(kind, cx(1.1, 0.2), cx(0.7, -0.3), ser).to_json().dump());
  }
  CHECK(cmd_empty(4, 4, 0, par).to_json().dump() ==
        cmd_empty(4, 4, 0, ser).to_json().dump());
}

TEST_CASE("campaigns pass on healthy parameters") {
  CampaignConfig cfg;
  cfg.trials = 10;
  cfg.seed = 5;
  for (int kind : {0, 1, 2}) {
    const RunReport r = cmd_verify_surface(kind, cx(1.05, 0.1), cx(0.6, -0.25), cfg);
    CHECK(r.all_pass());
    CHECK(r.error.empty());
  }
  CHECK(cmd_hilb_roundtrip(2, 3, cx(1), cx(0.5), cfg).all_pass());
  CHECK(cmd_hilb_roundtrip(1, 2, cx(0.9), cx(0.9), cfg).all_pass());
  CHECK(cmd_hilb_roundtrip(0, 2, cx(1.2, 0.1), cx(0.8, 0.2), cfg).all_pass());
  CHECK(cmd_empty(4, 4, 0, cfg).all_pass());
  CHECK(cmd_empty(2, 0, 0, cfg).all_pass());
  CHECK(cmd_empty(3, 3, 3, cfg).all_pass());
  CHECK(cmd_twistor(2, 10, cx(0.55), cx(0.55), cfg).all_pass());
  CHECK(cmd_twistor(1, 10, cx(0.7, 0.1), cx(0.4, -0.2), cfg).all_pass());
  CHECK(cmd_twistor(0, 10, cx(1), cx(0.6), cfg).all_pass());
  CHECK(cmd_nahm(2, 0.01, 1.0, "pole", cfg).all_pass());
  CampaignConfig small = cfg;
  small.trials = 3;
  CHECK(cmd_nahm(2, 0.1, 1.0, "bounded", small).all_pass());
}

TEST_CASE("degenerate and invalid parameters are surfaced, not thrown") {
  CampaignConfig cfg;
  cfg.trials = 2;
  const RunReport r = cmd_verify_surface(0, cx(1), cx(0), cfg);
  CHECK_FALSE(r.all_pass());
  CHECK(r.error.find("DegenerateParameter") != std::string::npos);

  CHECK_FALSE(cmd_verify_surface(7, cx(1), cx(1), cfg).error.empty());
  CHECK_FALSE(cmd_empty(4, 3, 0, cfg).error.empty());  // parity mismatch
  CHECK_FALSE(cmd_nahm(2, 0.5, 0.1, "pole", cfg).error.empty());
  CHECK_FALSE(cmd_nahm(2, 0.1, 1.0, "sideways", cfg).error.empty());
}

TEST_CASE("zero trials yields an empty passing report") {
  CampaignConfig cfg;
  cfg.trials = 0;
  const RunReport r = cmd_verify_surface(2, cx(1), cx(1), cfg);
  CHECK(r.checks.empty());
  CHECK(r.all_pass());
}

TEST_CASE("tolerance override applies to every check") {
  CampaignConfig cfg;
  cfg.trials = 4;
  cfg.tol_override = 1e-1;
  const RunReport r = cmd_verify_surface(2, cx(1), cx(0.5), cfg);
  for (const auto& c : r.checks) CHECK(c.tol == 1e-1);
}

TEST_CASE("aggregate keeps the worst residual per anchor") {
  std::vector<Check> cs = {make_check("x", 1.0, 2.0), make_check("y", 0.5, 0.1),
                           make_check("x", 1.5, 2.0)};
  const auto agg = aggregate_max(cs);
  REQUIRE(agg.size() == 2);
  CHECK(agg[0].anchor == "x");
  CHECK(agg[0].residual == 1.5);
  CHECK(agg[0].pass);
  CHECK_FALSE(agg[1].pass);
}

TEST_CASE("timing is excluded from the default report") {
  CampaignConfig cfg;
  cfg.trials = 1;
  const RunReport r = cmd_verify_surface(2, cx(1), cx(0.5), cfg);
  CHECK_FALSE(r.to_json(false).contains("elapsed_ms"));
  CHECK(r.to_json(true).contains("elapsed_ms"));
}

TEST_CASE("point documents round trip and verify") {
  Rng rng(91);
  const cx mu1(1.05, 0.1), mu2(0.65, -0.2);

  // SlicePoint document
  const auto sp = std::get<D2Point>(sample_surface_point(2, mu1, mu2, rng));
  const SlicePoint pt = reconstruct_n2(sp);
  const nlohmann::json doc = to_json(pt);
  const SlicePoint loaded = slice_point_from_json(doc);
  CHECK(sup_norm(loaded.S - pt.S) < 1e-15);
  CHECK(sup_norm(loaded.Y - pt.Y) < 1e-15);
  CHECK(verify_document(doc).all_pass());

  // corrupting Y must fail the residual checks
  nlohmann::json bad = doc;
  bad["Y"][0][0] = nlohmann::json::array({9.0, 0.0});
  CHECK_FALSE(verify_document(bad).all_pass());

  // SurfacePoint document
  const nlohmann::json sdoc = to_json(SurfacePoint{sp});
  CHECK(verify_document(sdoc).all_pass());

  // HilbPoint document
  HilbPoint hp;
  hp.q = Polynomial({cx(-0.4, 0.1), cx(1)});  // root z0 = 0.4 - 0.1i
  hp.coords = {Polynomial::constant(cx(2)),
               Polynomial::constant(cx(0.4, -0.1) / cx(2))};  // y = z0 / x
  CHECK(verify_document(to_json(hp, "c2_xy", cx(0), cx(0))).all_pass());
}
