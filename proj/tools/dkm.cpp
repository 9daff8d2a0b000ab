// Command-line driver for the verification campaigns. Every command prints a
// JSON report to stdout (or --json-out PATH); rerunning with the same --seed
// yields a byte-identical report. --timing adds the measured elapsed_ms,
// --pretty prints a human-readable table to stderr instead of machine output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dkm/campaigns.hpp"
#include "dkm/serialize.hpp"

namespace {

dkm::cx parse_cx(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return dkm::cx(std::stod(s), 0.0);
  return dkm::cx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

struct Output {
  bool pretty = false;
  bool timing = false;
  std::string json_out;
};

int emit(const dkm::RunReport& rep, const Output& out) {
  const std::string payload = rep.to_json(out.timing).dump(2) + "\n";
  if (!out.json_out.empty()) {
    std::ofstream f(out.json_out);
    f << payload;
  }
  if (out.pretty) {
    std::cerr << rep.pretty();
    if (out.json_out.empty()) std::cout << payload;
  } else {
    std::cout << payload;
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for slice varieties, ALF surfaces and "
               "transverse Hilbert schemes"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  dkm::CampaignConfig cfg;
  std::string mu1_s = "1", mu2_s = "0.6";
  double tol = -1.0;
  app.add_flag("--pretty", out.pretty, "human-readable table on stderr");
  app.add_flag("--timing", out.timing, "include measured elapsed_ms in the JSON");
  app.add_flag("--serial", cfg.serial, "disable OpenMP trial parallelism");
  app.add_option("--json-out", out.json_out, "write the JSON report to PATH");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--trials", cfg.trials, "number of random trials");
  app.add_option("--tol", tol, "override every check tolerance");
  app.add_option("--mu1", mu1_s, "first eigenvalue parameter, RE or RE,IM");
  app.add_option("--mu2", mu2_s, "second eigenvalue parameter, RE or RE,IM");

  int kind = 2, n = 2, m = 1, d1 = 0, d2 = 0, samples = 200;
  double epsilon = 0.01, t_end = 1.0;
  std::string mode = "pole", input_path;

  auto* surf = app.add_subcommand("verify-surface",
                                  "sample surface points and verify the slice equations");
  surf->add_option("--kind", kind, "surface kind: 0, 1 or 2");

  auto* hilb = app.add_subcommand("hilb-roundtrip",
                                  "gather/scatter and coordinate-polynomial round trips");
  hilb->add_option("--kind", kind, "surface kind: 0, 1 or 2");
  hilb->add_option("--m", m, "number of points");

  auto* empty = app.add_subcommand("empty", "emptiness certificate and rank obstruction");
  empty->add_option("--n", n, "matrix size");
  empty->add_option("--d1", d1, "trace parameter of the first orbit");
  empty->add_option("--d2", d2, "trace parameter of the second orbit");

  auto* twist = app.add_subcommand("twistor",
                                   "chart round trips, equation transport, quadrics");
  twist->add_option("--kind", kind, "surface kind: 0, 1 or 2");
  twist->add_option("--samples", samples, "number of zeta/point samples");

  auto* nahm = app.add_subcommand("nahm", "matrix flow diagnostics");
  nahm->add_option("--n", n, "matrix size");
  nahm->add_option("--epsilon", epsilon, "start time");
  nahm->add_option("--t-end", t_end, "end time");
  nahm->add_option("--mode", mode, "'pole' or 'bounded'");

  auto* verify = app.add_subcommand("verify", "re-verify a stored point document");
  verify->add_option("--input", input_path, "point JSON file")->required();

  CLI11_PARSE(app, argc, argv);
  if (tol > 0.0) cfg.tol_override = tol;
  const dkm::cx mu1 = parse_cx(mu1_s), mu2 = parse_cx(mu2_s);

  try {
    if (surf->parsed()) return emit(dkm::cmd_verify_surface(kind, mu1, mu2, cfg), out);
    if (hilb->parsed()) return emit(dkm::cmd_hilb_roundtrip(kind, m, mu1, mu2, cfg), out);
    if (empty->parsed()) return emit(dkm::cmd_empty(n, d1, d2, cfg), out);
    if (twist->parsed()) return emit(dkm::cmd_twistor(kind, samples, mu1, mu2, cfg), out);
    if (nahm->parsed()) return emit(dkm::cmd_nahm(n, epsilon, t_end, mode, cfg), out);
    if (verify->parsed()) {
      std::ifstream f(input_path);
      if (!f) {
        std::cerr << "cannot open " << input_path << "\n";
        return 2;
      }
      nlohmann::json doc = nlohmann::json::parse(f);
      return emit(dkm::verify_document(doc), out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
