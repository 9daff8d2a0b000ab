#include "dkm/report.hpp"

#include <map>
#include <sstream>

namespace dkm {

bool RunReport::all_pass() const {
  if (!error.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json RunReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["command"] = command;
  j["params"] = params;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"anchor", c.anchor},
                           {"residual", c.residual},
                           {"tol", c.tol},
                           {"pass", c.pass}});
  }
  if (!error.empty()) j["error"] = error;
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string RunReport::pretty() const {
  std::ostringstream os;
  os << "== " << command << " ==\n";
  os << "params: " << params.dump() << "\n";
  if (!error.empty()) os << "error: " << error << "\n";
  for (const auto& c : checks) {
    os.setf(std::ios::scientific);
    os.precision(3);
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.residual << " <= " << c.tol << "  "
       << c.anchor << "\n";
  }
  os << "elapsed: " << elapsed_ms << " ms\n";
  return os.str();
}

std::vector<Check> aggregate_max(const std::vector<Check>& checks) {
  std::vector<Check> out;
  std::map<std::string, size_t> index;
  for (const auto& c : checks) {
    auto it = index.find(c.anchor);
    if (it == index.end()) {
      index[c.anchor] = out.size();
      out.push_back(c);
    } else {
      Check& agg = out[it->second];
      if (c.residual > agg.residual) agg.residual = c.residual;
      agg.pass = agg.pass && c.pass;
    }
  }
  return out;
}

}  // namespace dkm
