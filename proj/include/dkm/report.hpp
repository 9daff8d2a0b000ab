#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dkm {

// One verified identity: the anchor names the equation or property checked.
struct Check {
  std::string anchor;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

inline Check make_check(std::string anchor, double residual, double tol) {
  return Check{std::move(anchor), residual, tol, residual <= tol};
}

struct RunReport {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;
  std::string error;  // nonempty when the command aborted on a domain error

  bool all_pass() const;
  // Machine report. Timing is opt-in so that reruns with the same seed are
  // byte-identical.
  nlohmann::json to_json(bool with_timing = false) const;
  std::string pretty() const;
};

// Collapse repeated anchors to their worst residual, keeping first-seen order.
std::vector<Check> aggregate_max(const std::vector<Check>& checks);

}  // namespace dkm
