#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace hilb {

// Outcome of one identity check.
struct Report {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::string firstDiscrepancy;
  std::size_t checked = 0;

  Report() = default;
  Report(std::string id, nlohmann::json p) : identity(std::move(id)), params(std::move(p)) {}

  void fail(const std::string& what) {
    if (pass) {
      pass = false;
      firstDiscrepancy = what;
    }
  }
  // Record an equality check, keeping the first failure.
  template <class T>
  void expectEqual(const T& a, const T& b, const std::string& where) {
    ++checked;
    if (!(a == b)) fail(where);
  }
  void merge(const Report& o) {
    checked += o.checked;
    if (!o.pass) fail(o.identity + ": " + o.firstDiscrepancy);
  }

  nlohmann::json toJson() const {
    nlohmann::json j = params;
    j["identity"] = identity;
    j["pass"] = pass;
    j["checked"] = checked;
    j["firstDiscrepancy"] = pass ? nlohmann::json(nullptr) : nlohmann::json(firstDiscrepancy);
    return j;
  }
};

}  // namespace hilb
