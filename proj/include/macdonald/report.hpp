#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace mac {

struct VerificationReport {
  std::string variant;
  int n = 0;
  nlohmann::json policy = nlohmann::json::object();
  bool pass = false;
  // failure witness: monomial text and both coefficients
  std::optional<std::string> witness;
  std::string lhs_coeff, rhs_coeff;
  long lambda_count = 0;
  double elapsed = 0;  // seconds; reported only on request
  std::vector<std::string> notes;

  nlohmann::json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
  static VerificationReport from_json(const nlohmann::json& j);
};

}  // namespace mac
