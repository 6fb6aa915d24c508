#include "macdonald/report.hpp"

namespace mac {

nlohmann::json VerificationReport::to_json(bool timing) const {
  nlohmann::json j;
  j["variant"] = variant;
  j["n"] = n;
  j["policy"] = policy;
  j["outcome"] = pass ? "pass" : "fail";
  if (witness) j["witness"] = {{"monomial", *witness}, {"lhs", lhs_coeff}, {"rhs", rhs_coeff}};
  j["lambda_count"] = lambda_count;
  if (!notes.empty()) j["notes"] = notes;
  if (timing) j["elapsed_seconds"] = elapsed;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.variant = j.at("variant").get<std::string>();
  r.n = j.at("n").get<int>();
  r.policy = j.at("policy");
  r.pass = j.at("outcome").get<std::string>() == "pass";
  if (j.contains("witness")) {
    r.witness = j["witness"].at("monomial").get<std::string>();
    r.lhs_coeff = j["witness"].at("lhs").get<std::string>();
    r.rhs_coeff = j["witness"].at("rhs").get<std::string>();
  }
  r.lambda_count = j.at("lambda_count").get<long>();
  if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  if (j.contains("elapsed_seconds")) r.elapsed = j["elapsed_seconds"].get<double>();
  return r;
}

std::string VerificationReport::to_text(bool timing) const {
  std::string s;
  s += "variant: " + variant + "\n";
  s += "n: " + std::to_string(n) + "\n";
  s += "policy: " + policy.dump() + "\n";
  s += "lambda_count: " + std::to_string(lambda_count) + "\n";
  for (const auto& note : notes) s += "note: " + note + "\n";
  if (pass) {
    s += "outcome: pass\n";
  } else {
    s += "outcome: fail\n";
    if (witness) {
      s += "witness: " + *witness + "\n";
      s += "lhs: " + lhs_coeff + "\n";
      s += "rhs: " + rhs_coeff + "\n";
    }
  }
  if (timing) s += "elapsed_seconds: " + std::to_string(elapsed) + "\n";
  return s;
}

}  // namespace mac
