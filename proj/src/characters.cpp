#include "macdonald/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace mac {

std::string char_kind_name(CharKind k) {
  switch (k) {
    case CharKind::D: return "D";
    case CharKind::Uo: return "Uo";
    case CharKind::T: return "T";
    case CharKind::A_D: return "A-D";
    case CharKind::A_U: return "A-U";
  }
  return "";
}

CharKind parse_char_kind(const std::string& s) {
  for (CharKind k : {CharKind::D, CharKind::Uo, CharKind::T, CharKind::A_D, CharKind::A_U})
    if (char_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown character kind: " + s);
}

BimoduleCharacter place_block(const std::map<Exps, QSeries>& f, bool right, VarSet vars,
                              const TruncationPolicy& policy) {
  BimoduleCharacter r(vars, policy);
  int b = vars.block();
  for (const auto& [m, c] : f) {
    Exps full(vars.size(), 0);
    Exps w = vars.kind == VarSet::Kind::gl ? m : restrict_weight(m);
    if (static_cast<int>(w.size()) != b) throw std::invalid_argument("rank mismatch");
    std::copy(w.begin(), w.end(), full.begin() + (right ? b : 0));
    r.add_term(full, *policy.max_q < c.cap() ? c.truncated(*policy.max_q) : c);
  }
  return r;
}

namespace {

Composition zero_representative(const Composition& lambda) {
  Composition r = lambda;
  int lo = *std::min_element(r.begin(), r.end());
  for (auto& x : r) x -= lo;
  return r;
}

BimoduleCharacter constant(const QSeries& c, VarSet vars, const TruncationPolicy& policy) {
  BimoduleCharacter r(vars, policy);
  r.add_term(Exps(vars.size(), 0), c);
  return r;
}

}  // namespace

BimoduleCharacter char_module(CharKind kind, const Composition& lambda, VarSet vars,
                              const TruncationPolicy& policy) {
  if (!policy.max_q) throw std::invalid_argument("characters need a q cap");
  if (static_cast<int>(lambda.size()) != vars.n) throw std::invalid_argument("rank mismatch");
  bool gl = vars.kind == VarSet::Kind::gl;
  if (gl && !is_composition(lambda)) throw std::invalid_argument("gl characters need a composition");
  int cap = *policy.max_q;
  Composition lam = gl ? lambda : zero_representative(lambda);
  switch (kind) {
    case CharKind::D:
      return place_block(specialized_series(lam, Spec::t0, cap), false, vars, policy);
    case CharKind::Uo:
      return place_block(specialized_series(lam, Spec::qinv_tinf, cap), true, vars, policy);
    case CharKind::A_D:
      return constant(hw_algebra_char(lam, WordMode::D, gl).series(cap), vars, policy);
    case CharKind::A_U:
      return constant(hw_algebra_char(lam, WordMode::U, gl).series(cap), vars, policy);
    case CharKind::T: {
      auto a = char_module(CharKind::A_D, lambda, vars, policy);
      auto d = char_module(CharKind::D, lambda, vars, policy);
      auto u = char_module(CharKind::Uo, lambda, vars, policy);
      return mul_truncated(mul_truncated(a, d), u);
    }
  }
  throw std::logic_error("unreachable");
}

BimoduleCharacter ch_iwahori_functions(int n, const TruncationPolicy& policy) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  VarSet vars = VarSet::gl(n);
  auto pair = [&](int i, int j) {
    Exps m(2 * n, 0);
    m[i] = 1;
    m[n + j] = 1;
    return m;
  };
  BimoduleCharacter r = pochhammer_series<QSeries>(PochArg{1, 0, Exps(2 * n, 1)}, std::nullopt, vars, policy);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PochArg a{1, i <= j ? 0 : 1, pair(i, j)};
      r = mul_truncated(r, inverse_truncated(pochhammer_series<QSeries>(a, std::nullopt, vars, policy)));
    }
  return r;
}

VerificationReport ch_weyl_ratio_check(const Composition& lambda, int m, const ReducedWord& w) {
  VerificationReport rep;
  rep.variant = "weyl-ratio";
  rep.n = static_cast<int>(lambda.size());
  auto anti = antidominant_data(lambda).antidominant;
  rep.policy = {{"lambda", lambda}, {"m", m}, {"word", w.to_json()}};
  auto from_l = hw_algebra_char_at(anti, w, m);
  auto from_counts = hw_algebra_char_counts(anti, w, m);
  rep.pass = from_l == from_counts;
  if (!rep.pass) {
    rep.witness = "generator degrees";
    rep.lhs_coeff = nlohmann::json(from_l.generator_degrees).dump();
    rep.rhs_coeff = nlohmann::json(from_counts.generator_degrees).dump();
  }
  return rep;
}

}  // namespace mac
