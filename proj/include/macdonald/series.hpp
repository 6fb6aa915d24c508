#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "macdonald/exact.hpp"

namespace mac {

using Exps = std::vector<int>;

// Variable set: gl uses x1..xn, y1..yn (nonnegative); sl uses the fundamental
// weight coordinates of X and Y (n-1 each, Laurent).
struct VarSet {
  enum class Kind { gl, sl };
  Kind kind = Kind::gl;
  int n = 1;

  static VarSet gl(int n) { return {Kind::gl, n}; }
  static VarSet sl(int n) { return {Kind::sl, n}; }
  int block() const { return kind == Kind::gl ? n : n - 1; }
  int size() const { return 2 * block(); }
  bool laurent() const { return kind == Kind::sl; }
  friend bool operator==(const VarSet&, const VarSet&) = default;
};

int x_degree(const Exps& m, const VarSet& v);
int y_degree(const Exps& m, const VarSet& v);

// graded lex: x-degree, x exponents descending lex, then the same on the y-block
struct MonomialOrder {
  int block;
  bool operator()(const Exps& a, const Exps& b) const;
};

struct ExpsHash {
  size_t operator()(const Exps& e) const {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : e) h = (h ^ static_cast<size_t>(x + 0x1000)) * 0x100000001b3ULL;
    return h;
  }
};

// Generators of an order ideal grouped by every x-part they dominate.
struct IdealIndex {
  int block = 0;
  std::unordered_map<Exps, std::vector<Exps>, ExpsHash> by_x;
  IdealIndex(const std::vector<Exps>& gens, int block);
  bool admits(const Exps& m) const;
  bool admits_x(const Exps& x) const { return by_x.count(x) > 0; }
};

struct TruncationPolicy {
  std::optional<int> max_x, max_y, max_q;
  // Down-closed order ideal: a monomial is admitted when it is bounded
  // componentwise by one of the generators.
  std::optional<std::vector<Exps>> ideal;
  std::shared_ptr<const IdealIndex> index;  // optional lookup for ideal

  static TruncationPolicy from_ideal(std::vector<Exps> gens, int block, std::optional<int> k) {
    TruncationPolicy p;
    p.index = std::make_shared<IdealIndex>(gens, block);
    p.ideal = std::move(gens);
    p.max_q = k;
    return p;
  }

  static TruncationPolicy degrees(int dx, int dy, std::optional<int> k) {
    TruncationPolicy p;
    p.max_x = dx;
    p.max_y = dy;
    p.max_q = k;
    return p;
  }
  bool admits(const Exps& m, const VarSet& v) const;
  TruncationPolicy compose(const TruncationPolicy& o) const;
  nlohmann::json to_json() const;
};

// Scalar adapters. The cap argument is the q-cap of the surrounding policy.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<QSeries> {
  static QSeries zero(std::optional<int> cap) { return QSeries(cap.value_or(0)); }
  static QSeries one(std::optional<int> cap) { return QSeries::one(cap.value_or(0)); }
  static QSeries from_rational(const Rational& r, std::optional<int> cap) {
    return QSeries(r, cap.value_or(0));
  }
  static bool is_zero(const QSeries& s) { return s.is_zero(); }
  static void add_product(QSeries& acc, const QSeries& a, const QSeries& b) { acc.add_product(a, b); }
  static std::optional<QSeries> inverse(const QSeries& s) { return s.inverse(); }
  static nlohmann::json to_json(const QSeries& s) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : s.coeffs()) j.push_back(c.get_str());
    return j;
  }
  static std::string to_text(const QSeries& s) { return s.to_qpoly().to_string(); }
};

template <>
struct ScalarOps<QTRational> {
  static QTRational zero(std::optional<int>) { return QTRational(); }
  static QTRational one(std::optional<int>) { return QTRational(1); }
  static QTRational from_rational(const Rational& r, std::optional<int>) { return QTRational(r); }
  static bool is_zero(const QTRational& s) { return s.is_zero(); }
  static void add_product(QTRational& acc, const QTRational& a, const QTRational& b) { acc += a * b; }
  static std::optional<QTRational> inverse(const QTRational& s) {
    if (s.is_zero()) return std::nullopt;
    return QTRational(1) / s;
  }
  static nlohmann::json to_json(const QTRational& s) {
    return {{"num", s.num().grid()}, {"den", s.den().grid()}};
  }
  static std::string to_text(const QTRational& s) { return s.to_string(); }
};

template <>
struct ScalarOps<QPoly> {
  static QPoly zero(std::optional<int>) { return QPoly(); }
  static QPoly one(std::optional<int>) { return QPoly(1); }
  static QPoly from_rational(const Rational& r, std::optional<int>) { return QPoly(r); }
  static bool is_zero(const QPoly& s) { return s.is_zero(); }
  static void add_product(QPoly& acc, const QPoly& a, const QPoly& b) { acc += a * b; }
  static std::optional<QPoly> inverse(const QPoly& s) {
    if (!s.is_constant() || s.is_zero()) return std::nullopt;
    return QPoly(Rational(1) / s.lead());
  }
  static nlohmann::json to_json(const QPoly& s) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : s.coeffs()) j.push_back(c.get_str());
    return j;
  }
  static std::string to_text(const QPoly& s) { return s.to_string(); }
};

std::string monomial_text(const Exps& m, const VarSet& v);

template <class S>
class TruncatedSeries {
 public:
  using Ops = ScalarOps<S>;
  using Map = std::map<Exps, S, MonomialOrder>;

  TruncatedSeries(VarSet vars, TruncationPolicy policy)
      : vars_(vars), policy_(std::move(policy)), terms_(MonomialOrder{vars.block()}) {}

  static TruncatedSeries one(VarSet vars, TruncationPolicy policy) {
    TruncatedSeries r(vars, policy);
    r.add_term(Exps(vars.size(), 0), Ops::one(r.policy_.max_q));
    return r;
  }

  const VarSet& vars() const { return vars_; }
  const TruncationPolicy& policy() const { return policy_; }
  const Map& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const Exps& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Ops::zero(policy_.max_q) : it->second;
  }

  bool in_policy(const Exps& m) const { return policy_.admits(m, vars_); }

  void check_monomial(const Exps& m) const {
    if (static_cast<int>(m.size()) != vars_.size())
      throw std::invalid_argument("monomial length does not match variable set");
    if (!vars_.laurent())
      for (int e : m)
        if (e < 0) throw std::invalid_argument("negative exponent in non-Laurent variable set");
  }

  // Adds c*m, silently dropping out-of-policy monomials.
  void add_term(const Exps& m, const S& c) {
    check_monomial(m);
    if (!in_policy(m) || Ops::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (Ops::is_zero(it->second)) terms_.erase(it);
    }
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  TruncatedSeries scaled(const S& c) const {
    TruncatedSeries r(vars_, policy_);
    for (const auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
  }

  TruncatedSeries retruncated(const TruncationPolicy& p) const {
    TruncatedSeries r(vars_, policy_.compose(p));
    for (const auto& [m, c] : terms_) {
      if (!r.in_policy(m)) continue;
      r.add_term(m, retruncate_scalar(c, r.policy_.max_q));
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // First monomial (canonical order) where a and b differ.
  static std::optional<Exps> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries d = a - b;
    if (d.is_zero()) return std::nullopt;
    return d.terms_.begin()->first;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) terms.push_back({{"exps", m}, {"coeff", Ops::to_json(c)}});
    return terms;
  }

  std::string to_text() const {
    if (terms_.empty()) return "0\n";
    std::string out;
    for (const auto& [m, c] : terms_) out += monomial_text(m, vars_) + ": " + Ops::to_text(c) + "\n";
    return out;
  }

  void require_same_vars(const TruncatedSeries& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("variable-set mismatch");
  }

 private:
  static S retruncate_scalar(const S& c, std::optional<int> cap) {
    if constexpr (std::is_same_v<S, QSeries>) {
      return cap ? c.truncated(*cap) : c;
    } else {
      return c;
    }
  }

  VarSet vars_;
  TruncationPolicy policy_;
  Map terms_;
};

template <class S>
TruncatedSeries<S> mul_truncated(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  f.require_same_vars(g);
  TruncatedSeries<S> r(f.vars(), f.policy().compose(g.policy()));
  std::map<Exps, S, MonomialOrder> acc(MonomialOrder{f.vars().block()});
  Exps m(f.vars().size());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      for (size_t i = 0; i < m.size(); ++i) m[i] = a[i] + b[i];
      if (!r.in_policy(m)) continue;
      auto it = acc.find(m);
      if (it == acc.end()) it = acc.emplace(m, ScalarOps<S>::zero(r.policy().max_q)).first;
      ScalarOps<S>::add_product(it->second, ca, cb);
    }
  }
  for (auto& [mm, c] : acc) r.add_term(mm, c);
  return r;
}

// Inverse by the geometric series in f/c0 - 1; terminates because every
// non-constant monomial raises the letter degree and the policy bounds it.
template <class S>
TruncatedSeries<S> inverse_truncated(const TruncatedSeries<S>& f) {
  const VarSet& v = f.vars();
  if (v.laurent() || !f.policy().max_x || !f.policy().max_y)
    throw std::invalid_argument("inversion needs bounded letter degrees");
  Exps zero(v.size(), 0);
  auto c0 = ScalarOps<S>::inverse(f.coeff(zero));
  if (!c0) throw std::domain_error("series not invertible");
  TruncatedSeries<S> h = f.scaled(*c0);
  h -= TruncatedSeries<S>::one(v, f.policy());
  TruncatedSeries<S> neg_h = h.scaled(ScalarOps<S>::from_rational(-1, f.policy().max_q));
  TruncatedSeries<S> result = TruncatedSeries<S>::one(v, f.policy());
  TruncatedSeries<S> power = result;
  while (true) {
    power = mul_truncated(power, neg_h);
    if (power.is_zero()) break;
    result += power;
  }
  return result.scaled(*c0);
}

// Argument of a Pochhammer symbol: coeff * q^qpow * monomial.
struct PochArg {
  Rational coeff = 1;
  int qpow = 0;
  Exps mono;
};

class DivergentPochhammer : public std::domain_error {
 public:
  DivergentPochhammer() : std::domain_error("divergent Pochhammer") {}
};

// (a;q)_count, count = nullopt meaning infinity.
template <class S>
TruncatedSeries<S> pochhammer_series(const PochArg& a, std::optional<int> count, VarSet vars,
                                     const TruncationPolicy& policy) {
  TruncatedSeries<S> r = TruncatedSeries<S>::one(vars, policy);
  bool letters = std::any_of(a.mono.begin(), a.mono.end(), [](int e) { return e != 0; });
  if (!count) {
    if (!letters && a.qpow <= 0) throw DivergentPochhammer();
    if (!policy.max_q) throw DivergentPochhammer();
  }
  if (a.qpow < 0) throw std::invalid_argument("negative q power in Pochhammer argument");
  for (int i = 0; !count || i < *count; ++i) {
    int e = a.qpow + i;
    if (policy.max_q && e > *policy.max_q) break;
    if (letters && !r.in_policy(a.mono)) break;
    TruncatedSeries<S> factor = TruncatedSeries<S>::one(vars, policy);
    S c = ScalarOps<S>::zero(policy.max_q);
    if constexpr (std::is_same_v<S, QSeries>) {
      c = QSeries::q_power(e, *policy.max_q);
      c *= -a.coeff;
    } else {
      c = S(QPoly::monomial(-a.coeff, e));
    }
    factor.add_term(a.mono, c);
    r = mul_truncated(r, factor);
  }
  return r;
}

// (a z;q)_inf / (b z;q)_inf = sum_m (a/b;q)_m / (q;q)_m (b z)^m for exact (q,t)
// scalars a, b; usable without a q-cap.
TruncatedSeries<QTRational> pochhammer_ratio_series(const QTRational& a, const QTRational& b,
                                                     const Exps& z, VarSet vars,
                                                     const TruncationPolicy& policy);

}  // namespace mac
