#include "macdonald/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mac {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  r.canonicalize();
  return r;
}

namespace {

// Joins signed terms into "a + b - c" form. Each term is (coefficient, monomial text),
// an empty monomial meaning the constant term.
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(long c) {
  if (c != 0) c_.push_back(Rational(c));
}

QPoly::QPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, int e) {
  QPoly p;
  if (c == 0) return p;
  p.c_.assign(e + 1, Rational(0));
  p.c_[e] = c;
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Rational QPoly::coeff(int e) const {
  if (e < 0 || e >= static_cast<int>(c_.size())) return 0;
  return c_[e];
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::shifted(int e) const {
  if (is_zero() || e == 0) return *this;
  QPoly r;
  r.c_.assign(e, Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Rational QPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r = *this;
  r *= Rational(1) / lead();
  return r;
}

QPoly QPoly::reversed(int deg) const {
  std::vector<Rational> r(deg + 1);
  for (size_t i = 0; i < c_.size(); ++i) r[deg - i] = c_[i];
  return QPoly(std::move(r));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  rem = a;
  quo = QPoly();
  if (a.degree() < b.degree()) return;
  std::vector<Rational> qc(a.degree() - b.degree() + 1);
  Rational inv = Rational(1) / b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    Rational c = rem.lead() * inv;
    qc[k] = c;
    for (size_t j = 0; j < b.c_.size(); ++j) rem.c_[k + j] -= c * b.c_[j];
    rem.trim();
  }
  quo = QPoly(std::move(qc));
}

QPoly QPoly::divexact(const QPoly& a, const QPoly& b) {
  QPoly quo, rem;
  divmod(a, b, quo, rem);
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
  return quo;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly quo, rem;
    divmod(a, b, quo, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return a.monic();
}

std::string QPoly::to_string(const std::string& var) const {
  std::vector<std::pair<Rational, std::string>> terms;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.emplace_back(c_[i], power(var, static_cast<int>(i)));
  return join_terms(terms);
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const QPoly& c) {
  if (!c.is_zero()) c_.push_back(c);
}

BiPoly::BiPoly(std::vector<QPoly> tcoeffs) : c_(std::move(tcoeffs)) { trim(); }

BiPoly BiPoly::term(const Rational& c, int qe, int te) {
  BiPoly p;
  if (c == 0) return p;
  p.c_.resize(te + 1);
  p.c_[te] = QPoly::monomial(c, qe);
  return p;
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::tval() const {
  for (size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return static_cast<int>(j);
  return -1;
}

int BiPoly::qdeg() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::qval() const {
  int v = -1;
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    int cv = c.valuation();
    if (v < 0 || cv < v) v = cv;
  }
  return v;
}

QPoly BiPoly::tcoeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return QPoly();
  return c_[j];
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

BiPoly& BiPoly::operator*=(const QPoly& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<QPoly> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(r));
}

BiPoly BiPoly::shifted(int qe, int te) const {
  if (is_zero()) return *this;
  std::vector<QPoly> r(te);
  for (const auto& c : c_) r.push_back(c.shifted(qe));
  return BiPoly(std::move(r));
}

QPoly BiPoly::content() const {
  QPoly g;
  for (const auto& c : c_) {
    g = QPoly::gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

BiPoly BiPoly::divided(const QPoly& c) const {
  if (c.is_constant()) {
    BiPoly r = *this;
    r *= Rational(1) / c.lead();
    return r;
  }
  std::vector<QPoly> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(QPoly::divexact(x, c));
  return BiPoly(std::move(r));
}

BiPoly BiPoly::invert_q() const {
  int d = qdeg();
  std::vector<QPoly> r;
  for (const auto& c : c_) r.push_back(c.is_zero() ? c : c.reversed(d));
  return BiPoly(std::move(r));
}

BiPoly BiPoly::invert_t() const {
  std::vector<QPoly> r(c_.rbegin(), c_.rend());
  return BiPoly(std::move(r));
}

BiPoly BiPoly::divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.tdeg() == 0) return a.divided(b.c_[0]);
  BiPoly r = a;
  std::vector<QPoly> quo;
  if (a.tdeg() >= b.tdeg()) quo.resize(a.tdeg() - b.tdeg() + 1);
  const QPoly& lb = b.c_.back();
  while (!r.is_zero() && r.tdeg() >= b.tdeg()) {
    int k = r.tdeg() - b.tdeg();
    QPoly c = QPoly::divexact(r.c_.back(), lb);
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[k + j] -= c * b.c_[j];
    r.trim();
    quo[k] = std::move(c);
  }
  if (!r.is_zero()) throw std::logic_error("inexact bivariate division");
  return BiPoly(std::move(quo));
}

namespace {

BiPoly pseudo_remainder(BiPoly r, const BiPoly& b) {
  const QPoly lb = b.tcoeffs().back();
  const int db = b.tdeg();
  while (!r.is_zero() && r.tdeg() >= db) {
    QPoly lr = r.tcoeffs().back();
    int k = r.tdeg() - db;
    r *= lb;
    BiPoly s = b;
    s *= lr;
    r -= s.shifted(0, k);
  }
  return r;
}

BiPoly primitive(const BiPoly& a) {
  BiPoly p = a.divided(a.content());
  p *= Rational(1) / p.lead();
  return p;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  QPoly g0 = QPoly::gcd(a.content(), b.content());
  if (!a.has_t() || !b.has_t()) return BiPoly(g0);
  BiPoly pa = primitive(a), pb = primitive(b);
  if (pa.tdeg() < pb.tdeg()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.tdeg() == 0) {
      pa = BiPoly(1);
      break;
    }
    BiPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive(r);
  }
  pa *= g0;
  return pa;
}

std::vector<std::vector<std::string>> BiPoly::grid() const {
  std::vector<std::vector<std::string>> g;
  for (const auto& c : c_) {
    std::vector<std::string> row;
    for (const auto& x : c.coeffs()) row.push_back(x.get_str());
    g.push_back(std::move(row));
  }
  return g;
}

std::string BiPoly::to_string() const {
  std::vector<std::pair<Rational, std::string>> terms;
  for (size_t j = 0; j < c_.size(); ++j) {
    const auto& cs = c_[j].coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] == 0) continue;
      std::string m = power("q", static_cast<int>(i));
      std::string tm = power("t", static_cast<int>(j));
      if (!m.empty() && !tm.empty()) m += "*";
      terms.emplace_back(cs[i], m + tm);
    }
  }
  return join_terms(terms);
}

// ---------------------------------------------------------------- QTRational

QTRational::QTRational(const BiPoly& p) : num_(p), den_(1) {}

QTRational::QTRational(const BiPoly& num, const BiPoly& den) {
  *this = normalize_qt(num, den);
}

QTRational normalize_qt(const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero rational function");
  QTRational r;
  if (num.is_zero()) return r;
  BiPoly n = num, d = den;
  if (!d.is_constant()) {
    BiPoly g = BiPoly::gcd(n, d);
    if (!g.is_constant()) {
      n = BiPoly::divexact(n, g);
      d = BiPoly::divexact(d, g);
    }
  }
  Rational c = Rational(1) / d.lead();
  n *= c;
  d *= c;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

QTRational& QTRational::operator+=(const QTRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    BiPoly n = num_ + o.num_;
    return *this = normalize_qt(n, den_);
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  BiPoly g = BiPoly::gcd(den_, o.den_);
  BiPoly a = BiPoly::divexact(o.den_, g);
  BiPoly b = BiPoly::divexact(den_, g);
  BiPoly n = num_ * a + o.num_ * b;
  BiPoly d = den_ * a;
  return *this = normalize_qt(n, d);
}

QTRational& QTRational::operator-=(const QTRational& o) { return *this += -o; }

QTRational QTRational::operator-() const {
  QTRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QTRational& QTRational::operator*=(const QTRational& o) {
  if (is_zero() || o.is_zero()) return *this = QTRational();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  BiPoly g1 = BiPoly::gcd(num_, o.den_);
  BiPoly g2 = BiPoly::gcd(o.num_, den_);
  BiPoly n = BiPoly::divexact(num_, g1) * BiPoly::divexact(o.num_, g2);
  BiPoly d = BiPoly::divexact(den_, g2) * BiPoly::divexact(o.den_, g1);
  Rational c = Rational(1) / d.lead();
  n *= c;
  d *= c;
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

QTRational& QTRational::operator/=(const QTRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  QTRational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  Rational c = Rational(1) / inv.den_.lead();
  inv.num_ *= c;
  inv.den_ *= c;
  return *this *= inv;
}

std::string QTRational::to_string() const {
  if (den_ == BiPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QTRational limit_t(const QTRational& f, LimitDir dir) {
  if (f.is_zero()) return f;
  const BiPoly& n = f.num();
  const BiPoly& d = f.den();
  if (dir == LimitDir::zero) {
    int vn = n.tval(), vd = d.tval();
    if (vn < vd) throw DivergentLimit("limit t->0 diverges", vn, vd);
    if (vn > vd) return QTRational();
    return normalize_qt(BiPoly(n.tcoeff(vn)), BiPoly(d.tcoeff(vd)));
  }
  int dn = n.tdeg(), dd = d.tdeg();
  if (dn > dd) throw DivergentLimit("limit t->infinity diverges", dn, dd);
  if (dn < dd) return QTRational();
  return normalize_qt(BiPoly(n.tcoeff(dn)), BiPoly(d.tcoeff(dd)));
}

QTRational limit_q_zero(const QTRational& f) {
  if (f.has_t()) throw std::invalid_argument("limit q->0 expects a function of q alone");
  if (f.is_zero()) return f;
  QPoly n = f.num().tcoeff(0), d = f.den().tcoeff(0);
  int vn = n.valuation(), vd = d.valuation();
  if (vn < vd) throw DivergentLimit("limit q->0 diverges", vn, vd);
  if (vn > vd) return QTRational();
  return QTRational(Rational(n.coeff(vn) / d.coeff(vd)));
}

QTRational invert_q(const QTRational& f, bool also_t) {
  if (f.is_zero()) return f;
  BiPoly n = f.num().invert_q(), d = f.den().invert_q();
  int shift = f.den().qdeg() - f.num().qdeg();
  if (shift > 0) n = n.shifted(shift, 0);
  if (shift < 0) d = d.shifted(-shift, 0);
  if (also_t) {
    int tshift = d.tdeg() - n.tdeg();
    n = n.invert_t();
    d = d.invert_t();
    if (tshift > 0) n = n.shifted(0, tshift);
    if (tshift < 0) d = d.shifted(0, -tshift);
  }
  return normalize_qt(n, d);
}

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(const Rational& c, int cap) : cap_(cap), c_(cap + 1) { c_[0] = c; }

QSeries::QSeries(const QPoly& p, int cap) : cap_(cap), c_(cap + 1) {
  const auto& pc = p.coeffs();
  for (int i = 0; i <= cap && i < static_cast<int>(pc.size()); ++i) c_[i] = pc[i];
}

QSeries QSeries::q_power(int e, int cap) {
  QSeries s(cap);
  if (e >= 0 && e <= cap) s.c_[e] = 1;
  return s;
}

bool QSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

int QSeries::valuation() const {
  for (int i = 0; i <= cap_; ++i)
    if (c_[i] != 0) return i;
  return cap_ + 1;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.cap_ < cap_) {
    cap_ = o.cap_;
    c_.resize(cap_ + 1);
  }
  for (int i = 0; i <= cap_; ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.cap_ < cap_) {
    cap_ = o.cap_;
    c_.resize(cap_ + 1);
  }
  for (int i = 0; i <= cap_; ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) { return *this = *this * o; }

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.cap_, b.cap_));
  r.add_product(a, b);
  return r;
}

void QSeries::add_product(const QSeries& a, const QSeries& b) {
  int k = std::min({cap_, a.cap_, b.cap_});
  if (k < cap_) {
    cap_ = k;
    c_.resize(k + 1);
  }
  static thread_local Rational tmp;
  for (int i = 0; i <= k; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; i + j <= k; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      mpq_add(c_[i + j].get_mpq_t(), c_[i + j].get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

QSeries QSeries::truncated(int cap) const {
  if (cap >= cap_) return *this;
  QSeries r(cap);
  for (int i = 0; i <= cap; ++i) r.c_[i] = c_[i];
  return r;
}

std::optional<QSeries> QSeries::inverse() const {
  if (c_[0] == 0) return std::nullopt;
  QSeries g(cap_);
  Rational inv0 = Rational(1) / c_[0];
  g.c_[0] = inv0;
  for (int k = 1; k <= cap_; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i)
      if (c_[i] != 0) s += c_[i] * g.c_[k - i];
    g.c_[k] = -s * inv0;
  }
  return g;
}

QPoly QSeries::to_qpoly() const { return QPoly(c_); }

std::string QSeries::to_string(const std::string& var) const {
  std::string s = QPoly(c_).to_string(var);
  return s + " + O(" + var + "^" + std::to_string(cap_ + 1) + ")";
}

QSeries expand_q(const QTRational& f, int cap) {
  if (f.has_t()) throw std::invalid_argument("q-expansion expects a function of q alone");
  if (f.is_zero()) return QSeries(cap);
  QPoly n = f.num().tcoeff(0), d = f.den().tcoeff(0);
  int vd = d.valuation();
  if (vd > 0) {
    if (n.valuation() < vd) throw std::domain_error("not a power series in q");
    std::vector<Rational> nc(n.coeffs().begin() + vd, n.coeffs().end());
    std::vector<Rational> dc(d.coeffs().begin() + vd, d.coeffs().end());
    n = QPoly(nc);
    d = QPoly(dc);
  }
  auto inv = QSeries(d, cap).inverse();
  return QSeries(n, cap) * *inv;
}

QPoly qpochhammer_poly(int m) {
  QPoly r(1);
  for (int i = 1; i <= m; ++i) r *= QPoly(1) - QPoly::monomial(1, i);
  return r;
}

QSeries qpochhammer_q(int m, int cap) { return QSeries(qpochhammer_poly(m), cap); }

QSeries inv_qpochhammer_q(int m, int cap) { return *qpochhammer_q(m, cap).inverse(); }

QPoly qbinomial(int m, int a) {
  if (a < 0 || a > m) return QPoly();
  return QPoly::divexact(qpochhammer_poly(m), qpochhammer_poly(a) * qpochhammer_poly(m - a));
}

}  // namespace mac
