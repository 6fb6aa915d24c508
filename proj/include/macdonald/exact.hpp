#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mac {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Polynomial in q with rational coefficients, dense, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);
  QPoly(const Rational& c);
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly monomial(const Rational& c, int e);
  static QPoly q() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int valuation() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int e) const;
  const Rational& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  QPoly shifted(int e) const;  // multiply by q^e, e >= 0
  Rational eval(const Rational& x) const;
  QPoly monic() const;
  // q -> 1/q followed by multiplication with q^deg
  QPoly reversed(int deg) const;

  static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
  static QPoly divexact(const QPoly& a, const QPoly& b);
  static QPoly gcd(QPoly a, QPoly b);

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Bivariate polynomial in (q,t): coefficient of t^j stored as a QPoly in q.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long c) : BiPoly(QPoly(c)) {}
  BiPoly(const QPoly& c);
  explicit BiPoly(std::vector<QPoly> tcoeffs);

  static BiPoly term(const Rational& c, int qe, int te);
  static BiPoly q() { return term(1, 1, 0); }
  static BiPoly t() { return term(1, 0, 1); }

  bool is_zero() const { return c_.empty(); }
  int tdeg() const { return static_cast<int>(c_.size()) - 1; }
  int tval() const;
  int qdeg() const;
  int qval() const;
  const std::vector<QPoly>& tcoeffs() const { return c_; }
  QPoly tcoeff(int j) const;
  // leading coefficient for lex order with t above q
  const Rational& lead() const { return c_.back().lead(); }
  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].is_constant()); }
  bool has_t() const { return c_.size() > 1; }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  BiPoly& operator*=(const QPoly& c);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

  BiPoly shifted(int qe, int te) const;
  QPoly content() const;  // monic gcd of the t-coefficients
  BiPoly divided(const QPoly& c) const;
  BiPoly invert_q() const;  // q -> 1/q times q^qdeg
  BiPoly invert_t() const;  // t -> 1/t times t^tdeg

  static BiPoly divexact(const BiPoly& a, const BiPoly& b);
  static BiPoly gcd(const BiPoly& a, const BiPoly& b);

  std::vector<std::vector<std::string>> grid() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<QPoly> c_;
};

// Element of Q(q,t) kept as a reduced fraction whose denominator has
// leading coefficient 1 (lex order, t above q).
class QTRational {
 public:
  QTRational() : num_(), den_(1) {}
  QTRational(long c) : QTRational(BiPoly(c)) {}
  QTRational(const Rational& c) : QTRational(BiPoly(QPoly(c))) {}
  QTRational(const QPoly& p) : QTRational(BiPoly(p)) {}
  QTRational(const BiPoly& p);
  QTRational(const BiPoly& num, const BiPoly& den);

  static QTRational q() { return QTRational(BiPoly::q()); }
  static QTRational t() { return QTRational(BiPoly::t()); }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool has_t() const { return num_.has_t() || den_.has_t(); }
  bool is_polynomial() const { return den_.is_constant(); }

  QTRational& operator+=(const QTRational& o);
  QTRational& operator-=(const QTRational& o);
  QTRational& operator*=(const QTRational& o);
  QTRational& operator/=(const QTRational& o);
  QTRational operator-() const;
  friend QTRational operator+(QTRational a, const QTRational& b) { return a += b; }
  friend QTRational operator-(QTRational a, const QTRational& b) { return a -= b; }
  friend QTRational operator*(QTRational a, const QTRational& b) { return a *= b; }
  friend QTRational operator/(QTRational a, const QTRational& b) { return a /= b; }
  friend bool operator==(const QTRational& a, const QTRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  friend QTRational normalize_qt(const BiPoly& num, const BiPoly& den);
  BiPoly num_, den_;
};

QTRational normalize_qt(const BiPoly& num, const BiPoly& den);

enum class LimitDir { zero, infinity };

class DivergentLimit : public std::runtime_error {
 public:
  DivergentLimit(const std::string& what, int num_order, int den_order)
      : std::runtime_error(what), num_order(num_order), den_order(den_order) {}
  int num_order, den_order;
};

QTRational limit_t(const QTRational& f, LimitDir dir);
// limit q -> 0 of a fraction without t
QTRational limit_q_zero(const QTRational& f);
QTRational invert_q(const QTRational& f, bool also_t = false);

// Truncated power series in q; coefficients above cap are never kept.
class QSeries {
 public:
  QSeries() : cap_(0), c_(1) {}
  explicit QSeries(int cap) : cap_(cap), c_(cap + 1) {}
  QSeries(const Rational& c, int cap);
  QSeries(const QPoly& p, int cap);

  static QSeries one(int cap) { return QSeries(Rational(1), cap); }
  static QSeries q_power(int e, int cap);

  int cap() const { return cap_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int e) const { return c_[e]; }
  Rational& coeff(int e) { return c_[e]; }
  bool is_zero() const;
  int valuation() const;  // cap+1 when zero

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  QSeries operator-() const;
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.cap_ == b.cap_ && a.c_ == b.c_;
  }

  // this += a*b without temporaries
  void add_product(const QSeries& a, const QSeries& b);
  QSeries truncated(int cap) const;
  std::optional<QSeries> inverse() const;
  QPoly to_qpoly() const;

  std::string to_string(const std::string& var = "q") const;

 private:
  int cap_;
  std::vector<Rational> c_;
};

// Expansion of a t-free fraction as a power series in q.
QSeries expand_q(const QTRational& f, int cap);

// (a;q)_m and 1/(q;q)_m helpers on plain q-series
QSeries qpochhammer_q(int m, int cap);
QSeries inv_qpochhammer_q(int m, int cap);
QPoly qpochhammer_poly(int m);
QPoly qbinomial(int m, int a);

}  // namespace mac
