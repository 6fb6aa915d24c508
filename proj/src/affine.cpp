#include "macdonald/affine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mac {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// residue in 1..n
long base(long i, int n) { return i - n * floor_div(i - 1, n); }

struct RootPair {
  long a, b;
};

RootPair simple_root(int n, int j) {
  if (j == 0) return {n, n + 1};
  return {j, j + 1};
}

AffineCoroot to_coroot(RootPair r, int n) {
  long a0 = base(r.a, n), b0 = base(r.b, n);
  long p = (r.a - a0) / n, s = (r.b - b0) / n;
  AffineCoroot c;
  c.finite_part.assign(n, 0);
  c.finite_part[a0 - 1] += 1;
  c.finite_part[b0 - 1] -= 1;
  c.degree = static_cast<int>(s - p);
  return c;
}

Permutation stabilizer_longest(const Composition& anti) {
  int n = static_cast<int>(anti.size());
  std::vector<int> img(n);
  int start = 0;
  while (start < n) {
    int end = start;
    while (end + 1 < n && anti[end + 1] == anti[start]) ++end;
    for (int i = start; i <= end; ++i) img[i] = start + end - i;
    start = end + 1;
  }
  return Permutation(img);
}

bool weakly_increasing(const std::vector<int>& mu) {
  for (size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] > mu[i + 1]) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- group

AffinePermutation::AffinePermutation(std::vector<long> window) : w_(std::move(window)) {
  int n = this->n();
  std::vector<char> seen(n, 0);
  for (long v : w_) {
    long r = base(v, n);
    if (seen[r - 1]) throw std::invalid_argument("not an affine permutation");
    seen[r - 1] = 1;
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long> w(n);
  std::iota(w.begin(), w.end(), 1L);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple(int n, int j) {
  if (n < 2 || j < 0 || j >= n) throw std::invalid_argument("simple reflection index out of range");
  std::vector<long> w(n);
  std::iota(w.begin(), w.end(), 1L);
  if (j == 0) {
    w[0] = 0;
    w[n - 1] = n + 1;
  } else {
    std::swap(w[j - 1], w[j]);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::pi(int n, long k) {
  std::vector<long> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1 + k;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::translation(const std::vector<int>& mu) {
  int n = static_cast<int>(mu.size());
  std::vector<long> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1 + static_cast<long>(n) * mu[i];
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::finite(const Permutation& p) {
  std::vector<long> w(p.size());
  for (int i = 0; i < p.size(); ++i) w[i] = p(i) + 1;
  return AffinePermutation(std::move(w));
}

long AffinePermutation::operator()(long i) const {
  long r = base(i, n());
  return w_[r - 1] + (i - r);
}

AffinePermutation AffinePermutation::inverse() const {
  int n = this->n();
  std::vector<long> inv(n);
  for (int i = 1; i <= n; ++i) {
    long v = w_[i - 1], r = base(v, n);
    inv[r - 1] = i - (v - r);
  }
  return AffinePermutation(std::move(inv));
}

long AffinePermutation::length() const {
  int n = this->n();
  long l = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) l += std::abs(floor_div(w_[j] - w_[i], n));
  return l;
}

long AffinePermutation::shift() const {
  long s = 0;
  for (int i = 0; i < n(); ++i) s += w_[i] - (i + 1);
  return s / n();
}

bool AffinePermutation::left_descent(int j) const {
  AffinePermutation inv = inverse();
  return inv(j) > inv(j + 1);
}

bool AffinePermutation::right_descent(int j) const { return (*this)(j) > (*this)(j + 1); }

AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("rank mismatch");
  std::vector<long> w(a.n());
  for (int i = 0; i < a.n(); ++i) w[i] = a(b.w_[i]);
  return AffinePermutation(std::move(w));
}

std::string AffinePermutation::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + "]";
}

bool AffineCoroot::finite_negative() const {
  for (int x : finite_part)
    if (x != 0) return x < 0;
  return false;
}

std::string AffineCoroot::to_string() const {
  return weight_to_string(finite_part) + "+" + std::to_string(degree) + "d";
}

// ---------------------------------------------------------------- words

int ReducedWord::pi_residue() const {
  return static_cast<int>(pi_power - static_cast<long>(n) * floor_div(pi_power, n));
}

AffinePermutation ReducedWord::evaluate() const {
  AffinePermutation g = AffinePermutation::pi(n, pi_power);
  for (int j : letters) g = g * AffinePermutation::simple(n, j);
  return g;
}

bool ReducedWord::is_reduced() const { return evaluate().length() == static_cast<long>(letters.size()); }

std::string ReducedWord::to_string() const {
  std::string s = "pi^" + std::to_string(pi_power);
  for (int j : letters) s += " s" + std::to_string(j);
  return s;
}

nlohmann::json ReducedWord::to_json() const {
  return {{"n", n}, {"pi", pi_power}, {"pi_residue", pi_residue()}, {"letters", letters}};
}

ReducedWord canonical_word(const AffinePermutation& g) {
  int n = g.n();
  ReducedWord w;
  w.n = n;
  w.pi_power = g.shift();
  AffinePermutation h = AffinePermutation::pi(n, -w.pi_power) * g;
  long len = h.length();
  while (len > 0) {
    int j = 0;
    while (!h.left_descent(j)) ++j;
    w.letters.push_back(j);
    h = AffinePermutation::simple(n, j) * h;
    --len;
  }
  return w;
}

ReducedWord translation_reduced_word(const std::vector<int>& mu) {
  if (mu.empty()) throw std::invalid_argument("empty weight");
  if (!weakly_increasing(mu)) throw std::invalid_argument("weight is not antidominant");
  if (mu.size() == 1) return ReducedWord{1, mu[0], {}};
  return canonical_word(AffinePermutation::translation(mu));
}

Permutation sigma_of(const std::vector<int>& lambda) {
  auto d = antidominant_data(lambda);
  Permutation sigma = d.v.inverse() * stabilizer_longest(d.antidominant);
  if (sigma.act(d.antidominant) != lambda) throw std::logic_error("sigma does not carry lambda_- to lambda");
  return sigma;
}

FactorizedWord factorized_word(const std::vector<int>& lambda, WordMode mode) {
  int n = static_cast<int>(lambda.size());
  if (n < 2) throw std::invalid_argument("factorized words need rank at least 2");
  auto anti = antidominant_data(lambda).antidominant;
  AffinePermutation t = AffinePermutation::translation(anti);
  long k = t.shift();
  Permutation sigma = sigma_of(lambda);
  // Mode D splits off v(lambda), which equals sigma^-1 for regular lambda_-.
  // A left factor x of t_{lambda_-} must be minimal in stab * x, which sigma
  // itself is not once lambda_- is singular.
  Permutation prefix = mode == WordMode::D ? antidominant_data(lambda).v
                                           : sigma.inverse() * Permutation::longest(n);
  AffinePermutation p = AffinePermutation::finite(prefix);
  AffinePermutation rest = p.inverse() * t;
  if (p.length() + rest.length() != t.length()) throw std::logic_error("non-reduced concatenation");
  FactorizedWord f;
  f.word.n = n;
  f.word.pi_power = k;
  long kk = k - static_cast<long>(n) * floor_div(k, n);
  for (int j : prefix.reduced_word()) f.word.letters.push_back(static_cast<int>((j - kk + n) % n));
  f.prefix_length = static_cast<int>(f.word.letters.size());
  for (int j : canonical_word(rest).letters) f.word.letters.push_back(j);
  if (!(f.word.evaluate() == t) || !f.word.is_reduced()) throw std::logic_error("non-reduced concatenation");
  return f;
}

std::vector<AffineCoroot> beta_sequence(const ReducedWord& w) {
  int l = static_cast<int>(w.letters.size());
  std::vector<AffineCoroot> out(l);
  if (l == 0) return out;
  AffinePermutation p = AffinePermutation::identity(w.n);
  for (int m = l - 1; m >= 0; --m) {
    RootPair r = simple_root(w.n, w.letters[m]);
    out[m] = to_coroot({p(r.a), p(r.b)}, w.n);
    p = p * AffinePermutation::simple(w.n, w.letters[m]);
  }
  return out;
}

int char_l(const std::vector<int>& anti, const ReducedWord& w, int i, int j, int m) {
  int n = static_cast<int>(anti.size());
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("not a positive root");
  if (m < 0 || m > static_cast<int>(w.letters.size())) throw std::out_of_range("m out of range");
  auto betas = beta_sequence(w);
  std::vector<int> neg(n, 0);
  neg[j - 1] = 1;
  neg[i - 1] = -1;
  int count = 0;
  for (int k = 0; k < m; ++k)
    if (betas[k].finite_part == neg) ++count;
  return anti[j - 1] - anti[i - 1] - count;
}

std::vector<int> omega_counts(const ReducedWord& w, int m) {
  if (m < 0 || m > static_cast<int>(w.letters.size())) throw std::out_of_range("m out of range");
  auto betas = beta_sequence(w);
  std::vector<int> counts(std::max(0, w.n - 1), 0);
  for (int k = 0; k < m; ++k) {
    const auto& f = betas[k].finite_part;
    for (int j = 1; j < w.n; ++j)
      if (f[j - 1] == -1 && f[j] == 1) ++counts[j - 1];
  }
  return counts;
}

// ---------------------------------------------------------------- characters

QSeries HwAlgebraChar::series(int cap) const {
  QSeries r = QSeries::one(cap);
  for (int d : generator_degrees)
    for (int e = d; e <= cap; ++e) r.coeff(e) += r.coeff(e - d);
  return r;
}

namespace {

void append_range(std::vector<int>& degs, int top) {
  for (int d = 1; d <= top; ++d) degs.push_back(d);
}

HwAlgebraChar finish(std::vector<int> degs) {
  std::sort(degs.begin(), degs.end());
  return HwAlgebraChar{std::move(degs)};
}

}  // namespace

HwAlgebraChar hw_algebra_char(const std::vector<int>& lambda, WordMode mode, bool gl) {
  int n = static_cast<int>(lambda.size());
  auto anti = antidominant_data(lambda).antidominant;
  Permutation sigma = sigma_of(lambda);
  Permutation vinv = antidominant_data(lambda).v.inverse();
  std::vector<int> degs;
  for (int j = 1; j < n; ++j) {
    int c = anti[j] - anti[j - 1];  // -<lambda_-, alpha_j>
    // mode D reads signs off v(lambda)^-1, which is sigma for regular lambda_-
    const Permutation& s = mode == WordMode::D ? vinv : sigma;
    int delta = s.maps_simple_root_positive(j) ? 1 : 0;
    append_range(degs, mode == WordMode::D ? c - 1 + delta : c - delta);
  }
  if (gl) {
    if (n > 0 && anti[0] < 0) throw std::invalid_argument("gl lift needs a composition");
    if (n > 0) append_range(degs, anti[0]);
  }
  return finish(std::move(degs));
}

HwAlgebraChar hw_algebra_char_at(const std::vector<int>& anti, const ReducedWord& w, int m) {
  std::vector<int> degs;
  for (int j = 1; j < static_cast<int>(anti.size()); ++j) append_range(degs, char_l(anti, w, j, j + 1, m));
  return finish(std::move(degs));
}

HwAlgebraChar hw_algebra_char_counts(const std::vector<int>& anti, const ReducedWord& w, int m) {
  auto counts = omega_counts(w, m);
  std::vector<int> degs;
  for (int j = 1; j < static_cast<int>(anti.size()); ++j) append_range(degs, anti[j] - anti[j - 1] - counts[j - 1]);
  return finish(std::move(degs));
}

}  // namespace mac
