#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "macdonald/exact.hpp"
#include "macdonald/weights.hpp"

namespace mac {

// Extended affine symmetric group of gl_n: bijections f of Z with
// f(i + n) = f(i) + n. Stored by the window f(1), ..., f(n).
class AffinePermutation {
 public:
  AffinePermutation() = default;
  explicit AffinePermutation(std::vector<long> window);
  static AffinePermutation identity(int n);
  static AffinePermutation simple(int n, int j);  // j = 0..n-1
  static AffinePermutation pi(int n, long k);     // i -> i + k
  static AffinePermutation translation(const std::vector<int>& mu);  // i -> i + n*mu_i
  static AffinePermutation finite(const Permutation& w);

  int n() const { return static_cast<int>(w_.size()); }
  long operator()(long i) const;
  const std::vector<long>& window() const { return w_; }
  AffinePermutation inverse() const;
  long length() const;
  long shift() const;  // sum of (f(i) - i) / n, the power of pi
  bool left_descent(int j) const;
  bool right_descent(int j) const;
  friend AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b);
  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend bool operator<(const AffinePermutation& a, const AffinePermutation& b) { return a.w_ < b.w_; }
  std::string to_string() const;

 private:
  std::vector<long> w_;
};

// Affine coroot beta = finite_part + degree * delta. finite_part is a gl
// vector e_a - e_b.
struct AffineCoroot {
  std::vector<int> finite_part;
  int degree = 0;
  friend bool operator==(const AffineCoroot&, const AffineCoroot&) = default;
  friend bool operator<(const AffineCoroot& a, const AffineCoroot& b) {
    return std::tie(a.finite_part, a.degree) < std::tie(b.finite_part, b.degree);
  }
  bool finite_negative() const;
  std::string to_string() const;
};

// pi^pi_power s_{letters[0]} ... s_{letters[l-1]}
struct ReducedWord {
  int n = 0;
  long pi_power = 0;
  std::vector<int> letters;

  int pi_residue() const;
  AffinePermutation evaluate() const;
  bool is_reduced() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

// Lexicographically smallest reduced word for g after fixing the pi power.
ReducedWord canonical_word(const AffinePermutation& g);
ReducedWord translation_reduced_word(const std::vector<int>& mu);

// sigma: the longest element with sigma(lambda_-) = lambda
Permutation sigma_of(const std::vector<int>& lambda);

enum class WordMode { U, D };
struct FactorizedWord {
  ReducedWord word;   // a reduced word for t_{lambda_-}
  int prefix_length;  // letters spelling the (pi-conjugated) prefix
};
FactorizedWord factorized_word(const std::vector<int>& lambda, WordMode mode);

std::vector<AffineCoroot> beta_sequence(const ReducedWord& w);

// l_{alpha,m} for the positive root alpha = e_i - e_j (1-based, i < j)
int char_l(const std::vector<int>& anti, const ReducedWord& w, int i, int j, int m);
// m_j = #{i <= m : -bar(beta_i) = alpha_j}, j = 1..n-1; the coordinates of omega(m)
std::vector<int> omega_counts(const ReducedWord& w, int m);

struct HwAlgebraChar {
  std::vector<int> generator_degrees;  // sorted
  QSeries series(int cap) const;
  friend bool operator==(const HwAlgebraChar&, const HwAlgebraChar&) = default;
};

// Degrees for mode D or U; mode D takes its signs from v(lambda)^-1 to match
// the prefix used by factorized_word. With gl set, the extra generators 1..lambda_min
// of the gl_n lift are appended.
HwAlgebraChar hw_algebra_char(const std::vector<int>& lambda, WordMode mode, bool gl = false);
// Degrees {1..l_{alpha_j,m}} from the supplied word.
HwAlgebraChar hw_algebra_char_at(const std::vector<int>& anti, const ReducedWord& w, int m);
// Degrees {1..(-<lambda_-, alpha_j> - m_j)} from the omega(m) counts.
HwAlgebraChar hw_algebra_char_counts(const std::vector<int>& anti, const ReducedWord& w, int m);

}  // namespace mac
