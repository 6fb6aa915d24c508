#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mac {

using Composition = std::vector<int>;  // also used for arbitrary integer gl weights
using SlWeight = std::vector<int>;     // coordinates on fundamental weights

// Permutation of {0..n-1}, stored as images. Acts on weights by
// (w.lambda)_{w(i)} = lambda_i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation simple(int n, int j);  // s_j swaps j-1 and j (1-based j)
  static Permutation longest(int n);

  int size() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[i]; }
  const std::vector<int>& images() const { return p_; }
  Permutation inverse() const;
  int length() const;  // inversion count
  // composition (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.p_ < b.p_; }

  std::vector<int> act(const std::vector<int>& lambda) const;
  // reduced word as 1-based simple reflection indices, lexicographically smallest
  std::vector<int> reduced_word() const;
  // image of the simple root alpha_j (1-based) is positive
  bool maps_simple_root_positive(int j) const;
  std::string to_string() const;  // one-line notation, 1-based

 private:
  std::vector<int> p_;
};

std::vector<Permutation> all_permutations(int n);

// Bruhat order u <= w via the subword criterion on the reduced word of w.
bool bruhat_leq(const Permutation& u, const Permutation& w);

struct AntidominantData {
  Composition antidominant;
  Permutation v;  // v.lambda = antidominant, minimal length
};

AntidominantData antidominant_data(const Composition& lambda);

// lambda >= mu in the partial order on weights
bool order_geq(const Composition& lambda, const Composition& mu);

SlWeight restrict_weight(const Composition& lambda);
Composition sl_representative(const SlWeight& w);

int size(const Composition& lambda);
bool is_composition(const Composition& lambda);

struct ArmLeg {
  int arm, leg;
};
// cell (row, column) with 1-based coordinates
ArmLeg arm_leg(const Composition& lambda, int row, int column);

std::vector<Composition> compositions(int n, int total);
std::vector<Composition> compositions_upto(int n, int max_total);
// compositions with at least one zero entry
std::vector<Composition> zero_compositions_upto(int n, int max_total);

std::string weight_to_string(const std::vector<int>& w);

}  // namespace mac
