#include "macdonald/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mac {

Permutation::Permutation(std::vector<int> images) : p_(std::move(images)) {
  std::vector<bool> seen(p_.size(), false);
  for (int x : p_) {
    if (x < 0 || x >= size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return Permutation(std::move(p));
}

Permutation Permutation::simple(int n, int j) {
  Permutation s = identity(n);
  std::swap(s.p_[j - 1], s.p_[j]);
  return s;
}

Permutation Permutation::longest(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return Permutation(std::move(p));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(p_.size());
  for (int i = 0; i < size(); ++i) r[p_[i]] = i;
  return Permutation(std::move(r));
}

int Permutation::length() const {
  int l = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (p_[i] > p_[j]) ++l;
  return l;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<int> r(b.p_.size());
  for (int i = 0; i < b.size(); ++i) r[i] = a.p_[b.p_[i]];
  return Permutation(std::move(r));
}

std::vector<int> Permutation::act(const std::vector<int>& lambda) const {
  std::vector<int> r(lambda.size());
  for (int i = 0; i < size(); ++i) r[p_[i]] = lambda[i];
  return r;
}

bool Permutation::maps_simple_root_positive(int j) const { return p_[j - 1] < p_[j]; }

std::vector<int> Permutation::reduced_word() const {
  // peel off the smallest left descent: s_j w < w iff w^{-1}(j-1) > w^{-1}(j)
  std::vector<int> word;
  Permutation w = *this;
  while (w.length() > 0) {
    Permutation inv = w.inverse();
    for (int j = 1; j < size(); ++j) {
      if (inv(j - 1) > inv(j)) {
        word.push_back(j);
        w = simple(size(), j) * w;
        break;
      }
    }
  }
  return word;
}

std::string Permutation::to_string() const {
  std::vector<int> one(p_);
  for (auto& x : one) ++x;
  return weight_to_string(one);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("permutation size mismatch");
  int n = w.size();
  // all products of subwords of a reduced word of w
  std::set<Permutation> reach = {Permutation::identity(n)};
  for (int j : w.reduced_word()) {
    std::set<Permutation> next = reach;
    Permutation s = Permutation::simple(n, j);
    for (const auto& x : reach) next.insert(x * s);
    reach = std::move(next);
  }
  return reach.count(u) > 0;
}

AntidominantData antidominant_data(const Composition& lambda) {
  int n = static_cast<int>(lambda.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lambda[a] < lambda[b]; });
  std::vector<int> v(n);
  Composition anti(n);
  for (int k = 0; k < n; ++k) {
    v[order[k]] = k;
    anti[k] = lambda[order[k]];
  }
  return {anti, Permutation(std::move(v))};
}

bool order_geq(const Composition& lambda, const Composition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("weights of different rank");
  auto a = antidominant_data(lambda), b = antidominant_data(mu);
  if (a.antidominant == b.antidominant) return bruhat_leq(a.v, b.v);
  long partial = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    partial += a.antidominant[i] - b.antidominant[i];
    if (i + 1 < lambda.size() && partial > 0) return false;
  }
  return partial == 0;
}

SlWeight restrict_weight(const Composition& lambda) {
  SlWeight r;
  for (size_t j = 0; j + 1 < lambda.size(); ++j) r.push_back(lambda[j] - lambda[j + 1]);
  return r;
}

Composition sl_representative(const SlWeight& w) {
  int n = static_cast<int>(w.size()) + 1;
  Composition lam(n, 0);
  for (int j = n - 2; j >= 0; --j) lam[j] = lam[j + 1] + w[j];
  int m = *std::min_element(lam.begin(), lam.end());
  for (auto& x : lam) x -= m;
  return lam;
}

int size(const Composition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

bool is_composition(const Composition& lambda) {
  return !lambda.empty() && std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

ArmLeg arm_leg(const Composition& lambda, int row, int column) {
  int n = static_cast<int>(lambda.size());
  if (row < 1 || row > n || column < 1 || column > lambda[row - 1])
    throw std::out_of_range("cell outside diagram");
  int li = lambda[row - 1];
  int arm = 0;
  for (int k = 1; k < row; ++k)
    if (column <= lambda[k - 1] && lambda[k - 1] <= li) ++arm;
  for (int k = row + 1; k <= n; ++k)
    if (column <= lambda[k - 1] + 1 && lambda[k - 1] + 1 <= li) ++arm;
  return {arm, li - column};
}

std::vector<Composition> compositions(int n, int total) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n >= 1 && total >= 0) rec(rec, 0, total);
  return out;
}

std::vector<Composition> compositions_upto(int n, int max_total) {
  std::vector<Composition> out;
  for (int d = 0; d <= max_total; ++d) {
    auto c = compositions(n, d);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Composition> zero_compositions_upto(int n, int max_total) {
  std::vector<Composition> out;
  for (auto& c : compositions_upto(n, max_total))
    if (*std::min_element(c.begin(), c.end()) == 0) out.push_back(std::move(c));
  return out;
}

std::string weight_to_string(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace mac
