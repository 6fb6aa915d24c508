#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "macdonald/macdonald.hpp"

namespace mac {

namespace {

struct Triple {
  int xi, xj, zi, zj, yi, yj;
};

struct Stats {
  int maj = 0;       // sum of leg+1 over descents
  int coinv = 0;     // coinversion triples
  int arm_nd = 0;    // sum of arm over cells differing from the cell below
  int leg_nd_up = 0; // sum of leg+1 over such cells that are not descents
};

// Row-by-row enumeration of non-attacking fillings with basement i under column i.
class FillingEnumerator {
 public:
  FillingEnumerator(const Composition& lam, Spec mode, std::optional<int> cap)
      : lam_(lam), n_(static_cast<int>(lam.size())), mode_(mode), cap_(cap) {
    H_ = lam.empty() ? 0 : *std::max_element(lam.begin(), lam.end());
    rows_.resize(H_ + 1);
    for (int i = 0; i < n_; ++i) rows_[0].push_back(i);
    cell_index_.assign(H_ + 1, std::vector<int>(n_, -1));
    int idx = 0;
    for (int j = 1; j <= H_; ++j)
      for (int i = 0; i < n_; ++i)
        if (lam[i] >= j) {
          rows_[j].push_back(i);
          cell_index_[j][i] = idx++;
          cells_.push_back({i, j});
          arm_leg_.push_back(arm_leg(lam, i + 1, j));
        }
    triples_.resize(H_ + 1);
    for (int i = 0; i < n_; ++i)
      for (int k = i + 1; k < n_; ++k) {
        if (lam[k] >= lam[i]) {
          for (int j = 1; j <= lam[i]; ++j) triples_[j].push_back({i, j, k, j, k, j - 1});
        } else {
          for (int j = 1; j <= lam[k] + 1; ++j) triples_[j].push_back({i, j - 1, k, j - 1, i, j});
        }
      }
    val_.assign(H_ + 1, std::vector<int>(n_, -1));
    for (int i = 0; i < n_; ++i) val_[0][i] = i;
    if (static_cast<int>(cells_.size()) > 64 && mode == Spec::generic)
      throw std::invalid_argument("diagram too large for the generic fillings sum");
  }

  const std::vector<std::pair<int, int>>& cells() const { return cells_; }
  const std::vector<ArmLeg>& arm_legs() const { return arm_leg_; }

  // visit(x-exponents, stats, mask of cells equal to the cell below)
  void run(const std::function<void(const Exps&, const Stats&, uint64_t)>& visit) {
    visit_ = &visit;
    Exps x(n_, 0);
    row(1, x, Stats{}, 0);
  }

 private:
  int rank(int i, int j) const { return (H_ - j) * n_ + i; }

  bool coinversion(const Triple& tr) const {
    struct Item {
      int label, value, rank;
    };
    std::array<Item, 3> it = {Item{0, val_[tr.xj][tr.xi], rank(tr.xi, tr.xj)},
                              Item{1, val_[tr.zj][tr.zi], rank(tr.zi, tr.zj)},
                              Item{2, val_[tr.yj][tr.yi], rank(tr.yi, tr.yj)}};
    std::sort(it.begin(), it.end(), [](const Item& a, const Item& b) {
      return a.value != b.value ? a.value < b.value : a.rank < b.rank;
    });
    // cyclic rotations of (x, z, y)
    int a = it[0].label, b = it[1].label, c = it[2].label;
    bool cyclic = (a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) ||
                  (a == 2 && b == 0 && c == 1);
    return !cyclic;
  }

  void row(int j, Exps& x, const Stats& acc, uint64_t mask) {
    if (j > H_) {
      (*visit_)(x, acc, mask);
      return;
    }
    assign(j, 0, 0, x, acc, mask);
  }

  void assign(int j, size_t pos, unsigned used, Exps& x, const Stats& acc, uint64_t mask) {
    const auto& cells = rows_[j];
    if (pos == cells.size()) {
      finish_row(j, x, acc, mask);
      return;
    }
    int c = cells[pos];
    for (int v = 0; v < n_; ++v) {
      if (used & (1u << v)) continue;
      bool attacked = false;
      for (int k = c + 1; k < n_ && !attacked; ++k) attacked = val_[j - 1][k] == v;
      if (attacked) continue;
      val_[j][c] = v;
      ++x[v];
      assign(j, pos + 1, used | (1u << v), x, acc, mask);
      --x[v];
    }
    val_[j][c] = -1;
  }

  void finish_row(int j, Exps& x, const Stats& acc, uint64_t mask) {
    Stats s = acc;
    int row_arm = 0, row_coinv = 0;
    for (int c : rows_[j]) {
      int id = cell_index_[j][c];
      const ArmLeg& al = arm_leg_[id];
      int v = val_[j][c], below = val_[j - 1][c];
      if (v == below) {
        if (id < 64) mask |= uint64_t(1) << id;
        continue;
      }
      row_arm += al.arm;
      if (v > below) {
        s.maj += al.leg + 1;
      } else {
        s.leg_nd_up += al.leg + 1;
      }
    }
    for (const auto& tr : triples_[j])
      if (coinversion(tr)) ++row_coinv;
    s.arm_nd += row_arm;
    s.coinv += row_coinv;
    if (mode_ == Spec::t0) {
      if (row_coinv > 0) return;
      if (cap_ && s.maj > *cap_) return;
    } else if (mode_ == Spec::qinv_tinf) {
      // the per-row surplus of arms over coinversions is never negative, so a
      // filling survives t -> infinity only if every row balances
      if (row_coinv != row_arm) return;
      if (cap_ && s.leg_nd_up > *cap_) return;
    }
    row(j + 1, x, s, mask);
  }

  Composition lam_;
  int n_, H_;
  Spec mode_;
  std::optional<int> cap_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> cell_index_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<ArmLeg> arm_leg_;
  std::vector<std::vector<Triple>> triples_;
  std::vector<std::vector<int>> val_;
  const std::function<void(const Exps&, const Stats&, uint64_t)>* visit_ = nullptr;
};

}  // namespace

MacdonaldPolynomial macdonald_E_fillings(const Composition& lambda) {
  if (!is_composition(lambda)) throw std::invalid_argument("lambda must be a composition");
  FillingEnumerator en(lambda, Spec::generic, std::nullopt);
  struct Key {
    Exps x;
    int maj, coinv;
    uint64_t mask;
    bool operator<(const Key& o) const {
      return std::tie(x, maj, coinv, mask) < std::tie(o.x, o.maj, o.coinv, o.mask);
    }
  };
  std::map<Key, long> counts;
  en.run([&](const Exps& x, const Stats& s, uint64_t mask) { ++counts[{x, s.maj, s.coinv, mask}]; });

  const auto& al = en.arm_legs();
  int ncells = static_cast<int>(al.size());
  std::vector<BiPoly> factor(ncells);
  BiPoly den(1);
  for (int c = 0; c < ncells; ++c) {
    factor[c] = BiPoly(1) - BiPoly::term(1, al[c].leg + 1, al[c].arm + 1);
    den = den * factor[c];
  }
  std::map<uint64_t, BiPoly> diag_product;
  std::map<Exps, BiPoly> num;
  BiPoly one_minus_t = BiPoly(1) - BiPoly::t();
  for (const auto& [k, cnt] : counts) {
    auto it = diag_product.find(k.mask);
    if (it == diag_product.end()) {
      BiPoly p(1);
      for (int c = 0; c < ncells; ++c) p = p * ((k.mask >> c & 1) ? factor[c] : one_minus_t);
      it = diag_product.emplace(k.mask, p).first;
    }
    BiPoly w = it->second.shifted(k.maj, k.coinv);
    w *= Rational(cnt);
    num[k.x] += w;
  }
  MacdonaldPolynomial e;
  e.n = static_cast<int>(lambda.size());
  e.lambda = lambda;
  for (const auto& [x, p] : num)
    if (!p.is_zero()) e.terms[x] = QTRational(p, den);
  return e;
}

std::map<Exps, QPoly> specialized_fillings(const Composition& lambda, Spec mode, std::optional<int> cap) {
  if (mode != Spec::t0 && mode != Spec::qinv_tinf)
    throw std::invalid_argument("fillings specialization supports t0 and qinv_tinf");
  if (!is_composition(lambda)) throw std::invalid_argument("lambda must be a composition");
  FillingEnumerator en(lambda, mode, cap);
  std::map<Exps, std::vector<long long>> acc;
  en.run([&](const Exps& x, const Stats& s, uint64_t) {
    int d = mode == Spec::t0 ? s.maj : s.leg_nd_up;
    auto& v = acc[x];
    if (static_cast<int>(v.size()) <= d) v.resize(d + 1, 0);
    if (__builtin_add_overflow(v[d], 1LL, &v[d])) throw std::overflow_error("filling count overflow");
  });
  std::map<Exps, QPoly> out;
  for (const auto& [x, v] : acc) {
    std::vector<Rational> c;
    for (long long k : v) c.emplace_back(static_cast<long>(k));
    QPoly p(std::move(c));
    if (!p.is_zero()) out[x] = std::move(p);
  }
  return out;
}

}  // namespace mac
