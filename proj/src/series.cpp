#include "macdonald/series.hpp"

namespace mac {

int x_degree(const Exps& m, const VarSet& v) {
  int d = 0;
  for (int i = 0; i < v.block(); ++i) d += m[i];
  return d;
}

int y_degree(const Exps& m, const VarSet& v) {
  int d = 0;
  for (int i = v.block(); i < v.size(); ++i) d += m[i];
  return d;
}

bool MonomialOrder::operator()(const Exps& a, const Exps& b) const {
  for (int blk = 0; blk < 2; ++blk) {
    int lo = blk * block, hi = lo + block;
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db;
    for (int i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

IdealIndex::IdealIndex(const std::vector<Exps>& gens, int blk) : block(blk) {
  for (const auto& g : gens) {
    Exps x(block, 0);
    Exps y(g.begin() + block, g.end());
    // every x below the x-part of g
    while (true) {
      by_x[x].push_back(y);
      int i = 0;
      while (i < block && x[i] == g[i]) x[i++] = 0;
      if (i == block) break;
      ++x[i];
    }
  }
}

bool IdealIndex::admits(const Exps& m) const {
  Exps x(m.begin(), m.begin() + block);
  auto it = by_x.find(x);
  if (it == by_x.end()) return false;
  for (const auto& y : it->second) {
    bool below = true;
    for (size_t i = 0; i < y.size() && below; ++i) below = m[block + i] <= y[i];
    if (below) return true;
  }
  return false;
}

bool TruncationPolicy::admits(const Exps& m, const VarSet& v) const {
  if (max_x && x_degree(m, v) > *max_x) return false;
  if (max_y && y_degree(m, v) > *max_y) return false;
  if (index) return index->admits(m);
  if (ideal) {
    for (const auto& g : *ideal) {
      bool below = true;
      for (size_t i = 0; i < m.size() && below; ++i) below = m[i] <= g[i];
      if (below) return true;
    }
    return false;
  }
  return true;
}

namespace {
std::optional<int> min_opt(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}
}  // namespace

TruncationPolicy TruncationPolicy::compose(const TruncationPolicy& o) const {
  TruncationPolicy r;
  r.max_x = min_opt(max_x, o.max_x);
  r.max_y = min_opt(max_y, o.max_y);
  r.max_q = min_opt(max_q, o.max_q);
  if (ideal && o.ideal) {
    std::vector<Exps> gens;
    for (const auto& a : *ideal)
      for (const auto& b : *o.ideal) {
        Exps g(a.size());
        for (size_t i = 0; i < a.size(); ++i) g[i] = std::min(a[i], b[i]);
        gens.push_back(std::move(g));
      }
    r.ideal = std::move(gens);
  } else if (ideal) {
    r.ideal = ideal;
    r.index = index;
  } else if (o.ideal) {
    r.ideal = o.ideal;
    r.index = o.index;
  }
  return r;
}

nlohmann::json TruncationPolicy::to_json() const {
  nlohmann::json j;
  j["max_x"] = max_x ? nlohmann::json(*max_x) : nlohmann::json(nullptr);
  j["max_y"] = max_y ? nlohmann::json(*max_y) : nlohmann::json(nullptr);
  j["max_q"] = max_q ? nlohmann::json(*max_q) : nlohmann::json(nullptr);
  if (ideal) j["ideal_generators"] = ideal->size();
  return j;
}

std::string monomial_text(const Exps& m, const VarSet& v) {
  std::string out;
  int b = v.block();
  for (int i = 0; i < v.size(); ++i) {
    if (m[i] == 0) continue;
    bool xs = i < b;
    int idx = xs ? i : i - b;
    std::string name;
    if (v.kind == VarSet::Kind::gl) {
      name = std::string(xs ? "x" : "y") + std::to_string(idx + 1);
    } else {
      name = xs ? "X" : "Y";
      if (b > 1) name += std::to_string(idx + 1);
    }
    if (!out.empty()) out += "*";
    out += name;
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

TruncatedSeries<QTRational> pochhammer_ratio_series(const QTRational& a, const QTRational& b,
                                                     const Exps& z, VarSet vars,
                                                     const TruncationPolicy& policy) {
  TruncatedSeries<QTRational> r(vars, policy);
  if (std::all_of(z.begin(), z.end(), [](int e) { return e == 0; }))
    throw DivergentPochhammer();
  QTRational c = a / b;
  QTRational coef(1);  // (c;q)_m b^m / (q;q)_m
  QTRational qm(1);    // q^m
  Exps mono(z.size(), 0);
  for (int m = 0;; ++m) {
    if (!r.in_policy(mono)) break;
    r.add_term(mono, coef);
    // step m -> m+1
    coef *= (QTRational(1) - c * qm) * b / (QTRational(1) - qm * QTRational::q());
    qm *= QTRational::q();
    for (size_t i = 0; i < z.size(); ++i) mono[i] += z[i];
  }
  return r;
}

}  // namespace mac
