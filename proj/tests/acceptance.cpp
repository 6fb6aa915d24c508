// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "macdonald/affine.hpp"
#include "macdonald/cli.hpp"
#include "macdonald/identities.hpp"
#include "macdonald/macdonald.hpp"

using namespace mac;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int jobs() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string lam_text(const Composition& lam) {
  std::string s = "(";
  for (size_t i = 0; i < lam.size(); ++i) s += (i ? "," : "") + std::to_string(lam[i]);
  return s + ")";
}

// run an identity and require a pass inside the time limit (seconds, 0 = none)
void timed_verify(Outcome& o, Identity v, int n, int d, std::optional<int> k, double limit) {
  auto start = std::chrono::steady_clock::now();
  auto rep = verify_identity(v, n, d, k, jobs());
  double t = seconds_since(start);
  std::string tag = identity_name(v) + " n=" + std::to_string(n) + " D=" + std::to_string(d) +
                    (k ? " K=" + std::to_string(*k) : "");
  o.require(rep.pass, tag + " failed at " + rep.witness.value_or("?") + ": " + rep.lhs_coeff + " vs " + rep.rhs_coeff);
  if (limit > 0) o.require(t < limit, tag + " took " + std::to_string(t) + "s");
  if (o.pass) o.detail += (o.detail.empty() ? "" : "; ") + tag + " " + std::to_string(t).substr(0, 5) + "s";
}

bool nonnegative_integral(const QTRational& c) {
  if (!c.is_polynomial() || c.has_t()) return false;
  QPoly p = c.num().tcoeff(0);
  p *= Rational(1) / c.den().lead();
  for (const auto& x : p.coeffs())
    if (x < 0 || x.get_den() != 1) return false;
  return true;
}

Rational constant_of(const QTRational& c) { return c.num().tcoeff(0).coeff(0) / c.den().lead(); }

std::vector<int> box_weight(int n, int range, int idx) {
  std::vector<int> c(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    c[i] = idx % (2 * range + 1) - range;
    idx /= 2 * range + 1;
  }
  return c;
}

Outcome ac1() {
  Outcome o;
  timed_verify(o, Identity::gl_t0, 2, 6, 10, 120);
  timed_verify(o, Identity::gl_t0, 3, 4, 8, 600);
  return o;
}

Outcome ac2() {
  Outcome o;
  timed_verify(o, Identity::gl_qt, 2, 3, std::nullopt, 600);
  return o;
}

Outcome ac3() {
  Outcome o;
  timed_verify(o, Identity::gl_slform, 2, 6, 10, 0);
  timed_verify(o, Identity::gl_slform, 3, 4, 8, 0);
  return o;
}

Outcome ac4() {
  Outcome o;
  timed_verify(o, Identity::sl_projected, 2, 5, 8, 0);
  timed_verify(o, Identity::sl_projected, 3, 3, 6, 0);
  if (o.pass) {
    // the window holds every class pair reachable at the stated gl degree
    for (auto [n, d, k] : {std::tuple{2, 5, 8}, std::tuple{3, 3, 6}}) {
      auto w = certified_window(n, d, k);
      for (int s = 0; s <= d; ++s)
        for (const auto& a : compositions(n, s))
          for (const auto& b : compositions(n, s))
            o.require(w.classes.count({restrict_weight(a), restrict_weight(b)}) == 1,
                      "window misses " + lam_text(a) + "," + lam_text(b));
    }
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  timed_verify(o, Identity::iwahori_char, 2, 5, 8, 0);
  return o;
}

Outcome ac6() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 5; ++d) {
      auto rep = verify_identity(Identity::classical_q0, n, d, std::nullopt, jobs());
      o.require(rep.pass, "classical-q0 n=" + std::to_string(n) + " D=" + std::to_string(d));
      for (const auto& lam : compositions_upto(n, d))
        o.require(norm_a_q(lam, 0).coeff(0) == 1, "a(0) != 1 at " + lam_text(lam));
    }
  // second path: key polynomials times atoms from the q = 0 and q, t = infinity limits
  for (int n = 1; n <= 3; ++n) {
    int d = 5;
    VarSet v = VarSet::gl(n);
    auto p = TruncationPolicy::degrees(d, d, 0);
    TruncatedSeries<QSeries> rhs(v, p);
    for (const auto& lam : compositions_upto(n, d)) {
      auto key = specialize_E(macdonald_E(lam), Spec::q0_t0);
      auto atom = specialize_E(macdonald_E(lam), Spec::qinf_tinf);
      for (const auto& [mx, cx] : key.terms)
        for (const auto& [my, cy] : atom.terms) {
          Exps m = mx;
          m.insert(m.end(), my.begin(), my.end());
          rhs.add_term(m, QSeries(constant_of(cx) * constant_of(cy), 0));
        }
    }
    o.require(rhs == lhs_series(Identity::classical_q0, n, p), "key/atom sum differs at n=" + std::to_string(n));
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  int cases = 0, K = 12;
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : compositions_upto(n, 6)) {
      ++cases;
      QSeries a = norm_a_q(lam, K);
      o.require(a == norm_a_q_alt(lam, K), "alt differs at " + lam_text(lam));
      o.require(a == expand_q(limit_t(norm_a_qt(lam), LimitDir::zero), K), "limit differs at " + lam_text(lam));
    }
  double t = seconds_since(start);
  o.require(t < 60, "took " + std::to_string(t) + "s");
  if (o.pass) o.detail = std::to_string(cases) + " cases " + std::to_string(t).substr(0, 5) + "s";
  return o;
}

Outcome ac8() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : zero_compositions_upto(n, 6)) {
      ++cases;
      o.require(hw_algebra_char(lam, WordMode::D).series(20) == norm_a_q(lam, 20), "differs at " + lam_text(lam));
    }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome ac9() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : compositions_upto(n, 5)) {
      ++cases;
      o.require(macdonald_E(lam) == macdonald_E_fillings(lam), "differs at " + lam_text(lam));
    }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome ac10() {
  Outcome o;
  auto rep = verify_sl2_appendix(-6, 6, 12);
  o.require(rep.pass, rep.witness.value_or("?") + ": " + rep.lhs_coeff + " vs " + rep.rhs_coeff);
  return o;
}

Outcome ac11() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : compositions_upto(n, 5)) {
      ++cases;
      auto e = macdonald_E(lam);
      o.require(e.coeff(lam) == QTRational(1), "not monic at " + lam_text(lam));
      for (const auto& [m, c] : e.terms) o.require(size(m) == size(lam), "inhomogeneous at " + lam_text(lam));
      for (Spec s : {Spec::t0, Spec::qinv_tinf})
        for (const auto& [m, c] : specialize_E(e, s).terms)
          o.require(nonnegative_integral(c), spec_name(s) + " not in Z>=0[q] at " + lam_text(lam));
      for (Spec s : {Spec::t0, Spec::qinv_tinf})
        for (const auto& [m, c] : specialized_series(lam, s, 8))
          for (int k = 0; k <= 8; ++k)
            o.require(c.coeff(k) >= 0 && c.coeff(k).get_den() == 1, "series negative at " + lam_text(lam));
    }
  // stability: E_{lambda + m} = (x1...xn)^m E_lambda
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : compositions_upto(n, 4))
      for (int m = 1; m <= 2; ++m) {
        Composition up = lam;
        for (auto& x : up) x += m;
        auto a = macdonald_E(lam), b = macdonald_E(up);
        o.require(a.terms.size() == b.terms.size(), "stability size at " + lam_text(lam));
        for (const auto& [mono, c] : a.terms) {
          Exps s = mono;
          for (auto& x : s) x += m;
          o.require(b.coeff(s) == c, "stability at " + lam_text(lam));
        }
      }
  if (o.pass) o.detail = std::to_string(cases) + " polynomials";
  return o;
}

Outcome ac12() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 3; ++n) {
    int count = n == 2 ? 9 : 81;
    for (int idx = 0; idx < count; ++idx) {
      Composition lam = sl_representative(box_weight(n, 4, idx));
      std::string tag = lam_text(lam);
      ++cases;
      auto anti = antidominant_data(lam).antidominant;
      auto fd = factorized_word(lam, WordMode::D);
      auto fu = factorized_word(lam, WordMode::U);
      o.require(hw_algebra_char(lam, WordMode::D) == hw_algebra_char_at(anti, fd.word, fd.prefix_length),
                "D word at " + tag);
      o.require(hw_algebra_char(lam, WordMode::U) == hw_algebra_char_at(anti, fu.word, fu.prefix_length),
                "U word at " + tag);
      Composition neg = lam;
      for (auto& x : neg) x = -x;
      o.require(hw_algebra_char(lam, WordMode::U) == hw_algebra_char(neg, WordMode::D), "duality at " + tag);
      for (int m = 0; m <= static_cast<int>(fd.word.letters.size()); ++m)
        o.require(hw_algebra_char_at(anti, fd.word, m) == hw_algebra_char_counts(anti, fd.word, m),
                  "count at " + tag + " m=" + std::to_string(m));
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " weights";
  return o;
}

Outcome ac13() {
  Outcome o;
  std::vector<std::string> base = {"verify", "--identity", "gl-t0", "--n", "2", "--max-deg", "5", "--max-q", "8"};
  std::string outs[2];
  int status[2];
  const char* js[2] = {"1", "8"};
  for (int i = 0; i < 2; ++i) {
    auto args = base;
    args.insert(args.end(), {"--jobs", js[i]});
    std::ostringstream out, err;
    status[i] = run_cli(args, out, err);
    outs[i] = out.str();
  }
  o.require(status[0] == 0 && status[1] == 0, "verify did not pass");
  o.require(outs[0] == outs[1], "reports differ");
  o.require(!outs[0].empty(), "empty report");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"t=0 Cauchy identity", ac1},
      {"full (q,t) Cauchy identity", ac2},
      {"pre-projection sl form", ac3},
      {"sl_n identity on certified windows", ac4},
      {"Iwahori function character", ac5},
      {"classical q=0 limit", ac6},
      {"norm cross-check", ac7},
      {"highest weight algebra vs norm", ac8},
      {"recursion vs fillings", ac9},
      {"sl2 closed forms", ac10},
      {"positivity, homogeneity, stability", ac11},
      {"affine consistency", ac12},
      {"determinism across --jobs", ac13},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double t = seconds_since(start);
    if (!o.pass) ++failed;
    std::printf("AC%zu %s: %s [%s] (%.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), t);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
