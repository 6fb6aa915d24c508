#include <algorithm>

#include "doctest.h"
#include "macdonald/characters.hpp"

using namespace mac;

namespace {

using QS = TruncatedSeries<QSeries>;

QSeries poly(std::vector<long> cs, int cap) {
  std::vector<Rational> r;
  for (long c : cs) r.emplace_back(c);
  return QSeries(QPoly(r), cap);
}

QS from_laurent(const LaurentQ& f, bool right, int cap) {
  QS r(VarSet::sl(2), TruncationPolicy::degrees(20, 20, cap));
  for (const auto& [e, p] : f) r.add_term(right ? Exps{0, e} : Exps{e, 0}, QSeries(p, cap));
  return r;
}

bool nonnegative_integral(const QS& f) {
  for (const auto& [m, c] : f.terms())
    for (int e = 0; e <= c.cap(); ++e)
      if (c.coeff(e) < 0 || c.coeff(e).get_den() != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("char kinds parse") {
  for (auto k : {CharKind::D, CharKind::Uo, CharKind::T, CharKind::A_D, CharKind::A_U})
    CHECK(parse_char_kind(char_kind_name(k)) == k);
  CHECK_THROWS_AS(parse_char_kind("B"), std::invalid_argument);
}

TEST_CASE("char examples") {
  auto p = TruncationPolicy::degrees(4, 4, 5);
  for (VarSet v : {VarSet::gl(2), VarSet::sl(2), VarSet::gl(3)}) {
    Composition zero(v.n, 0);
    auto t = char_module(CharKind::T, zero, v, p);
    CHECK(t == QS::one(v, p));
  }
  auto d = char_module(CharKind::D, {1, 0}, VarSet::gl(2), p);
  QS x1(VarSet::gl(2), p);
  x1.add_term({1, 0, 0, 0}, QSeries::one(5));
  CHECK(d == x1);
  CHECK_THROWS_AS(char_module(CharKind::D, {-1, 0}, VarSet::gl(2), p), std::invalid_argument);
  CHECK_THROWS_AS(char_module(CharKind::D, {1, 0}, VarSet::gl(2), TruncationPolicy::degrees(2, 2, std::nullopt)),
                  std::invalid_argument);
}

TEST_CASE("sl2 T against the rank-one closed forms") {
  int K = 8;
  auto p = TruncationPolicy::degrees(20, 20, K);
  for (int l = -4; l <= 4; ++l) {
    CAPTURE(l);
    auto forms = sl2_closed_forms(l);
    QS expect = mul_truncated(from_laurent(forms.e_t0, false, K), from_laurent(forms.e_qinv_tinf, true, K));
    expect = expect.scaled(inv_qpochhammer_q(forms.norm_index, K));
    Composition lam = sl_representative({l});
    CHECK(char_module(CharKind::T, lam, VarSet::sl(2), p) == expect);
    // any representative of the class gives the same character
    Composition shifted = lam;
    for (auto& x : shifted) x += 3;
    CHECK(char_module(CharKind::T, shifted, VarSet::sl(2), p) == expect);
  }
  // lambda = -1: E(X;q,0) = X + X^-1 and A^D = 1/(q)_1
  auto d = char_module(CharKind::D, sl_representative({-1}), VarSet::sl(2), p);
  CHECK(d.size() == 2);
  CHECK(d.coeff({1, 0}) == QSeries::one(K));
  CHECK(d.coeff({-1, 0}) == QSeries::one(K));
  auto a = char_module(CharKind::A_D, sl_representative({-1}), VarSet::sl(2), p);
  CHECK(a.coeff({0, 0}) == inv_qpochhammer_q(1, K));
}

TEST_CASE("T factorizes and every kind is positive") {
  int K = 6;
  for (int n = 2; n <= 3; ++n) {
    auto p = TruncationPolicy::degrees(6, 6, K);
    for (const auto& lam : compositions_upto(n, n == 2 ? 5 : 3)) {
      CAPTURE(lam);
      for (VarSet v : {VarSet::gl(n), VarSet::sl(n)}) {
        auto t = char_module(CharKind::T, lam, v, p);
        auto ad = char_module(CharKind::A_D, lam, v, p);
        auto d = char_module(CharKind::D, lam, v, p);
        auto u = char_module(CharKind::Uo, lam, v, p);
        auto au = char_module(CharKind::A_U, lam, v, p);
        CHECK(t == mul_truncated(mul_truncated(ad, d), u));
        for (const QS* f : {&t, &ad, &d, &u, &au}) CHECK(nonnegative_integral(*f));
      }
    }
  }
}

TEST_CASE("gl lift carries the first-minimum factor") {
  int K = 7;
  auto p = TruncationPolicy::degrees(6, 6, K);
  for (const auto& lam : compositions_upto(3, 5)) {
    CAPTURE(lam);
    int lo = *std::min_element(lam.begin(), lam.end());
    auto gl = char_module(CharKind::A_D, lam, VarSet::gl(3), p).coeff({0, 0, 0, 0, 0, 0});
    auto sl = char_module(CharKind::A_D, lam, VarSet::sl(3), p).coeff({0, 0, 0, 0});
    CHECK(gl == sl * inv_qpochhammer_q(lo, K));
  }
}

TEST_CASE("Iwahori function character") {
  auto p1 = TruncationPolicy::degrees(4, 4, 4);
  CHECK(ch_iwahori_functions(1, p1) == QS::one(VarSet::gl(1), p1));

  auto p = TruncationPolicy::degrees(1, 1, 1);
  QS expect = QS::one(VarSet::gl(2), p);
  expect.add_term({1, 0, 1, 0}, poly({1, 1}, 1));
  expect.add_term({1, 0, 0, 1}, poly({1, 1}, 1));
  expect.add_term({0, 1, 0, 1}, poly({1, 1}, 1));
  expect.add_term({0, 1, 1, 0}, poly({0, 1}, 1));
  CHECK(ch_iwahori_functions(2, p) == expect);

  // q^0 layer: x^lambda y^lambda has coefficient 1 for lambda with a zero entry
  auto big = ch_iwahori_functions(2, TruncationPolicy::degrees(5, 5, 3));
  for (const auto& lam : zero_compositions_upto(2, 5)) {
    CAPTURE(lam);
    Exps m = lam;
    m.insert(m.end(), lam.begin(), lam.end());
    CHECK(big.coeff(m).coeff(0) == 1);
  }
}

TEST_CASE("Weyl ratio check") {
  auto zero = ch_weyl_ratio_check({0, 0}, 0, translation_reduced_word({0, 0}));
  CHECK(zero.pass);
  auto w = translation_reduced_word({0, 2});
  auto m0 = hw_algebra_char_at({0, 2}, w, 0);
  auto m1 = hw_algebra_char_at({0, 2}, w, 1);
  std::sort(m0.generator_degrees.begin(), m0.generator_degrees.end());
  CHECK(m0.generator_degrees == std::vector<int>{1, 2});
  CHECK(m1.generator_degrees == std::vector<int>{1});
  for (int m = 0; m <= static_cast<int>(w.letters.size()); ++m) CHECK(ch_weyl_ratio_check({0, 2}, m, w).pass);
  for (const auto& lam : compositions_upto(3, 3)) {
    auto anti = antidominant_data(lam).antidominant;
    auto word = translation_reduced_word(anti);
    for (int m = 0; m <= static_cast<int>(word.letters.size()); ++m) {
      CAPTURE(lam);
      CAPTURE(m);
      CHECK(ch_weyl_ratio_check(lam, m, word).pass);
    }
  }
}
