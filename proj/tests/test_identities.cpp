#include "doctest.h"
#include "macdonald/identities.hpp"

using namespace mac;

namespace {

using QS = TruncatedSeries<QSeries>;

QSeries geometric_tail(int shift, int cap) {
  // q^shift / (1 - q)
  QSeries s(cap);
  for (int e = shift; e <= cap; ++e) s.coeff(e) = 1;
  return s;
}

Exps gl_mono(std::initializer_list<int> e) { return Exps(e); }

}  // namespace

TEST_CASE("identity names round-trip") {
  for (auto v : {Identity::gl_qt, Identity::gl_t0, Identity::gl_slform, Identity::sl_projected,
                 Identity::classical_q0, Identity::iwahori_char, Identity::sl2_appendix})
    CHECK(parse_identity(identity_name(v)) == v);
  CHECK(identity_name(Identity::sl_projected) == "sl");
  CHECK_THROWS_AS(parse_identity("gl"), std::invalid_argument);
}

TEST_CASE("left-hand side examples") {
  auto p = TruncationPolicy::degrees(3, 3, 0);
  auto c = lhs_series(Identity::classical_q0, 1, p);
  QS expect(VarSet::gl(1), p);
  for (int k = 0; k <= 3; ++k) expect.add_term({k, k}, QSeries::one(0));
  CHECK(c == expect);

  auto p2 = TruncationPolicy::degrees(1, 1, 2);
  auto t0 = lhs_series(Identity::gl_t0, 1, p2);
  QS e2 = QS::one(VarSet::gl(1), p2);
  e2.add_term({1, 1}, geometric_tail(0, 2));
  CHECK(t0 == e2);

  // coefficient of x1 y1 in the (q,t) product is (1 - qt)/(1 - q)
  auto qt = lhs_series_qt(1, 1);
  CHECK(qt.size() == 2);
  QTRational one(1);
  CHECK(qt.coeff({1, 1}) == (one - QTRational::q() * QTRational::t()) / (one - QTRational::q()));
}

TEST_CASE("degree zero gives 1 on both sides") {
  for (int n = 1; n <= 3; ++n) {
    auto p = TruncationPolicy::degrees(0, 0, 4);
    for (auto v : {Identity::gl_t0, Identity::gl_slform, Identity::iwahori_char}) {
      CHECK(lhs_series(v, n, p) == QS::one(VarSet::gl(n), p));
      CHECK(rhs_series(v, n, p) == QS::one(VarSet::gl(n), p));
    }
    CHECK(rhs_series_qt(n, 0).size() == 1);
  }
}

TEST_CASE("gl-t0 right-hand side at degree one") {
  int K = 5;
  auto p = TruncationPolicy::degrees(1, 1, K);
  // E_(1,0) = x1, E_(0,1)(x;q,0) = x2 + x1, E_(0,1)(y;1/q,inf) = y2 + q y1
  QS expect = QS::one(VarSet::gl(2), p);
  expect.add_term(gl_mono({1, 0, 1, 0}), geometric_tail(0, K));
  expect.add_term(gl_mono({1, 0, 0, 1}), geometric_tail(0, K));
  expect.add_term(gl_mono({0, 1, 1, 0}), geometric_tail(1, K));
  expect.add_term(gl_mono({0, 1, 0, 1}), geometric_tail(0, K));
  long count = 0;
  CHECK(rhs_series(Identity::gl_t0, 2, p, 1, &count) == expect);
  CHECK(count == 3);
  CHECK(lhs_series(Identity::gl_t0, 2, p) == expect);
}

TEST_CASE("small identities pass") {
  for (int n = 1; n <= 3; ++n) {
    int D = n == 3 ? 3 : 4;
    CAPTURE(n);
    CHECK(verify_identity(Identity::gl_t0, n, D, 5).pass);
    CHECK(verify_identity(Identity::gl_slform, n, D, 5).pass);
    CHECK(verify_identity(Identity::iwahori_char, n, D, 5).pass);
    CHECK(verify_identity(Identity::classical_q0, n, D, std::nullopt).pass);
  }
  CHECK(verify_identity(Identity::gl_qt, 1, 3, std::nullopt).pass);
  CHECK(verify_identity(Identity::gl_qt, 2, 2, std::nullopt).pass);
  CHECK(verify_identity(Identity::sl_projected, 2, 2, 3).pass);
  CHECK(verify_identity(Identity::sl_projected, 3, 1, 1).pass);
  CHECK(verify_sl2_appendix(-3, 3, 6).pass);

  CHECK_THROWS_AS(verify_identity(Identity::gl_t0, 2, 3, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(Identity::gl_qt, 2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(Identity::classical_q0, 2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(Identity::sl_projected, 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(Identity::sl2_appendix, 2, 2, 2), std::invalid_argument);
}

TEST_CASE("report records the run") {
  auto rep = verify_identity(Identity::gl_t0, 2, 3, 4);
  CHECK(rep.variant == "gl-t0");
  CHECK(rep.n == 2);
  CHECK(rep.lambda_count == 10);
  CHECK(rep.policy["max_q"] == 4);
  auto back = VerificationReport::from_json(rep.to_json(false));
  CHECK(back.to_json(false) == rep.to_json(false));
  CHECK(rep.to_text(false).find("outcome: pass") != std::string::npos);
  CHECK(rep.to_text(false).find("elapsed") == std::string::npos);
  CHECK(rep.to_text(true).find("elapsed_seconds") != std::string::npos);
}

TEST_CASE("parallel evaluation is deterministic") {
  auto p = TruncationPolicy::degrees(4, 4, 5);
  for (auto v : {Identity::gl_t0, Identity::gl_slform, Identity::iwahori_char}) {
    auto a = rhs_series(v, 2, p, 1);
    auto b = rhs_series(v, 2, p, 6);
    CHECK(a == b);
    CHECK(a.to_text() == b.to_text());
  }
  CHECK(verify_identity(Identity::gl_t0, 2, 4, 5, 1).to_json(false) ==
        verify_identity(Identity::gl_t0, 2, 4, 5, 8).to_json(false));
}

TEST_CASE("stability resummation links gl-slform to gl-t0") {
  for (auto [n, D, K] : {std::tuple{2, 5, 6}, std::tuple{3, 3, 4}}) {
    auto p = TruncationPolicy::degrees(D, D, K);
    VarSet v = VarSet::gl(n);
    // sum_m Z^m/(q)_m = 1/(Z;q)_inf
    auto stab = inverse_truncated(pochhammer_series<QSeries>(PochArg{1, 0, Exps(2 * n, 1)}, std::nullopt, v, p));
    CHECK(mul_truncated(rhs_series(Identity::gl_slform, n, p), stab) == rhs_series(Identity::gl_t0, n, p));
    CHECK(mul_truncated(lhs_series(Identity::gl_slform, n, p), stab) == lhs_series(Identity::gl_t0, n, p));
  }
}

TEST_CASE("t = 0 limit of the (q,t) side") {
  int K = 6;
  for (int D = 0; D <= 3; ++D) {
    CAPTURE(D);
    auto p = TruncationPolicy::degrees(D, D, K);
    auto qt = rhs_series_qt(2, D);
    QS limited(VarSet::gl(2), p);
    for (const auto& [m, c] : qt.terms()) limited.add_term(m, expand_q(limit_t(c, LimitDir::zero), K));
    CHECK(limited == rhs_series(Identity::gl_t0, 2, p));
  }
}

TEST_CASE("re-truncation preserves a pass") {
  auto big = TruncationPolicy::degrees(4, 4, 6);
  auto lhs = lhs_series(Identity::gl_t0, 2, big);
  auto rhs = rhs_series(Identity::gl_t0, 2, big);
  REQUIRE(lhs == rhs);
  for (int D = 0; D <= 4; ++D)
    for (int K = 0; K <= 6; K += 2) {
      auto small = TruncationPolicy::degrees(D, D, K);
      CHECK(lhs.retruncated(small) == lhs_series(Identity::gl_t0, 2, small));
      CHECK(rhs.retruncated(small) == rhs_series(Identity::gl_t0, 2, small));
    }
}

TEST_CASE("integer fast path matches the generic path") {
  for (auto [n, D, K] : {std::tuple{2, 5, 6}, std::tuple{3, 3, 4}}) {
    auto p = TruncationPolicy::degrees(D, D, K);
    CHECK(slform_lhs_fast(n, p) == lhs_series(Identity::gl_slform, n, p));
    long a = 0, b = 0;
    CHECK(slform_rhs_fast(n, p, D, 3, &a) == rhs_series(Identity::gl_slform, n, p, 1, &b));
    CHECK(a == b);
  }
  auto w = certified_window(2, 2, 2);
  auto p = w.gl_policy();
  CHECK(slform_lhs_fast(2, p) == slform_rhs_fast(2, p, w.certified_degree));
}

TEST_CASE("certified window") {
  auto w = certified_window(2, 1, 2);
  // classes from |a| = |b| <= 1: (0,0) and the four pairs of +-1
  CHECK(w.classes.size() == 5);
  CHECK(w.classes.count({Exps{1}, Exps{-1}}) == 1);
  CHECK(w.certified_degree >= 2);
  for (const auto& g : w.generators) CHECK(g.size() == 4);
  CHECK_THROWS_AS(certified_window(1, 2, 2), std::invalid_argument);
  auto w3 = certified_window(3, 2, 1);
  CHECK(w3.classes.size() > w.classes.size());
}

TEST_CASE("projection to sl") {
  auto w = certified_window(2, 1, 2);
  auto p = w.gl_policy();
  VarSet gl = VarSet::gl(2);

  QS one = QS::one(gl, p);
  CHECK(project_to_sl(one, w) == QS::one(w.sl_vars(), w.sl_policy()));

  QS f(gl, p);
  f.add_term(gl_mono({1, 0, 1, 0}), QSeries::one(2));
  f.add_term(gl_mono({0, 1, 0, 1}), QSeries::one(2));
  QS expect(w.sl_vars(), w.sl_policy());
  expect.add_term({1, 1}, QSeries::one(2));
  expect.add_term({-1, -1}, QSeries::one(2));
  CHECK(project_to_sl(f, w) == expect);

  // sum of x^nu y^nu over nu with a zero entry: one term per diagonal class
  QS diag(gl, p);
  for (const auto& nu : zero_compositions_upto(2, w.certified_degree)) {
    Exps m = nu;
    m.insert(m.end(), nu.begin(), nu.end());
    if (p.admits(m, gl)) diag.add_term(m, QSeries::one(2));
  }
  auto pd = project_to_sl(diag, w);
  int diagonal_classes = 0;
  for (const auto& [a, b] : w.classes) diagonal_classes += a == b;
  CHECK(static_cast<int>(pd.size()) == diagonal_classes);
  for (const auto& [m, c] : pd.terms()) {
    CHECK(m[0] == m[1]);
    CHECK(c == QSeries::one(2));
  }

  QS low(gl, TruncationPolicy::degrees(1, 1, 2));
  CHECK_THROWS_WITH(project_to_sl(low, w), "window exceeds certified bound");
  QS lowq(gl, TruncationPolicy::from_ideal(w.generators, 2, 1));
  CHECK_THROWS_WITH(project_to_sl(lowq, w), "window exceeds certified bound");
}

TEST_CASE("sl sum against the projected gl sides") {
  for (auto [n, D, K] : {std::tuple{2, 3, 4}, std::tuple{3, 1, 2}}) {
    auto w = certified_window(n, D, K);
    auto p = w.gl_policy();
    auto direct = sl_rhs_series(w, 4);
    CHECK(project_to_sl(slform_lhs_fast(n, p), w) == direct);
    CHECK(project_to_sl(slform_rhs_fast(n, p, w.certified_degree, 4), w) == direct);
  }
}
