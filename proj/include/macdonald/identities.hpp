#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "macdonald/characters.hpp"
#include "macdonald/report.hpp"
#include "macdonald/series.hpp"

namespace mac {

enum class Identity { gl_qt, gl_t0, gl_slform, sl_projected, classical_q0, iwahori_char, sl2_appendix };
std::string identity_name(Identity v);  // command-line spelling, e.g. "gl-t0"
Identity parse_identity(const std::string& s);

// Series sides in gl variables with QSeries coefficients (every variant but
// gl_qt and sl2_appendix). The RHS sums over |lambda| up to the degree bound
// of the policy; jobs > 1 evaluates summands in parallel.
TruncatedSeries<QSeries> lhs_series(Identity v, int n, const TruncationPolicy& policy);
TruncatedSeries<QSeries> rhs_series(Identity v, int n, const TruncationPolicy& policy, int jobs = 1,
                                    long* lambda_count = nullptr);

// Exact (q,t) sides, no q-truncation.
TruncatedSeries<QTRational> lhs_series_qt(int n, int max_deg);
TruncatedSeries<QTRational> rhs_series_qt(int n, int max_deg, int jobs = 1, long* lambda_count = nullptr);

// Class pairs of sl weights reachable from gl monomials x^a y^b with
// |a| = |b| <= gl_degree, together with the gl order ideal that holds every
// fiber contributor of q-degree <= K.
struct SlWindow {
  int n = 0, gl_degree = 0, K = 0;
  std::set<std::pair<Exps, Exps>> classes;  // (X coordinates, Y coordinates)
  std::vector<Exps> generators;             // gl exponents (x block, y block)
  int certified_degree = 0;                 // largest x-degree among generators

  TruncationPolicy gl_policy() const;
  VarSet sl_vars() const { return VarSet::sl(n); }
  TruncationPolicy sl_policy() const;
};
SlWindow certified_window(int n, int gl_degree, int K);

// Throws "window exceeds certified bound" unless f's policy contains every
// generator of the window.
TruncatedSeries<QSeries> project_to_sl(const TruncatedSeries<QSeries>& f, const SlWindow& w);

// sum over sl weights of ch(A^D) E(X;q,0) E(Y;q^-1,inf), restricted to the window
TruncatedSeries<QSeries> sl_rhs_series(const SlWindow& w, int jobs = 1, long* lambda_count = nullptr);

// Integer fast paths for the gl_slform sides, used by the sl verification.
TruncatedSeries<QSeries> slform_lhs_fast(int n, const TruncationPolicy& policy);
TruncatedSeries<QSeries> slform_rhs_fast(int n, const TruncationPolicy& policy, int max_lambda, int jobs = 1,
                                         long* lambda_count = nullptr);

// For sl_projected, max_deg is the gl degree of the window.
VerificationReport verify_identity(Identity v, int n, int max_deg, std::optional<int> max_q, int jobs = 1);
VerificationReport verify_sl2_appendix(int lo, int hi, int K);

}  // namespace mac
