#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "macdonald/exact.hpp"
#include "macdonald/series.hpp"
#include "macdonald/weights.hpp"

namespace mac {

enum class Spec { generic, t0, qinv_tinf, q0_t0, qinf_tinf, qt_inv };

std::string spec_name(Spec s);
Spec parse_spec(const std::string& s);

struct MacdonaldPolynomial {
  int n = 0;
  Composition lambda;
  Spec spec = Spec::generic;
  std::map<Exps, QTRational> terms;  // x-exponents -> coefficient

  QTRational coeff(const Exps& m) const;
  std::string to_text() const;
  nlohmann::json to_json() const;
  friend bool operator==(const MacdonaldPolynomial& a, const MacdonaldPolynomial& b) {
    return a.n == b.n && a.lambda == b.lambda && a.terms == b.terms;
  }
};

// Intertwiner recursion from E_0 = 1; memoized.
MacdonaldPolynomial macdonald_E(const Composition& lambda);
// Sum over non-attacking fillings; independent second construction.
MacdonaldPolynomial macdonald_E_fillings(const Composition& lambda);
MacdonaldPolynomial specialize_E(const MacdonaldPolynomial& e, Spec mode);

// Specialized E(x;q,0) or E(x;q^-1,inf) (mode t0 or qinv_tinf) from the
// fillings sum restricted to the surviving fillings. With a cap, fillings of
// q-degree above the cap are pruned and coefficients are truncated.
std::map<Exps, QPoly> specialized_fillings(const Composition& lambda, Spec mode,
                                           std::optional<int> cap = std::nullopt);

// Truncated specialized E for mode t0 or qinv_tinf. Small |lambda| goes through
// the generic recursion and exact limits, larger |lambda| through the pruned
// fillings sum.
std::map<Exps, QSeries> specialized_series(const Composition& lambda, Spec mode, int cap);
int generic_path_limit(int n);

QTRational norm_a_qt(const Composition& lambda);
QSeries norm_a_q(const Composition& lambda, int cap);
QSeries norm_a_q_alt(const Composition& lambda, int cap);

// Laurent polynomial in one variable with QPoly coefficients
using LaurentQ = std::map<int, QPoly>;
std::string laurent_to_string(const LaurentQ& p, const std::string& var);

LaurentQ rs_polynomial(int m);

struct Sl2ClosedForms {
  LaurentQ e_t0;        // E(X;q,0)
  LaurentQ e_qinv_tinf; // E(Y;q^-1,inf)
  int norm_index;       // a = 1/(q;q)_{norm_index}
};
Sl2ClosedForms sl2_closed_forms(int lambda);

// Restriction of a two-variable polynomial to the sl2 weight x1^a x2^b -> X^{a-b}.
LaurentQ restrict_rank_one(const std::map<Exps, QPoly>& f);

// Persisting the memo table between runs. Returns false when the directory
// content failed re-verification and was ignored.
bool attach_cache(const std::string& dir);
void clear_memo();

}  // namespace mac
