#pragma once

#include <map>
#include <string>

#include "macdonald/affine.hpp"
#include "macdonald/macdonald.hpp"
#include "macdonald/report.hpp"
#include "macdonald/series.hpp"

namespace mac {

using BimoduleCharacter = TruncatedSeries<QSeries>;

enum class CharKind { D, Uo, T, A_D, A_U };
std::string char_kind_name(CharKind k);
CharKind parse_char_kind(const std::string& s);

// Gl variables take lambda as a composition; A_D, A_U and T then carry the
// factor 1/(q;q)_{lambda_min}. Sl variables take any integer representative.
BimoduleCharacter char_module(CharKind kind, const Composition& lambda, VarSet vars,
                              const TruncationPolicy& policy);

// (x1..xn y1..yn;q)_inf prod_{i<=j} 1/(x_i y_j;q)_inf prod_{i>j} 1/(q x_i y_j;q)_inf
BimoduleCharacter ch_iwahori_functions(int n, const TruncationPolicy& policy);

// Degrees of the highest weight algebra at (lambda_-, m) through l_{alpha,m}
// against the omega(m) counts.
VerificationReport ch_weyl_ratio_check(const Composition& lambda, int m, const ReducedWord& w);

// Places a specialized polynomial in the x-block (right = false) or the
// y-block, restricting to sl weights when vars is sl.
BimoduleCharacter place_block(const std::map<Exps, QSeries>& f, bool right, VarSet vars,
                              const TruncationPolicy& policy);

}  // namespace mac
