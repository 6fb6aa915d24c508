#include "macdonald/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "macdonald/characters.hpp"
#include "macdonald/identities.hpp"
#include "macdonald/macdonald.hpp"

namespace mac {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Composition parse_lambda(const std::string& s, int n) {
  Composition r;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      r.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("malformed lambda: " + s);
    }
  }
  if (static_cast<int>(r.size()) != n)
    throw UsageError("lambda has " + std::to_string(r.size()) + " entries, expected " + std::to_string(n));
  return r;
}

void check_rank(int n) {
  if (n < 1 || n > 8) throw UsageError("rank out of range: " + std::to_string(n));
}

std::string coeff_text(const QSeries& s) { return s.to_qpoly().to_string(); }
std::string coeff_text(const QTRational& s) { return s.to_string(); }

std::string x_monomial(const Exps& m) {
  std::string r;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!r.empty()) r += "*";
    r += "x" + std::to_string(i + 1);
    if (m[i] != 1) r += "^" + std::to_string(m[i]);
  }
  return r.empty() ? "1" : r;
}

template <class C>
nlohmann::json terms_json(const std::map<Exps, C>& terms) {
  nlohmann::json t = nlohmann::json::array();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    t.push_back({{"exps", it->first}, {"coeff", coeff_text(it->second)}});
  return t;
}

template <class S>
nlohmann::json series_json(const TruncatedSeries<S>& f) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) t.push_back({{"exps", m}, {"coeff", coeff_text(c)}});
  return t;
}

// single-line sum, leading exponent first
template <class C>
std::string expression(const std::map<Exps, C>& terms) {
  if (terms.empty()) return "0";
  std::string r;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string mono = x_monomial(it->first), c = coeff_text(it->second);
    std::string term;
    if (c == "1") {
      term = mono;
    } else if (mono == "1") {
      term = c.find_first_of("+- /") == std::string::npos ? c : "(" + c + ")";
    } else {
      term = (c.find_first_of("+- /") == std::string::npos ? c : "(" + c + ")") + "*" + mono;
    }
    if (!r.empty()) r += " + ";
    r += term;
  }
  return r;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonsymmetric Macdonald polynomials and Cauchy identity checks", "macdonald"};
  app.require_subcommand(1);
  std::string format = "text";
  bool timing = false;
  int n = 0, jobs = 1;
  std::string lambda_s, spec_s = "qt", kind_s, identity_s;
  std::optional<int> max_q;
  int max_deg = 0, lo = 0, hi = 0;
  bool qt = false, alt = false, sl = false;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* mac_cmd = app.add_subcommand("macdonald", "print E_lambda");
  mac_cmd->add_option("--n", n)->required();
  mac_cmd->add_option("--lambda", lambda_s)->required();
  mac_cmd->add_option("--spec", spec_s)->check(CLI::IsMember({"qt", "t0", "qinv-tinf", "q0", "qinf-tinf", "qt-inv"}));
  mac_cmd->add_option("--max-q", max_q);
  add_format(mac_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "print a_lambda");
  norm_cmd->add_option("--n", n)->required();
  norm_cmd->add_option("--lambda", lambda_s)->required();
  norm_cmd->add_flag("--qt", qt, "exact a_lambda(q,t)");
  norm_cmd->add_flag("--alt", alt, "product over the inversion set");
  norm_cmd->add_option("--max-q", max_q);
  add_format(norm_cmd);

  auto* char_cmd = app.add_subcommand("char", "print a bimodule character");
  char_cmd->add_option("--kind", kind_s)->required()->check(CLI::IsMember({"D", "Uo", "T", "A-D", "A-U"}));
  char_cmd->add_option("--n", n)->required();
  char_cmd->add_option("--lambda", lambda_s)->required();
  char_cmd->add_option("--max-deg", max_deg)->required()->check(CLI::NonNegativeNumber);
  char_cmd->add_option("--max-q", max_q)->required();
  char_cmd->add_flag("--sl", sl, "sl variables; lambda is any integer representative");
  add_format(char_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check an identity");
  verify_cmd->add_option("--identity", identity_s)
      ->required()
      ->check(CLI::IsMember({"gl-qt", "gl-t0", "gl-slform", "sl", "classical-q0", "iwahori-char", "sl2-appendix"}));
  verify_cmd->add_option("--n", n)->required();
  verify_cmd->add_option("--max-deg", max_deg)->required()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-q", max_q);
  verify_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--timing", timing, "report elapsed time");
  add_format(verify_cmd);

  auto* app_cmd = app.add_subcommand("appendix", "check the sl2 closed forms");
  app_cmd->add_option("--min", lo)->required();
  app_cmd->add_option("--max", hi)->required();
  app_cmd->add_option("--max-q", max_q)->required();
  app_cmd->add_flag("--timing", timing, "report elapsed time");
  add_format(app_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (const char* dir = std::getenv("MACDONALD_CACHE_DIR"); dir && *dir) {
    if (!attach_cache(dir)) err << "warning: cache in " << dir << " failed re-verification and was ignored\n";
  }

  bool json = format == "json";
  try {
    if (max_q && *max_q < 0) throw UsageError("--max-q must be nonnegative");

    if (*mac_cmd) {
      check_rank(n);
      Composition lam = parse_lambda(lambda_s, n);
      if (!is_composition(lam)) throw UsageError("lambda must be a composition");
      Spec spec = parse_spec(spec_s);
      if (max_q) {
        if (spec != Spec::t0 && spec != Spec::qinv_tinf)
          throw UsageError("--max-q applies to --spec t0 or qinv-tinf");
        auto f = specialized_series(lam, spec, *max_q);
        if (json) {
          emit(out, {{"variant", "macdonald"},
                     {"n", n},
                     {"lambda", lam},
                     {"policy", {{"spec", spec_s}, {"max_q", *max_q}}},
                     {"terms", terms_json(f)}});
        } else {
          out << expression(f) << "\n";
        }
        return 0;
      }
      auto e = macdonald_E(lam);
      if (spec != Spec::generic) e = specialize_E(e, spec);
      if (json) {
        emit(out, {{"variant", "macdonald"},
                   {"n", n},
                   {"lambda", lam},
                   {"policy", {{"spec", spec_s}, {"max_q", nullptr}}},
                   {"terms", terms_json(e.terms)}});
      } else {
        out << expression(e.terms) << "\n";
      }
      return 0;
    }

    if (*norm_cmd) {
      check_rank(n);
      Composition lam = parse_lambda(lambda_s, n);
      if (!is_composition(lam)) throw UsageError("lambda must be a composition");
      if (qt && max_q) throw UsageError("--qt is exact; drop --max-q");
      if (qt && alt) throw UsageError("--alt computes a_lambda(q); drop --qt");
      std::string value;
      nlohmann::json policy;
      if (qt) {
        value = norm_a_qt(lam).to_string();
        policy = {{"formula", "qt"}};
      } else {
        if (!max_q) throw UsageError("norm needs --max-q or --qt");
        value = coeff_text(alt ? norm_a_q_alt(lam, *max_q) : norm_a_q(lam, *max_q));
        policy = {{"formula", alt ? "alt" : "q"}, {"max_q", *max_q}};
      }
      if (json) {
        emit(out, {{"variant", "norm"}, {"n", n}, {"lambda", lam}, {"policy", policy}, {"value", value}});
      } else {
        out << value << "\n";
      }
      return 0;
    }

    if (*char_cmd) {
      check_rank(n);
      if (sl && n < 2) throw UsageError("sl characters need rank at least 2");
      Composition lam = parse_lambda(lambda_s, n);
      VarSet vars = sl ? VarSet::sl(n) : VarSet::gl(n);
      if (!sl && !is_composition(lam)) throw UsageError("gl characters need a composition; use --sl for weights");
      auto policy = TruncationPolicy::degrees(max_deg, max_deg, *max_q);
      auto f = char_module(parse_char_kind(kind_s), lam, vars, policy);
      if (json) {
        emit(out, {{"variant", "char-" + kind_s},
                   {"n", n},
                   {"lambda", lam},
                   {"policy", policy.to_json()},
                   {"vars", sl ? "sl" : "gl"},
                   {"terms", series_json(f)}});
      } else {
        out << f.to_text();
      }
      return 0;
    }

    VerificationReport rep;
    if (*verify_cmd) {
      check_rank(n);
      Identity v = parse_identity(identity_s);
      if (v == Identity::sl2_appendix) {
        if (n != 2) throw UsageError("sl2-appendix needs --n 2");
        if (!max_q) throw UsageError("sl2-appendix needs --max-q");
        rep = verify_sl2_appendix(-max_deg, max_deg, *max_q);
      } else {
        if (v == Identity::gl_qt && max_q) throw UsageError("gl-qt is exact in q; drop --max-q");
        if (v == Identity::gl_qt && n > 2) throw UsageError("gl-qt is limited to n <= 2");
        if (v == Identity::sl_projected && n < 2) throw UsageError("sl needs --n 2 or more");
        bool needs_q = v != Identity::gl_qt && v != Identity::classical_q0;
        if (needs_q && !max_q) throw UsageError(identity_s + " needs --max-q");
        if (v == Identity::classical_q0 && max_q && *max_q != 0) throw UsageError("classical-q0 runs at --max-q 0");
        rep = verify_identity(v, n, max_deg, max_q, jobs);
      }
    } else {
      if (hi < lo) throw UsageError("--max below --min");
      rep = verify_sl2_appendix(lo, hi, *max_q);
    }
    if (json) {
      emit(out, rep.to_json(timing));
    } else {
      out << rep.to_text(timing);
    }
    return rep.pass ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mac
