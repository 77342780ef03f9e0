#ifndef RATKNOT_CLI_HPP
#define RATKNOT_CLI_HPP

// Command-line front end.  run() is separate from main() so tests can drive it.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratknot/cf.hpp"
#include "ratknot/fpoly.hpp"
#include "ratknot/invariants.hpp"
#include "ratknot/poset.hpp"
#include "ratknot/verify.hpp"

namespace ratknot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Enumeration cap, overridable through RATKNOT_IDEAL_CAP.
inline std::size_t ideal_cap() {
  const char* env = std::getenv("RATKNOT_IDEAL_CAP");
  if (env == nullptr || *env == '\0') return kDefaultIdealCap;
  Integer v = parse_integer(env);
  if (v < 0 || !v.fits_ulong_p()) throw ParseError(std::string("RATKNOT_IDEAL_CAP must be a nonnegative integer, got '") + env + "'");
  return v.get_ui();
}

namespace detail {

struct Input {
  std::string fraction;
  std::string cf;
  CLI::Option* fraction_opt = nullptr;
  CLI::Option* cf_opt = nullptr;

  void attach(CLI::App* app, bool cf_allowed = true) {
    fraction_opt = app->add_option("fraction", fraction, "P/Q, or a bare integer");
    if (cf_allowed) {
      cf_opt = app->add_option("--cf", cf, "continued fraction c1,c2,...");
      fraction_opt->excludes(cf_opt);
    }
  }
  bool has_cf() const { return cf_opt != nullptr && cf_opt->count() > 0; }
  void require_one() const {
    if (fraction_opt->count() == 0 && !has_cf()) throw ParseError("give a fraction P/Q or --cf c1,c2,...");
  }
};

inline Method parse_method(const std::string& m) { return m == "skein" ? Method::Oracle : Method::Theorem; }

inline std::string input_label(const Input& in) { return in.has_cf() ? "[" + in.cf + "]" : in.fraction; }

inline FieldElem homfly_for(const Input& in, Method method) {
  if (in.has_cf()) return homfly_of_cf(parse_cf(in.cf), method);
  return homfly(parse_coprime_fraction(in.fraction), method);
}

// Expansion used when a fraction stands in for a continued fraction.
inline ContinuedFraction expansion_for(const ExtendedRational& r, const std::string& form) {
  if (form == "positive") return positive_cf(r);
  if (form == "even") return even_cf(r);
  if (is_even(r.p()) || is_even(r.q())) return even_cf(r);
  return positive_cf(r);
}

inline nlohmann::json tpoly_json(const std::string& input, const char* key, const TPoly& value) {
  return {{"input", input}, {key, value.to_string()}, {"terms", value.to_json()}};
}

// One batch line -> one JSON object.
inline nlohmann::json batch_line(const std::string& line, Method method) {
  nlohmann::json j{{"input", line}};
  try {
    ExtendedRational r = parse_coprime_fraction(line);
    LinkForm form = canonical_link_form(r);
    if (const auto* cf = std::get_if<ContinuedFraction>(&form)) {
      j["cf"] = cf->to_string();
    } else if (std::holds_alternative<UnknotMarker>(form)) {
      j["cf"] = "unknot";
    } else {
      j["cf"] = "unlink";
    }
    FieldElem p = homfly(r, method);
    j["homfly"] = p.to_string();
    j["homfly_terms"] = p.to_json();
    j["jones"] = jones_from_homfly(p).to_string();
    j["alexander"] = alexander_from_homfly(p).to_string();
  } catch (const Error& e) {
    j["error"] = e.what();
  }
  return j;
}

}  // namespace detail

/// Runs one command line (args excludes the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"HOMFLY, Jones and Alexander polynomials of rational knots and links", "ratknot"};
  app.require_subcommand(1);

  std::string method = "theorem";
  bool json = false;
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method, "theorem (F-polynomial) or skein (recursion)")->check(CLI::IsMember({"theorem", "skein"}));
  };

  detail::Input homfly_in, jones_in, alex_in, fpoly_in, poset_in, cf_in;
  auto* homfly_cmd = app.add_subcommand("homfly", "HOMFLY polynomial in l and q");
  homfly_in.attach(homfly_cmd);
  add_method(homfly_cmd);
  homfly_cmd->add_flag("--json", json, "JSON output");

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial in t");
  jones_in.attach(jones_cmd);
  add_method(jones_cmd);
  jones_cmd->add_flag("--json", json, "JSON output");

  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial in t");
  alex_in.attach(alex_cmd);
  add_method(alex_cmd);
  alex_cmd->add_flag("--json", json, "JSON output");

  std::string form = "auto";
  auto* fpoly_cmd = app.add_subcommand("fpoly", "F-polynomial of a path poset");
  fpoly_in.attach(fpoly_cmd);
  fpoly_cmd->add_option("--form", form, "expansion used for a fraction")->check(CLI::IsMember({"auto", "positive", "even"}));
  fpoly_cmd->add_flag("--json", json, "JSON output");

  std::string format = "ascii";
  auto* poset_cmd = app.add_subcommand("poset", "Hasse diagram of Q(P/Q) or Q[c]");
  poset_in.attach(poset_cmd);
  poset_cmd->add_option("--format", format, "ascii or dot")->check(CLI::IsMember({"ascii", "dot"}));

  std::string cf_form = "even";
  auto* cf_cmd = app.add_subcommand("cf", "continued fraction expansion");
  cf_in.attach(cf_cmd, false);
  cf_cmd->add_option("--form", cf_form, "positive or even")->check(CLI::IsMember({"positive", "even"}));
  cf_cmd->add_flag("--json", json, "JSON output");

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "run the oracle-equivalence suites");
  verify_cmd->add_option("--max-num", vo.max_num, "largest numerator in fraction sweeps")->check(CLI::Range(2L, 100000L));
  verify_cmd->add_option("--sweep-depth", vo.sweep_depth, "length bound of the {+-2,+-4} sweep")->check(CLI::Range(1L, 8L));
  verify_cmd->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::Range(1U, 256U));
  verify_cmd->add_option("--seed", vo.seed, "seed for the random continued fractions");

  std::string batch_file;
  auto* batch_cmd = app.add_subcommand("batch", "one fraction per line in, one JSON object per line out");
  batch_cmd->add_option("file", batch_file, "input file, - for stdin")->required();
  add_method(batch_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const Method m = detail::parse_method(method);
  try {
    if (*homfly_cmd) {
      homfly_in.require_one();
      FieldElem p = detail::homfly_for(homfly_in, m);
      if (json) {
        out << nlohmann::json{{"input", detail::input_label(homfly_in)}, {"homfly", p.to_json()}, {"text", p.to_string()}}.dump() << '\n';
      } else {
        out << p.to_string() << '\n';
      }
    } else if (*jones_cmd || *alex_cmd) {
      const bool is_jones = jones_cmd->parsed();
      const detail::Input& in = is_jones ? jones_in : alex_in;
      in.require_one();
      FieldElem p = detail::homfly_for(in, m);
      TPoly v = is_jones ? jones_from_homfly(p) : alexander_from_homfly(p);
      if (json) {
        out << detail::tpoly_json(detail::input_label(in), is_jones ? "jones" : "alexander", v).dump() << '\n';
      } else {
        out << v.to_string() << '\n';
      }
    } else if (*fpoly_cmd) {
      fpoly_in.require_one();
      ContinuedFraction cf = fpoly_in.has_cf() ? parse_cf(fpoly_in.cf)
                                               : detail::expansion_for(parse_coprime_fraction(fpoly_in.fraction), form);
      PathPoset poset = poset_from_cf(cf);
      Integer count = count_order_ideals(poset);
      if (count > Integer(static_cast<unsigned long>(ideal_cap()))) {
        throw ResourceLimit("F-polynomial has " + count.get_str() + " terms, above the cap of " + std::to_string(ideal_cap()));
      }
      MultiPoly f = f_poly_recursive(cf);
      if (json) {
        out << nlohmann::json{{"cf", cf.to_string()}, {"fpoly", format_fpoly(f)}, {"terms", f.term_count()}}.dump() << '\n';
      } else {
        out << format_fpoly(f) << '\n';
      }
    } else if (*poset_cmd) {
      poset_in.require_one();
      PathPoset poset = poset_in.has_cf() ? poset_from_cf(parse_cf(poset_in.cf))
                                          : poset_from_rational(parse_coprime_fraction(poset_in.fraction));
      out << (format == "dot" ? render_dot(poset) : render_ascii(poset));
    } else if (*cf_cmd) {
      cf_in.require_one();
      ExtendedRational r = parse_coprime_fraction(cf_in.fraction);
      ContinuedFraction cf = cf_form == "positive" ? positive_cf(r) : even_cf(r);
      if (json) {
        out << nlohmann::json{{"input", r.to_string()}, {"form", cf_form}, {"terms", cf.terms()}}.dump() << '\n';
      } else {
        out << cf.to_string() << '\n';
      }
    } else if (*verify_cmd) {
      out << "seed " << vo.seed << '\n';
      bool ok = true;
      run_verification(vo, [&](const SuiteReport& r) {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.seconds << " s)";
        if (!r.passed()) line << ": " << r.failures << " failing, first: " << r.first_failure;
        out << line.str() << '\n' << std::flush;
        ok = ok && r.passed();
      });
      return ok ? kExitOk : kExitFailed;
    } else if (*batch_cmd) {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (batch_file != "-") {
        file.open(batch_file);
        if (!file) throw ParseError("cannot open '" + batch_file + "'");
        in = &file;
      }
      std::string line;
      while (std::getline(*in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        out << detail::batch_line(line.substr(first, last - first + 1), m).dump() << '\n';
      }
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    auto used = app.get_subcommands();
    err << (used.empty() ? app.help() : used.front()->help());
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ratknot::cli

#endif  // RATKNOT_CLI_HPP
