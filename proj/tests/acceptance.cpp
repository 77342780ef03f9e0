// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ratknot/ratknot.hpp"

using namespace ratknot;

namespace {

// Time limits, in seconds.
constexpr double kGoldenLimit = 1e-3;
constexpr double kOracleLimit = 60.0;
constexpr double kRecursionLimit = 30.0;
constexpr double kNamedKnotLimit = 10e-3;

// All suites run on one thread so the limits are single-core figures.
constexpr unsigned kJobs = 1;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s %d %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

std::string fmt_ms(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f ms", s * 1e3);
  return buf;
}

template <class F>
double timed(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Combines several suite reports into one criterion line.
void report_suites(int id, const std::string& what, const std::vector<SuiteReport>& suites, double limit = 0) {
  bool ok = true;
  std::size_t cases = 0;
  double seconds = 0;
  std::string first;
  for (const auto& s : suites) {
    cases += s.cases;
    seconds += s.seconds;
    if (!s.passed()) {
      ok = false;
      if (first.empty()) first = s.name + ": " + std::to_string(s.failures) + " failing, first " + s.first_failure;
    }
  }
  std::string detail = std::to_string(cases) + " cases, " + fmt_seconds(seconds);
  if (limit > 0) {
    detail += " (limit " + fmt_seconds(limit) + ")";
    if (seconds >= limit) ok = false;
  }
  if (!first.empty()) detail += "; " + first;
  report(id, ok, what, detail);
}

bool same_up_to_mirror(const TPoly& a, const TPoly& b) { return a == b || a == b.mirror(); }

TPoly laurent(std::initializer_list<std::pair<long, long>> terms) {
  TPoly out;
  for (auto [e, c] : terms) out = out + TPoly::monomial(e, c);
  return out;
}

}  // namespace

int main() {
  const auto sweep = even_sweep(5);
  const auto random = random_even_cfs(200, kDefaultSeed, 8, 8);
  auto all = sweep;
  all.insert(all.end(), random.begin(), random.end());
  const auto exps = expansions(100);
  std::printf("sweep %zu, random %zu (seed %llu), expansions %zu\n", sweep.size(), random.size(),
              static_cast<unsigned long long>(kDefaultSeed), exps.size());

  {
    std::string got;
    const double s = timed([&] { got = format_fpoly(f_poly_brute(poset_from_cf({2, 2}))); });
    const bool match = got == "1 + y1 + y3 + y1*y3 + y1*y2*y3" && f_poly_recursive({2, 2}) == f_poly_brute(poset_from_cf({2, 2}));
    report(1, match && s < kGoldenLimit, "F[2,2] = 1 + y1 + y3 + y1*y3 + y1*y2*y3",
           got + ", " + fmt_ms(s) + " (limit " + fmt_ms(kGoldenLimit) + ")");
  }

  report_suites(2, "HOMFLY theorem = skein oracle", {run_suite("theorem = oracle", all, checks::theorem_matches_oracle, kJobs)},
                kOracleLimit);
  report_suites(3, "F recursion = brute force, p <= 100",
                {run_suite("recursion = brute", exps, checks::recursion_matches_brute, kJobs)}, kRecursionLimit);
  report_suites(4, "Q[c] orientation = Q(p/q), p <= 100", {run_suite("poset", exps, checks::poset_matches_rational, kJobs)});
  report_suites(5, "F(1, ..., 1) = p, p <= 100", {run_suite("count", exps, checks::numerator_count, kJobs)});
  report_suites(6, "Alexander via F-polynomial = Alexander via HOMFLY, symmetric",
                {run_suite("corollary", all, checks::corollary_and_symmetry, kJobs)});

  {
    struct Named {
      std::string name;
      std::function<bool()> check;
    };
    const std::vector<Named> named = {
        {"alexander(3/1)", [] { return unit_equivalent(alexander(ExtendedRational(3, 1), Method::Oracle), laurent({{2, 1}, {0, -1}, {-2, 1}})); }},
        {"alexander(5/2)", [] { return unit_equivalent(alexander(ExtendedRational(5, 2), Method::Oracle), laurent({{2, -1}, {0, 3}, {-2, -1}})); }},
        {"jones(5/2)", [] { return jones(ExtendedRational(5, 2), Method::Oracle) == laurent({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}); }},
        {"jones(0/1)", [] { return same_up_to_mirror(jones(ExtendedRational(0, 1), Method::Oracle), laurent({{1, -1}, {-1, -1}})); }},
        {"theorem agrees", [] {
           for (auto [p, q] : {std::pair{3L, 1L}, {5L, 2L}, {0L, 1L}}) {
             ExtendedRational r(p, q);
             if (homfly(r, Method::Theorem) != homfly(r, Method::Oracle)) return false;
           }
           return true;
         }},
    };
    bool ok = true;
    std::string detail;
    for (const auto& n : named) {
      bool good = false;
      const double s = timed([&] { good = n.check(); });
      const bool fast = s < kNamedKnotLimit;
      ok = ok && good && fast;
      if (!detail.empty()) detail += ", ";
      detail += n.name + (good ? " ok " : " WRONG ") + fmt_ms(s);
    }
    report(7, ok, "named knots (limit " + fmt_ms(kNamedKnotLimit) + " each)", detail);
  }

  report_suites(8, "segment closed forms, mu/nu table, F~ recursion",
                {run_suite("brute reference", sweep, [](const ContinuedFraction& cf) { return checks::specialization_identities(cf, true); }, kJobs),
                 run_suite("recursion reference", random, [](const ContinuedFraction& cf) { return checks::specialization_identities(cf, false); }, kJobs)});
  report_suites(9, "extension identity for the skein oracle", {run_suite("extension", all, checks::extension_identity, kJobs)});

  std::printf("%s\n", failures == 0 ? "all criteria passed" : (std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
