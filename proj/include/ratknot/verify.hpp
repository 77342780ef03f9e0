#ifndef RATKNOT_VERIFY_HPP
#define RATKNOT_VERIFY_HPP

// Case generators and the oracle-equivalence suites run by `ratknot verify`.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ratknot/cf.hpp"
#include "ratknot/fpoly.hpp"
#include "ratknot/invariants.hpp"
#include "ratknot/poset.hpp"

namespace ratknot {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// ---------------------------------------------------------------------------
// Generators

/// Every continued fraction of length 1..max_len with terms from values.
inline std::vector<ContinuedFraction> term_sweep(const std::vector<ContinuedFraction::Term>& values, long max_len) {
  std::vector<ContinuedFraction> out;
  std::vector<std::vector<ContinuedFraction::Term>> layer{{}};
  for (long len = 1; len <= max_len; ++len) {
    std::vector<std::vector<ContinuedFraction::Term>> next;
    for (const auto& prefix : layer) {
      for (auto v : values) {
        auto terms = prefix;
        terms.push_back(v);
        out.emplace_back(terms);
        next.push_back(std::move(terms));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Entries in {+-2, +-4}, lengths 1..max_len (1364 cases for max_len = 5).
inline std::vector<ContinuedFraction> even_sweep(long max_len = 5) { return term_sweep({2, -2, 4, -4}, max_len); }

/// Seeded random even continued fractions: length uniform in 1..max_len,
/// |b_i| uniform in {2, 4, .., max_abs}, independent signs.  The draws use
/// plain modular reduction of mt19937_64 output so the cases do not depend
/// on the standard library's distribution implementation.
inline std::vector<ContinuedFraction> random_even_cfs(std::size_t count, std::uint64_t seed, long max_len = 8, long max_abs = 8) {
  std::mt19937_64 rng(seed);
  const std::uint64_t half = static_cast<std::uint64_t>(max_abs / 2);
  std::vector<ContinuedFraction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long n = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_len));
    std::vector<ContinuedFraction::Term> terms;
    for (long k = 0; k < n; ++k) {
      auto b = static_cast<ContinuedFraction::Term>(2 * (1 + rng() % half));
      if (rng() % 2) b = -b;
      terms.push_back(b);
    }
    out.emplace_back(std::move(terms));
  }
  return out;
}

/// Coprime p/q with 2 <= p <= max_num and -p <= q <= p.
inline std::vector<ExtendedRational> coprime_fractions(long max_num) {
  std::vector<ExtendedRational> out;
  for (long p = 2; p <= max_num; ++p) {
    for (long q = -p; q <= p; ++q) {
      if (q != 0 && gcd_abs(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

/// A fraction with one of its expansions.
struct Expansion {
  ExtendedRational value;
  ContinuedFraction cf;
  bool even = false;
};

/// The positive expansion (q > 0) and the even expansion (p or q even) of
/// every fraction from coprime_fractions(max_num).
inline std::vector<Expansion> expansions(long max_num) {
  std::vector<Expansion> out;
  for (const auto& r : coprime_fractions(max_num)) {
    if (r.q() > 0) out.push_back({r, positive_cf(r), false});
    if (is_even(r.p()) || is_even(r.q())) out.push_back({r, even_cf(r), true});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite runner

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  ///< empty when every case passed
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

/// A check returns a description of the failure, or nothing on success.
using CheckResult = std::optional<std::string>;

/// Runs check over every case on `jobs` threads.  The reported failure is
/// the one with the lowest case index, so output does not depend on timing.
template <class Case, class Check>
SuiteReport run_suite(std::string name, const std::vector<Case>& cases, Check check, unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = check(cases[i]);
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  if (jobs <= 1 || cases.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  SuiteReport report;
  report.name = std::move(name);
  report.cases = cases.size();
  for (const auto& r : results) {
    if (!r) continue;
    if (report.failures++ == 0) report.first_failure = *r;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Individual checks

namespace checks {

inline std::string show(const ContinuedFraction& cf) { return cf.to_string(); }

inline CheckResult theorem_matches_oracle(const ContinuedFraction& cf) {
  FieldElem a = homfly_theorem(cf), b = homfly_oracle(cf);
  if (a == b) return std::nullopt;
  return show(cf) + ": theorem " + a.to_string() + " != oracle " + b.to_string();
}

inline CheckResult recursion_matches_brute(const Expansion& x) {
  MultiPoly rec = f_poly_recursive(x.cf);
  MultiPoly brute = f_poly_brute(poset_from_cf(x.cf));
  if (rec == brute) return std::nullopt;
  return show(x.cf) + ": recursion " + format_fpoly(rec) + " != brute force " + format_fpoly(brute);
}

/// Q[c] has the orientation sequence of Q(p/q), or of Q(p/(q+p)) when q < 0.
inline CheckResult poset_matches_rational(const Expansion& x) {
  const ExtendedRational& r = x.value;
  PathPoset expected = r.q() > 0 ? poset_from_rational(r) : poset_from_rational(ExtendedRational(r.p(), r.q() + r.p()));
  PathPoset got = poset_from_cf(x.cf);
  if (oriented_equal(got, expected)) return std::nullopt;
  return show(x.cf) + " = " + r.to_string() + ": orientation sequences differ";
}

inline CheckResult numerator_count(const Expansion& x) {
  MultiPoly f = f_poly_recursive(x.cf);
  Integer at_one = evaluate_at_ones(f);
  for (const auto& [e, c] : f.terms()) {
    if (c != 1) return show(x.cf) + ": coefficient " + c.get_str() + " in the final F-polynomial";
    for (int k : e) {
      if (k != 0 && k != 1) return show(x.cf) + ": exponent " + std::to_string(k) + " in the final F-polynomial";
    }
  }
  if (at_one != x.value.p()) return show(x.cf) + ": F(1) = " + at_one.get_str() + " but p = " + x.value.p().get_str();
  if (count_order_ideals(poset_from_cf(x.cf)) != x.value.p()) return show(x.cf) + ": ideal count differs from p";
  return std::nullopt;
}

inline CheckResult corollary_and_symmetry(const ContinuedFraction& cf) {
  TPoly via_f = alexander_via_corollary(cf);
  TPoly direct = alexander(eval_cf(cf));
  if (via_f != direct) return show(cf) + ": corollary " + via_f.to_string() + " != " + direct.to_string();
  if (!unit_equivalent(direct, direct.mirror())) return show(cf) + ": Alexander polynomial " + direct.to_string() + " is not symmetric";
  return std::nullopt;
}

inline CheckResult extension_identity(const ContinuedFraction& cf) {
  const long n = cf.length();
  auto terms = cf.terms();
  terms.back() += cf[n] > 0 ? 2 : -2;
  const ContinuedFraction extended(terms);
  const auto prefixes = homfly_oracle_prefixes(cf);
  const FieldElem& p0 = prefixes.back();
  const FieldElem& p1 = prefixes[prefixes.size() - 2];
  const int t = cf.type(n);
  const FieldElem l = FieldElem::l();
  const FieldElem z = FieldElem::s() - FieldElem::monomial(0, -1);
  FieldElem expected = l.pow(-2 * t) * p0 + FieldElem(t) * l.pow(-t) * z * p1;
  FieldElem got = homfly_oracle(extended);
  if (got == expected) return std::nullopt;
  return show(extended) + ": oracle " + got.to_string() + " != extension identity " + expected.to_string();
}

/// Segment closed forms, the mu/nu coefficients against products taken over
/// label sets, and F~ against an independent specialization of F.
/// With brute = true F is enumerated from order ideals; otherwise the
/// four-case recursion is evaluated directly on the specialized values.
inline CheckResult specialization_identities(const ContinuedFraction& cf, bool brute) {
  const long n = cf.length();
  const auto spec = Specialization::homfly(cf[1] > 0 ? 1 : -1);
  const FieldElem one_minus_qinv = FieldElem(1) - FieldElem::monomial(0, -2);
  const FieldElem l2 = FieldElem::monomial(2, 0);
  auto phi = [&](int label) { return spec.value(label); };

  for (long m = 2; m <= n; ++m) {
    const long b = std::labs(cf[m]);
    FieldElem sum = specialize_f(f_segment(cf, m), spec);
    if (sum != one_minus_qinv * bracket(static_cast<unsigned>(b / 2), l2)) {
      return show(cf) + ": specialized F(S_" + std::to_string(m) + ") = " + sum.to_string();
    }
    const PathPoset poset = poset_from_cf(cf);
    FieldElem prod(1);
    for (int label : poset.segments[static_cast<std::size_t>(m - 1)].members) prod *= phi(label);
    if (prod != -(FieldElem::l().pow(b - 2) * FieldElem::monomial(0, -2))) {
      return show(cf) + ": product over S_" + std::to_string(m) + " = " + prod.to_string();
    }
  }
  if (cf[1] > 0) {
    FieldElem prod(1);
    for (long j = 1; j < cf[1]; ++j) prod *= phi(static_cast<int>(j));
    if (prod != FieldElem::l().pow(cf[1]) * FieldElem::w().inverse()) return show(cf) + ": product over S_1 = " + prod.to_string();
  }

  // mu and nu from label sets: the labels of Q[b_1..b_k] minus those of Q[b_1..b_{k-2}].
  for (long k = 2; k <= n; ++k) {
    const PathPoset q0 = poset_from_cf(cf.prefix(k));
    const PathPoset q1 = poset_from_cf(cf.prefix(k - 1));
    const PathPoset q2 = poset_from_cf(cf.prefix(k - 2));
    auto product_over = [&](const PathPoset& big, const PathPoset& small) {
      std::set<int> drop(small.labels.begin(), small.labels.end());
      FieldElem prod(1);
      for (int label : big.labels) {
        if (!drop.count(label)) prod *= phi(label);
      }
      return prod;
    };
    const int prev = cf.type(k - 1), cur = cf.type(k);
    FieldElem mu, nu(1);
    if (prev == -1 && cur == -1) {
      FieldElem prod(1);
      for (int label : q0.segments[static_cast<std::size_t>(k - 1)].members) prod *= phi(label);
      mu = -prod;
    } else if (prev == 1 && cur == -1) {
      mu = product_over(q0, q2);
    } else if (prev == -1 && cur == 1) {
      mu = FieldElem(1);
      nu = phi(static_cast<int>(cf.ell(k - 1)));
    } else {
      mu = -product_over(q1, q2);
    }
    auto table = recursion_coefficients(cf, k);
    if (table.mu != mu || table.nu != nu) {
      return show(cf) + ": step " + std::to_string(k) + " table (" + table.mu.to_string() + ", " + table.nu.to_string() +
             ") != label products (" + mu.to_string() + ", " + nu.to_string() + ")";
    }
  }

  FieldElem tilde = f_tilde_recursive(cf);
  FieldElem reference = brute ? specialize_f(f_poly_brute(poset_from_cf(cf)), spec) : specialize_recursive(cf, spec);
  if (tilde != reference) return show(cf) + ": F~ recursion " + tilde.to_string() + " != " + reference.to_string();
  return std::nullopt;
}

/// Jones from HOMFLY equals the V-specialized F times m at l = t^-1, q = t,
/// and m itself is a signed monomial there.
inline CheckResult jones_consistency(const ContinuedFraction& cf) {
  MFactor m = m_factor(cf);
  if (m.recombine() != m.value) return show(cf) + ": m-factor decomposition does not recombine";
  if (m.e3 < -1 || m.e3 > 1) return show(cf) + ": w exponent " + std::to_string(m.e3);
  FieldElem mv = substitute(m.value, {{"l", FieldElem::monomial(0, -2)}});
  if (!mv.is_unit_monomial()) return show(cf) + ": m at the Jones substitution is " + mv.to_string();
  TPoly expected = TPoly::from_field(mv * specialize_recursive(cf, Specialization::jones()));
  TPoly got = jones_from_homfly(homfly_theorem(cf));
  if (got != expected) return show(cf) + ": Jones " + got.to_string() + " != specialized " + expected.to_string();
  return std::nullopt;
}

/// Expansion round trips, the trailing-one identity, the involution and the link canonical form.
inline CheckResult fraction_identities(const ExtendedRational& r) {
  const std::string name = r.to_string();
  const bool has_even = is_even(r.p()) || is_even(r.q());
  if (has_even && !(eval_cf(even_cf(r)) == r)) return name + ": even expansion does not evaluate back";
  if (r.q() > 0) {
    ContinuedFraction pos = positive_cf(r);
    if (!(eval_cf(pos) == r)) return name + ": positive expansion does not evaluate back";
    auto terms = pos.terms();
    terms.back() -= 1;
    terms.push_back(1);
    if (!(eval_cf(ContinuedFraction(terms)) == r)) return name + ": [.., a_n - 1, 1] differs from [.., a_n]";
  }
  if (r.abs_at_least_one() && r.p() != 1) {
    ExtendedRational s = involution(r);
    const bool s_even = is_even(s.p()) || is_even(s.q());
    // For even p both have an even numerator, so the even half only holds for odd p.
    if (!is_even(r.p()) && has_even == s_even) return name + ": not exactly one of r, involution(r) has an even expansion";
    if ((r.q() > 0) == (s.q() > 0)) return name + ": not exactly one of r, involution(r) has a positive expansion";
  }
  LinkForm form = canonical_link_form(r);
  if (const auto* cf = std::get_if<ContinuedFraction>(&form)) {
    if (!cf->is_even()) return name + ": canonical form is not even";
    ExtendedRational back = eval_cf(*cf);
    if (!link_isotopic_oriented(r, back)) return name + ": canonical form " + cf->to_string() + " indexes a different link";
  }
  return std::nullopt;
}

/// For fixed p, isotopic fractions have equal HOMFLY polynomials.  Knots use
/// the unoriented relation; two-component links use the oriented one.
inline CheckResult isotopy_invariance(long p) {
  std::vector<ExtendedRational> fractions;
  if (p == 0) {
    fractions.emplace_back(0, 1);
  } else if (p == 1) {
    fractions = {ExtendedRational(1, 0), ExtendedRational(1, 1), ExtendedRational(1, -1), ExtendedRational(1, 2)};
  } else {
    for (long q = -2 * p; q <= 2 * p; ++q) {
      if (q != 0 && gcd_abs(p, q) == 1) fractions.emplace_back(p, q);
    }
  }
  std::vector<FieldElem> values;
  for (const auto& r : fractions) values.push_back(homfly(r));
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    for (std::size_t j = i + 1; j < fractions.size(); ++j) {
      const bool related = p % 2 == 1 ? link_isotopic(fractions[i], fractions[j])
                                      : link_isotopic_oriented(fractions[i], fractions[j]);
      if (related && values[i] != values[j]) {
        return fractions[i].to_string() + " and " + fractions[j].to_string() + " are isotopic but have different HOMFLY polynomials";
      }
    }
  }
  return std::nullopt;
}

}  // namespace checks

// ---------------------------------------------------------------------------
// The full run

struct VerifyOptions {
  long max_num = 100;       ///< fractions p/q with p <= max_num
  long sweep_depth = 5;     ///< length bound of the {+-2, +-4} sweep
  std::size_t random_count = 200;
  long random_max_len = 8;
  long random_max_abs = 8;
  long isotopy_max = 25;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

inline std::vector<SuiteReport> run_verification(const VerifyOptions& o,
                                                 const std::function<void(const SuiteReport&)>& on_report = {}) {
  std::vector<SuiteReport> reports;
  auto record = [&](SuiteReport r) {
    if (on_report) on_report(r);
    reports.push_back(std::move(r));
  };
  const auto sweep = even_sweep(o.sweep_depth);
  const auto random = random_even_cfs(o.random_count, o.seed, o.random_max_len, o.random_max_abs);
  auto all = sweep;
  all.insert(all.end(), random.begin(), random.end());
  const auto fractions = coprime_fractions(o.max_num);
  const auto exps = expansions(o.max_num);
  std::vector<long> ps;
  for (long p = 0; p <= o.isotopy_max; ++p) ps.push_back(p);

  record(run_suite("golden F[2,2]", std::vector<int>{0}, [](int) -> CheckResult {
    std::string got = format_fpoly(f_poly_brute(poset_from_cf({2, 2})));
    if (got == "1 + y1 + y3 + y1*y3 + y1*y2*y3") return std::nullopt;
    return "F[2,2] = " + got;
  }));
  record(run_suite("theorem = skein oracle", all, checks::theorem_matches_oracle, o.jobs));
  record(run_suite("F recursion = brute force", exps, checks::recursion_matches_brute, o.jobs));
  record(run_suite("Q[c] = Q(p/q)", exps, checks::poset_matches_rational, o.jobs));
  record(run_suite("F(1) = p", exps, checks::numerator_count, o.jobs));
  record(run_suite("Alexander via F, symmetry", all, checks::corollary_and_symmetry, o.jobs));
  record(run_suite("segment closed forms, mu/nu, F~ (brute)", sweep,
                   [](const ContinuedFraction& cf) { return checks::specialization_identities(cf, true); }, o.jobs));
  record(run_suite("segment closed forms, mu/nu, F~ (recursion)", random,
                   [](const ContinuedFraction& cf) { return checks::specialization_identities(cf, false); }, o.jobs));
  record(run_suite("extension identity", all, checks::extension_identity, o.jobs));
  record(run_suite("Jones specialization, m-factor", all, checks::jones_consistency, o.jobs));
  record(run_suite("expansions and canonical form", fractions, checks::fraction_identities, o.jobs));
  record(run_suite("isotopy invariance", ps, checks::isotopy_invariance, o.jobs));
  return reports;
}

}  // namespace ratknot

#endif  // RATKNOT_VERIFY_HPP
