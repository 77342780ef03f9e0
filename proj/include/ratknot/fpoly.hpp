#ifndef RATKNOT_FPOLY_HPP
#define RATKNOT_FPOLY_HPP

// F-polynomials of labeled path posets and their specializations.

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ratknot/cf.hpp"
#include "ratknot/errors.hpp"
#include "ratknot/field.hpp"
#include "ratknot/multipoly.hpp"
#include "ratknot/poset.hpp"

namespace ratknot {

/// y1 .. yN
inline std::vector<std::string> y_variables(int count) {
  std::vector<std::string> vars;
  for (int i = 1; i <= count; ++i) vars.push_back("y" + std::to_string(i));
  return vars;
}

/// Largest label that can occur in Q[c]: l_n - 1.
inline int fpoly_arity(const ContinuedFraction& cf) {
  return cf.length() <= 0 ? 0 : static_cast<int>(cf.ell(cf.length()) - 1);
}

namespace detail {

inline MultiPoly ideal_sum(const std::vector<OrderIdeal>& ideals, int arity) {
  MultiPoly f(y_variables(arity));
  for (const auto& ideal : ideals) {
    Exponents e(static_cast<std::size_t>(arity), 0);
    for (int label : ideal.members) e[static_cast<std::size_t>(label - 1)] = 1;
    f.add_term(std::move(e), 1);
  }
  return f;
}

}  // namespace detail

/// Sum over order ideals of the product of their y variables.
inline MultiPoly f_poly_brute(const PathPoset& poset, std::size_t cap = kDefaultIdealCap) {
  return detail::ideal_sum(order_ideals(poset, cap), poset.max_label());
}

inline MultiPoly f_poly_brute(const HassePoset& poset) {
  int arity = poset.labels.empty() ? 0 : *std::max_element(poset.labels.begin(), poset.labels.end());
  return detail::ideal_sum(order_ideals(poset), arity);
}

/// F(S_m) = sum_{k=0}^{|c_m|-1} prod_{j<=k} y_{lambda_m(j)}, over the variables of Q[c].
inline MultiPoly f_segment(const ContinuedFraction& cf, long m) {
  if (!cf.is_poset_valid()) throw InvalidCF("continued fraction " + cf.to_string() + " does not define a path poset");
  if (m < 1 || m > cf.length()) {
    throw IndexError("segment " + std::to_string(m) + " outside 1.." + std::to_string(cf.length()));
  }
  return detail::ideal_sum(segment_ideals(cf, m), fpoly_arity(cf));
}

/// Evaluates the four-case F-polynomial recursion in any commutative ring,
/// with y(label) giving the value of y_label.  With y_label itself this is
/// the F-polynomial; with specialized values it is the specialization.
template <class Ring, class YValue>
Ring f_recursion(const ContinuedFraction& cf, YValue&& y, const Ring& one) {
  if (!cf.is_poset_valid()) throw InvalidCF("continued fraction " + cf.to_string() + " does not define a path poset");
  const long n = cf.length();
  if (n == 0) return one;
  const auto ell = cf.partial_sums();

  auto lambda = [&](long m, long j) {
    return static_cast<int>(cf.type(m) == 1 ? ell[m - 1] + j : ell[m] - j);
  };
  auto segment_sum = [&](long m) {
    Ring sum = one, prod = one;
    const long size = std::labs(cf[m]);
    for (long j = 1; j < size; ++j) {
      prod = prod * y(lambda(m, j));
      sum = sum + prod;
    }
    return sum;
  };
  auto segment_product = [&](long m) {
    Ring prod = one;
    for (long j = 1; j < std::labs(cf[m]); ++j) prod = prod * y(lambda(m, j));
    return prod;
  };
  // Connecting vertex l_{m-1} between S_{m-1} and S_m, if m >= 2 and it exists.
  auto connector_before = [&](long m) {
    if (m >= 2 && cf.type(m - 1) != cf.type(m)) return y(static_cast<int>(ell[m - 1]));
    return one;
  };

  Ring f2 = one;               // F[c_1..c_{k-2}]
  Ring f1 = segment_sum(1);    // F[c_1..c_{k-1}]
  for (long k = 2; k <= n; ++k) {
    const int prev = cf.type(k - 1), cur = cf.type(k);
    Ring f0;
    if (prev == -1 && cur == -1) {
      f0 = -(f2 * segment_product(k)) + f1 * segment_sum(k);
    } else if (prev == 1 && cur == -1) {
      Ring outside = connector_before(k - 1) * segment_product(k - 1) * y(static_cast<int>(ell[k - 1])) * segment_product(k);
      f0 = f2 * outside + f1 * segment_sum(k);
    } else if (prev == -1 && cur == 1) {
      f0 = f2 + f1 * segment_sum(k) * y(static_cast<int>(ell[k - 1]));
    } else {
      Ring outside = connector_before(k - 1) * segment_product(k - 1);
      f0 = -(f2 * outside) + f1 * segment_sum(k);
    }
    f2 = std::move(f1);
    f1 = std::move(f0);
  }
  return f1;
}

inline MultiPoly f_poly_recursive(const ContinuedFraction& cf) {
  const auto vars = y_variables(fpoly_arity(cf));
  const MultiPoly one = MultiPoly::constant(vars, 1);
  std::vector<MultiPoly> ys;
  for (const auto& name : vars) ys.push_back(MultiPoly::variable(vars, name));
  return f_recursion(cf, [&](int label) -> const MultiPoly& { return ys[static_cast<std::size_t>(label - 1)]; }, one);
}

/// Ascending total degree, then lexicographic on the sorted index lists:
/// `1 + y1 + y3 + y1*y3 + y1*y2*y3`.
inline std::string format_fpoly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  struct Row {
    std::vector<std::pair<std::size_t, int>> factors;  // (index, exponent)
    long degree = 0;
    Integer coef;
  };
  std::vector<Row> rows;
  for (const auto& [e, c] : f.terms()) {
    Row row;
    row.coef = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      row.factors.emplace_back(i, e[i]);
      row.degree += e[i];
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.factors < b.factors;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& row : rows) {
    Integer mag = abs(row.coef);
    if (first) {
      if (row.coef < 0) os << '-';
    } else {
      os << (row.coef < 0 ? " - " : " + ");
    }
    first = false;
    if (row.factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    for (std::size_t k = 0; k < row.factors.size(); ++k) {
      if (k) os << '*';
      os << f.variables()[row.factors[k].first];
      if (row.factors[k].second != 1) os << '^' << row.factors[k].second;
    }
  }
  return os.str();
}

/// Value of F at y = 1: the number of order ideals for a final F-polynomial.
inline Integer evaluate_at_ones(const MultiPoly& f) {
  Integer total = 0;
  for (const auto& [e, c] : f.terms()) total += c;
  return total;
}

// ---------------------------------------------------------------------------
// Specializations

/// phi_P (needs sgn b_1), phi_A, or phi_P followed by l = t^-1, q = t.
/// A and V values are expressed in s = t^(1/2).
struct Specialization {
  enum class Kind { P, A, V };
  Kind kind = Kind::P;
  int b1_sign = 1;

  static Specialization homfly(int b1_sign) { return {Kind::P, b1_sign}; }
  static Specialization alexander() { return {Kind::A, 1}; }
  static Specialization jones() { return {Kind::V, 1}; }

  FieldElem value(int label) const {
    switch (kind) {
      case Kind::P:
        if (label == 1) {
          return b1_sign > 0 ? FieldElem::monomial(2, 0) * FieldElem::w().inverse()
                             : FieldElem::monomial(0, -4) * FieldElem::w();
        }
        return label % 2 == 0 ? FieldElem::monomial(2, 2, -1) : FieldElem::monomial(0, -2, -1);
      case Kind::A:
        return label % 2 == 0 ? FieldElem::monomial(0, 2, -1) : FieldElem::monomial(0, -2, -1);
      case Kind::V:
        return label == 1 ? FieldElem::monomial(0, -4) : FieldElem::monomial(0, -2, -1);
    }
    throw InternalError("unknown specialization");
  }
};

/// Substitutes the specialization into an F-polynomial over y1..yN.
inline FieldElem specialize_f(const MultiPoly& f, const Specialization& spec) {
  Assignment a;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const std::string& name = f.variables()[i];
    if (name.size() < 2 || name[0] != 'y') throw DomainError("expected variables y1, y2, ..., got '" + name + "'");
    a.emplace(name, spec.value(std::stoi(name.substr(1))));
  }
  return substitute(f, a);
}

/// Specialization of F[cf] by running the four-case recursion on the specialized values.
inline FieldElem specialize_recursive(const ContinuedFraction& cf, const Specialization& spec) {
  std::vector<FieldElem> cache(static_cast<std::size_t>(fpoly_arity(cf) + 1));
  for (std::size_t i = 1; i < cache.size(); ++i) cache[i] = spec.value(static_cast<int>(i));
  return f_recursion(cf, [&](int label) -> const FieldElem& { return cache[static_cast<std::size_t>(label)]; }, FieldElem(1));
}

/// phi_A(F[cf]) as a Laurent polynomial in t^(1/2), via the recursion.
inline TPoly alexander_specialized_f(const ContinuedFraction& cf) {
  const TPoly odd = TPoly::monomial(-2, -1), even = TPoly::monomial(2, -1);
  return f_recursion(cf, [&](int label) -> const TPoly& { return label % 2 == 0 ? even : odd; }, TPoly::monomial(0));
}

// ---------------------------------------------------------------------------
// The specialized recursion

namespace detail {

inline void require_even(const ContinuedFraction& cf) {
  if (cf.is_degenerate() || !cf.is_even()) throw InvalidCF("expected an even continued fraction, got " + cf.to_string());
}

inline long abs_term(const ContinuedFraction& cf, long i) { return std::labs(cf[i]); }

}  // namespace detail

struct RecursionCoefficients {
  FieldElem mu;
  FieldElem nu;
};

/// mu and nu for F~[b_1..b_k] in terms of F~[b_1..b_{k-2}] and F~[b_1..b_{k-1}], k >= 2.
inline RecursionCoefficients recursion_coefficients(const ContinuedFraction& cf, long k) {
  detail::require_even(cf);
  if (k < 2 || k > cf.length()) throw IndexError("recursion step " + std::to_string(k) + " outside 2.." + std::to_string(cf.length()));
  const FieldElem l = FieldElem::l();
  const FieldElem qinv = FieldElem::monomial(0, -2);
  const FieldElem winv = FieldElem::w().inverse();
  const long bk = detail::abs_term(cf, k), bk1 = detail::abs_term(cf, k - 1);
  const int prev = cf.type(k - 1), cur = cf.type(k);
  const int before = k >= 3 ? cf.type(k - 2) : 0;  // unused when k = 2

  if (cur == -1) {
    if (prev == -1) return {l.pow(bk - 2) * qinv, FieldElem(1)};
    if (k == 2) return {l.pow(bk + bk1) * winv, FieldElem(1)};
    if (before == -1) return {l.pow(bk + bk1), FieldElem(1)};
    return {-(l.pow(bk + bk1 - 2) * qinv), FieldElem(1)};
  }
  if (prev == -1) return {FieldElem(1), FieldElem::monomial(2, 2, -1)};
  if (k == 2) return {-(l.pow(bk1) * winv), FieldElem(1)};
  if (before == -1) return {-l.pow(bk1), FieldElem(1)};
  return {l.pow(bk1 - 2) * qinv, FieldElem(1)};
}

/// F~[b_1..b_n] from the mu/nu recursion; the base F~[b_1] specializes the closed form of S_1.
inline FieldElem f_tilde_recursive(const ContinuedFraction& cf) {
  detail::require_even(cf);
  const long n = cf.length();
  if (n == 0) return FieldElem(1);
  const auto spec = Specialization::homfly(cf[1] > 0 ? 1 : -1);
  const FieldElem one_minus_qinv = FieldElem(1) - FieldElem::monomial(0, -2);
  const FieldElem l2 = FieldElem::monomial(2, 0);

  FieldElem f2(1);
  FieldElem f1 = specialize_f(f_segment(cf.prefix(1), 1), spec);
  for (long k = 2; k <= n; ++k) {
    auto [mu, nu] = recursion_coefficients(cf, k);
    FieldElem segment = one_minus_qinv * bracket(static_cast<unsigned>(detail::abs_term(cf, k) / 2), l2);
    FieldElem f0 = mu * f2 + nu * segment * f1;
    f2 = std::move(f1);
    f1 = std::move(f0);
  }
  return f1;
}

}  // namespace ratknot

#endif  // RATKNOT_FPOLY_HPP
