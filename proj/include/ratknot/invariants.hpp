#ifndef RATKNOT_INVARIANTS_HPP
#define RATKNOT_INVARIANTS_HPP

// HOMFLY, Jones and Alexander polynomials of rational links.

#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include "ratknot/cf.hpp"
#include "ratknot/errors.hpp"
#include "ratknot/field.hpp"
#include "ratknot/fpoly.hpp"

namespace ratknot {

/// value = c0 * l^e1 * q^(e2_doubled/2) * w^e3
struct MFactor {
  FieldElem value;
  int c0 = 1;
  long e1 = 0;
  long e2_doubled = 0;
  int e3 = 0;

  FieldElem recombine() const {
    return FieldElem(c0) * FieldElem::monomial(static_cast<int>(e1), static_cast<int>(e2_doubled)) * FieldElem::w().pow(e3);
  }
};

namespace detail {

inline MFactor m_empty() { return {FieldElem(1), 1, 0, 0, 0}; }

inline MFactor m_degenerate() {
  MFactor m{FieldElem(), -1, -1, -1, 1};
  m.value = m.recombine();
  return m;
}

// m * c * l^a * q^(b/2)
inline MFactor m_scaled(const MFactor& m, int c, long a, long b) {
  MFactor out = m;
  out.c0 *= c;
  out.e1 += a;
  out.e2_doubled += b;
  out.value = FieldElem(c) * FieldElem::monomial(static_cast<int>(a), static_cast<int>(b)) * m.value;
  return out;
}

}  // namespace detail

/// m[b_1..b_n] for an even continued fraction (the degenerate marker allowed).
inline MFactor m_factor(const ContinuedFraction& cf) {
  if (cf.is_degenerate()) return detail::m_degenerate();
  detail::require_even(cf);
  const long n = cf.length();
  // history[k + 1] = m[b_1..b_k], k = -1..n
  std::vector<MFactor> history{detail::m_degenerate(), detail::m_empty()};
  for (long k = 1; k <= n; ++k) {
    const long b = std::labs(cf[k]);
    const int prev = cf.type(k - 1), cur = cf.type(k);
    const MFactor& m1 = history[static_cast<std::size_t>(k)];
    const MFactor& m2 = history[static_cast<std::size_t>(k - 1)];
    if (cur == -1) {
      history.push_back(detail::m_scaled(m1, -1, 1, 1));
    } else if (prev == -1) {
      history.push_back(detail::m_scaled(m2, 1, -b, 0));
    } else {
      history.push_back(detail::m_scaled(m1, 1, 1 - b, 1));
    }
  }
  return history.back();
}

/// P = m * F~
inline FieldElem homfly_theorem(const ContinuedFraction& cf) {
  detail::require_even(cf);
  return m_factor(cf).value * f_tilde_recursive(cf);
}

/// (l - l^-1) / (q^(1/2) - q^(-1/2)), the HOMFLY polynomial of the two-component unlink.
inline FieldElem homfly_two_unlink() {
  return (FieldElem::l() - FieldElem::monomial(-1, 0)) / (FieldElem::s() - FieldElem::monomial(0, -1));
}

/// HOMFLY values of every prefix, index k + 1 for P[b_1..b_k], k = -1..n,
/// from the two-term skein recursion.
inline std::vector<FieldElem> homfly_oracle_prefixes(const ContinuedFraction& cf) {
  detail::require_even(cf);
  const long n = cf.length();
  const FieldElem l = FieldElem::l();
  const FieldElem z = FieldElem::s() - FieldElem::monomial(0, -1);
  const FieldElem l_minus_linv = l - l.inverse();
  std::vector<FieldElem> p{homfly_two_unlink(), FieldElem(1)};
  for (long k = 1; k <= n; ++k) {
    const long e = -cf.type(k) * std::labs(cf[k]);
    const FieldElem le = l.pow(e);
    const FieldElem& p1 = p[static_cast<std::size_t>(k)];
    const FieldElem& p2 = p[static_cast<std::size_t>(k - 1)];
    p.push_back(le * p2 + z * ((FieldElem(1) - le) / l_minus_linv) * p1);
  }
  return p;
}

inline FieldElem homfly_oracle(const ContinuedFraction& cf) {
  if (cf.is_degenerate()) return homfly_two_unlink();
  return homfly_oracle_prefixes(cf).back();
}

enum class Method { Theorem, Oracle };

inline FieldElem homfly_of_cf(const ContinuedFraction& cf, Method method) {
  return method == Method::Theorem ? homfly_theorem(cf) : homfly_oracle(cf);
}

/// HOMFLY polynomial of C(r), through the canonical even continued fraction.
inline FieldElem homfly(const ExtendedRational& r, Method method = Method::Theorem) {
  LinkForm form = canonical_link_form(r);
  if (std::holds_alternative<UnknotMarker>(form)) return FieldElem(1);
  if (std::holds_alternative<TwoUnlinkMarker>(form)) return homfly_two_unlink();
  return homfly_of_cf(std::get<ContinuedFraction>(form), method);
}

/// l = t^-1, q = t, written in s = t^(1/2).
inline TPoly jones_from_homfly(const FieldElem& p) {
  return TPoly::from_field(substitute(p, {{"l", FieldElem::monomial(0, -2)}}));
}

/// l = 1, q = t, written in s = t^(1/2).
inline TPoly alexander_from_homfly(const FieldElem& p) {
  return TPoly::from_field(substitute(p, {{"l", FieldElem(1)}}));
}

inline TPoly jones(const ExtendedRational& r, Method method = Method::Theorem) {
  return jones_from_homfly(homfly(r, method));
}

inline TPoly alexander(const ExtendedRational& r, Method method = Method::Theorem) {
  return alexander_from_homfly(homfly(r, method));
}

/// Alexander polynomial as sgn(c0) t^e0 phi_A(F), with c0 t^e0 = m at l = 1, q = t.
inline TPoly alexander_via_corollary(const ContinuedFraction& cf) {
  const MFactor m = m_factor(cf);
  // w -> -t at l = 1, q = t
  const int sign = m.c0 * (m.e3 % 2 != 0 ? -1 : 1);
  const TPoly leading = TPoly::monomial(m.e2_doubled + 2L * m.e3, sign);
  return leading * alexander_specialized_f(cf);
}

}  // namespace ratknot

#endif  // RATKNOT_INVARIANTS_HPP
