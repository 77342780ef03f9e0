#ifndef RATKNOT_INTEGER_HPP
#define RATKNOT_INTEGER_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "ratknot/errors.hpp"

namespace ratknot {

/// Arbitrary-precision integer used for every numerator, denominator and coefficient.
using Integer = mpz_class;

inline int sign(const Integer& v) { return sgn(v); }

inline Integer gcd_abs(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// a / b, requiring that b divides a.
inline Integer divexact(const Integer& a, const Integer& b) {
  if (b == 0) throw DivisionByZero("integer division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw InternalError("inexact integer division");
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Floor division (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least nonnegative residue of a modulo |m|; m must be nonzero.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::size_t bit_length(const Integer& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline bool is_even(const Integer& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

inline Integer parse_integer(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == start) throw ParseError("expected an integer, got '" + text + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("expected an integer, got '" + text + "'");
  }
  return Integer(s, 10);
}

}  // namespace ratknot

#endif  // RATKNOT_INTEGER_HPP
