#ifndef RATKNOT_UPOLY_HPP
#define RATKNOT_UPOLY_HPP

// Dense univariate polynomials over a GCD domain, with a primitive
// pseudo-remainder GCD.  Nesting UPoly<UPoly<Integer>> gives the bivariate
// ring used to reduce fractions in the (l, s) field.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ratknot/errors.hpp"
#include "ratknot/integer.hpp"

namespace ratknot {

template <class R>
class UPoly;

// Coefficient-ring operations for Integer.
inline bool ring_is_zero(const Integer& a) { return a == 0; }
inline bool ring_is_one(const Integer& a) { return a == 1; }
inline Integer ring_gcd(const Integer& a, const Integer& b) { return gcd_abs(a, b); }
inline Integer ring_divexact(const Integer& a, const Integer& b) { return divexact(a, b); }
/// a / b when b divides a.
inline std::optional<Integer> ring_try_divexact(const Integer& a, const Integer& b) {
  if (b == 0 || mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline std::size_t ring_size(const Integer& a) { return mpz_sizeinbase(a.get_mpz_t(), 2); }
inline Integer ring_abs(const Integer& a) { return abs(a); }
/// Sign of the unit normal form.
inline int ring_unit_sign(const Integer& a) { return sgn(a); }

template <class R>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UPoly(R constant) {
    if (!ring_is_zero(constant)) c_.push_back(std::move(constant));
  }

  /// coefficient * x^degree
  static UPoly monomial(R coefficient, std::size_t degree) {
    std::vector<R> c(degree + 1);
    c[degree] = std::move(coefficient);
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const R& lead() const { return c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
  /// Lowest index with a nonzero coefficient.
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && ring_is_zero(c_[v])) ++v;
    return v;
  }

  UPoly shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    return UPoly(std::vector<R>(c_.begin() + static_cast<long>(k), c_.end()));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<R> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (ring_is_zero(b.c_[j])) continue;
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return UPoly(std::move(c));
  }
  /// Multiplication by a coefficient-ring scalar.
  UPoly scaled(const R& k) const {
    std::vector<R> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * k;
    return UPoly(std::move(c));
  }
  UPoly divided_exactly_by_scalar(const R& k) const {
    std::vector<R> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring_divexact(c_[i], k);
    return UPoly(std::move(c));
  }

  /// gcd of the coefficients.
  R content() const {
    if (c_.empty()) return R();
    // Start from the smallest coefficient; stop as soon as the gcd is trivial.
    std::size_t start = 0;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (!ring_is_zero(c_[i]) && (ring_is_zero(c_[start]) || ring_size(c_[i]) < ring_size(c_[start]))) start = i;
    }
    R g = ring_gcd(c_[start], R());
    for (std::size_t i = 0; i < c_.size() && !ring_is_one(g); ++i) {
      if (i == start || ring_is_zero(c_[i])) continue;
      g = ring_gcd(g, c_[i]);
    }
    return g;
  }

  UPoly primitive_part() const {
    if (is_zero()) return *this;
    R c = content();
    UPoly out = ring_is_one(c) ? *this : divided_exactly_by_scalar(c);
    if (ring_unit_sign(out.lead()) < 0) out = -out;
    return out;
  }

  /// A remainder of a modulo b, computed for gcd purposes: each step either
  /// divides exactly by lc(b) or pseudo-divides, and factors of the
  /// coefficient ring that a primitive b cannot share are stripped.  The
  /// result equals prem(a, b) up to a factor coprime to every primitive
  /// divisor of b.
  friend UPoly gcd_remainder(UPoly a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("remainder by zero polynomial");
    const R& lb = b.lead();
    const long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
      const std::size_t shift = static_cast<std::size_t>(a.degree() - db);
      R la = a.lead();
      if (auto factor = ring_try_divexact(la, lb)) {
        for (long i = 0; i <= db; ++i) {
          auto& slot = a.c_[shift + static_cast<std::size_t>(i)];
          slot = slot - *factor * b.c_[static_cast<std::size_t>(i)];
        }
      } else {
        for (auto& x : a.c_) x = x * lb;
        for (long i = 0; i <= db; ++i) {
          auto& slot = a.c_[shift + static_cast<std::size_t>(i)];
          slot = slot - la * b.c_[static_cast<std::size_t>(i)];
        }
      }
      a.trim();
      a.strip_common_factors();
    }
    return a;
  }

  /// a / b when b divides a exactly.
  friend std::optional<UPoly> try_divexact(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return UPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    UPoly rem = a;
    std::vector<R> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const long db = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
      const std::size_t shift = static_cast<std::size_t>(rem.degree() - db);
      auto factor = ring_try_divexact(rem.lead(), b.lead());
      if (!factor) return std::nullopt;
      for (long i = 0; i <= db; ++i) {
        auto& slot = rem.c_[shift + static_cast<std::size_t>(i)];
        slot = slot - *factor * b.c_[static_cast<std::size_t>(i)];
      }
      q[shift] = std::move(*factor);
      rem.trim();
    }
    if (!rem.is_zero()) return std::nullopt;
    return UPoly(std::move(q));
  }

  /// Exact division; throws InternalError when b does not divide a.
  friend UPoly divexact(const UPoly& a, const UPoly& b) {
    auto q = try_divexact(a, b);
    if (!q) throw InternalError("inexact polynomial division");
    return std::move(*q);
  }

  /// Greatest common divisor, normalized to a positive unit sign.
  friend UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.primitive_part().scaled(ring_abs(b.is_zero() ? R() : b.content()));
    if (b.is_zero()) return a.primitive_part().scaled(ring_abs(a.content()));
    R ca = a.content(), cb = b.content();
    R c = ring_gcd(ca, cb);
    UPoly x = ring_is_one(ca) ? a : a.divided_exactly_by_scalar(ca);
    UPoly y = ring_is_one(cb) ? b : b.divided_exactly_by_scalar(cb);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
      if (y.degree() == 0) return UPoly(c);
      UPoly r = gcd_remainder(std::move(x), y);
      x = std::move(y);
      y = r.is_zero() ? UPoly() : r.primitive_part();
    }
    return x.primitive_part().scaled(c);
  }

  friend std::size_t ring_size(const UPoly& a) { return a.c_.size(); }
  friend bool ring_is_zero(const UPoly& a) { return a.is_zero(); }
  friend bool ring_is_one(const UPoly& a) { return a.c_.size() == 1 && ring_is_one(a.c_[0]); }
  friend UPoly ring_gcd(const UPoly& a, const UPoly& b) { return gcd(a, b); }
  friend UPoly ring_divexact(const UPoly& a, const UPoly& b) { return divexact(a, b); }
  friend UPoly ring_abs(const UPoly& a) { return ring_unit_sign(a) < 0 ? -a : a; }
  friend int ring_unit_sign(const UPoly& a) { return a.is_zero() ? 0 : ring_unit_sign(a.lead()); }
  friend std::optional<UPoly> ring_try_divexact(const UPoly& a, const UPoly& b) { return try_divexact(a, b); }

 private:
  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

  // Removes factors that cannot belong to a gcd with a polynomial that has
  // no such factors: the power of x dividing every coefficient of the
  // coefficient ring, and the integer content.
  void strip_common_factors();

  std::vector<R> c_;
};

namespace detail {

template <class R>
struct StripCommon {
  static void apply(std::vector<R>&) {}
};

// Coefficients in Z[x]: divide out the common x-power and integer content.
template <>
struct StripCommon<UPoly<Integer>> {
  static void apply(std::vector<UPoly<Integer>>& c) {
    std::size_t v = static_cast<std::size_t>(-1);
    Integer g = 0;
    for (const auto& x : c) {
      if (x.is_zero()) continue;
      v = std::min(v, x.valuation());
      for (const auto& k : x.coeffs()) {
        if (g == 1) break;
        if (k != 0) g = gcd_abs(g, k);
      }
    }
    if (v == static_cast<std::size_t>(-1)) return;
    if (v == 0 && g == 1) return;
    for (auto& x : c) {
      if (x.is_zero()) continue;
      UPoly<Integer> y = x.shifted_down(v);
      if (g != 1) y = y.divided_exactly_by_scalar(g);
      x = std::move(y);
    }
  }
};

// Integer coefficients: divide out the content.
template <>
struct StripCommon<Integer> {
  static void apply(std::vector<Integer>& c) {
    Integer g = 0;
    for (const auto& k : c) {
      if (g == 1) return;
      if (k != 0) g = gcd_abs(g, k);
    }
    if (g == 0 || g == 1) return;
    for (auto& k : c) k = divexact(k, g);
  }
};

}  // namespace detail

template <class R>
void UPoly<R>::strip_common_factors() {
  detail::StripCommon<R>::apply(c_);
}

}  // namespace ratknot

#endif  // RATKNOT_UPOLY_HPP
