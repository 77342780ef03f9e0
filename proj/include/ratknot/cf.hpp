#ifndef RATKNOT_CF_HPP
#define RATKNOT_CF_HPP

// Extended rationals, continued fractions and the rational-link canonical form.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ratknot/errors.hpp"
#include "ratknot/integer.hpp"

namespace ratknot {

/// p/q with p >= 0 and gcd(p, q) = 1.  Infinity is 1/0 and zero is 0/1;
/// negative values carry their sign in q.
class ExtendedRational {
 public:
  ExtendedRational() : p_(0), q_(1) {}

  /// Reduces num/den to canonical form.  0/0 is rejected.
  ExtendedRational(const Integer& num, const Integer& den) { assign(num, den); }
  ExtendedRational(long num, long den) { assign(Integer(num), Integer(den)); }

  /// Builds p/q without reduction, throwing NotCoprime when gcd(p, q) != 1.
  static ExtendedRational coprime(const Integer& p, const Integer& q) {
    if (gcd_abs(p, q) != 1) {
      throw NotCoprime("fraction " + p.get_str() + "/" + q.get_str() + " is not in lowest terms");
    }
    return ExtendedRational(p, q);
  }

  static ExtendedRational infinity() { return ExtendedRational(Integer(1), Integer(0)); }
  static ExtendedRational zero() { return ExtendedRational(); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  bool is_infinity() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0; }
  int sign() const { return p_ == 0 ? 0 : (q_ < 0 ? -1 : 1); }

  /// Exact comparison against an integer; infinity compares greater than everything.
  bool at_least(const Integer& k) const {
    if (is_infinity()) return true;
    if (q_ > 0) return p_ >= k * q_;
    return p_ <= k * q_;  // q < 0: p/q >= k  <=>  p <= k q
  }

  /// |p/q| >= 1 (true for infinity).
  bool abs_at_least_one() const { return is_infinity() || p_ >= abs(q_); }

  std::string to_string() const {
    if (q_ == 1) return p_.get_str();
    return p_.get_str() + "/" + q_.get_str();
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
    return os << r.to_string();
  }

 private:
  void assign(Integer num, Integer den) {
    if (num == 0 && den == 0) throw DomainError("0/0 is not an extended rational");
    if (den == 0) {
      p_ = 1;
      q_ = 0;
      return;
    }
    if (num == 0) {
      p_ = 0;
      q_ = 1;
      return;
    }
    Integer g = gcd_abs(num, den);
    num /= g;
    den /= g;
    if (num < 0) {
      num = -num;
      den = -den;
    }
    p_ = std::move(num);
    q_ = std::move(den);
  }

  Integer p_;
  Integer q_;
};

/// Parses "[-]digits/[-]digits" or a bare integer.  The result is reduced;
/// use parse_coprime_fraction when the caller must reject non-reduced input.
inline std::pair<Integer, Integer> parse_fraction_parts(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return {parse_integer(text), Integer(1)};
  if (text.find('/', slash + 1) != std::string::npos) {
    throw ParseError("malformed fraction '" + text + "'");
  }
  return {parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1))};
}

inline ExtendedRational parse_fraction(const std::string& text) {
  auto [num, den] = parse_fraction_parts(text);
  if (num == 0 && den == 0) throw ParseError("0/0 is not a fraction");
  return ExtendedRational(num, den);
}

inline ExtendedRational parse_coprime_fraction(const std::string& text) {
  auto [num, den] = parse_fraction_parts(text);
  if (num < 0) {
    num = -num;
    den = -den;
  }
  return ExtendedRational::coprime(num, den);
}

/// A finite integer sequence [c_1, ..., c_n], or the degenerate n = -1 marker.
class ContinuedFraction {
 public:
  using Term = std::int64_t;

  ContinuedFraction() = default;
  ContinuedFraction(std::initializer_list<Term> terms) : terms_(terms) {}
  explicit ContinuedFraction(std::vector<Term> terms) : terms_(std::move(terms)) {}

  /// The n = -1 continued fraction, which evaluates to 0.
  static ContinuedFraction degenerate() {
    ContinuedFraction cf;
    cf.degenerate_ = true;
    return cf;
  }

  bool is_degenerate() const { return degenerate_; }
  /// Length n; -1 for the degenerate marker.
  long length() const { return degenerate_ ? -1 : static_cast<long>(terms_.size()); }
  bool empty() const { return !degenerate_ && terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// 1-based access c_i.
  Term operator[](long i) const { return terms_.at(static_cast<std::size_t>(i - 1)); }

  /// First k terms; k = -1 gives the degenerate marker.
  ContinuedFraction prefix(long k) const {
    if (k < 0) return degenerate();
    return ContinuedFraction(std::vector<Term>(terms_.begin(), terms_.begin() + k));
  }

  /// Type t_i = (-1)^(i-1) sgn(c_i) for 1 <= i <= n, with t_0 = -1.
  int type(long i) const {
    if (i == 0) return -1;
    Term c = (*this)[i];
    int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    return (i % 2 == 1) ? s : -s;
  }

  /// Partial sums l_0 = 0, l_i = l_{i-1} + |c_i|.
  std::vector<long> partial_sums() const {
    std::vector<long> ell{0};
    for (Term c : terms_) ell.push_back(ell.back() + static_cast<long>(c < 0 ? -c : c));
    return ell;
  }

  long ell(long i) const {
    long total = 0;
    for (long k = 1; k <= i; ++k) {
      Term c = (*this)[k];
      total += static_cast<long>(c < 0 ? -c : c);
    }
    return total;
  }

  bool is_positive() const {
    for (Term c : terms_) {
      if (c <= 0) return false;
    }
    return !degenerate_;
  }

  bool is_even() const {
    if (degenerate_) return true;
    for (Term c : terms_) {
      if (c == 0 || c % 2 != 0) return false;
    }
    return true;
  }

  /// Every |c_i| >= 1, and t_i = t_{i+1} forces |c_i|, |c_{i+1}| > 1.
  bool is_poset_valid() const {
    if (degenerate_) return false;
    long n = length();
    for (long i = 1; i <= n; ++i) {
      if ((*this)[i] == 0) return false;
    }
    for (long i = 1; i < n; ++i) {
      if (type(i) == type(i + 1)) {
        Term a = (*this)[i], b = (*this)[i + 1];
        if (a == 1 || a == -1 || b == 1 || b == -1) return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    if (degenerate_) return "[c_1,...,c_-1]";
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) os << ',';
      os << terms_[i];
    }
    os << ']';
    return os.str();
  }

  friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
    return a.degenerate_ == b.degenerate_ && a.terms_ == b.terms_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) {
    return os << cf.to_string();
  }

 private:
  std::vector<Term> terms_;
  bool degenerate_ = false;
};

/// Parses a comma-separated list of integers.  An empty string gives [ ].
inline ContinuedFraction parse_cf(const std::string& text) {
  std::vector<ContinuedFraction::Term> terms;
  std::string body = text;
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  if (body.empty()) return ContinuedFraction();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    Integer v = parse_integer(item);
    if (!v.fits_slong_p()) throw ParseError("continued fraction term out of range: " + item);
    terms.push_back(v.get_si());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ContinuedFraction(std::move(terms));
}

/// Right-to-left exact evaluation; [ ] = infinity and the degenerate marker is 0.
inline ExtendedRational eval_cf(const ContinuedFraction& cf) {
  if (cf.is_degenerate()) return ExtendedRational::zero();
  // (num, den) starts at 1/0; each step maps x to c + 1/x.  The pair stays
  // coprime because every step is a unimodular transform.
  Integer num = 1, den = 0;
  const auto& terms = cf.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Integer next = Integer(static_cast<long>(*it)) * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return ExtendedRational(num, den);
}

namespace detail {

inline ContinuedFraction::Term checked_term(const Integer& v) {
  if (!v.fits_slong_p()) throw DomainError("continued fraction term exceeds 64 bits");
  return v.get_si();
}

}  // namespace detail

/// Euclidean expansion of r >= 1 (or infinity).  The last term is >= 2
/// except for r = 1, which expands to [1].
inline ContinuedFraction positive_cf(const ExtendedRational& r) {
  if (r.is_infinity()) return ContinuedFraction();
  if (!r.at_least(1)) throw DomainError("positive expansion requires r >= 1, got " + r.to_string());
  std::vector<ContinuedFraction::Term> terms;
  Integer num = r.p(), den = r.q();
  while (den != 0) {
    Integer a = floor_div(num, den);
    terms.push_back(detail::checked_term(a));
    Integer rem = num - a * den;
    num = std::move(den);
    den = std::move(rem);
  }
  return ContinuedFraction(std::move(terms));
}

/// The unique expansion with every term even and nonzero.  Requires |r| >= 1
/// and p or q even; infinity gives [ ].
inline ContinuedFraction even_cf(const ExtendedRational& r) {
  if (r.is_infinity()) return ContinuedFraction();
  if (!r.abs_at_least_one()) throw DomainError("even expansion requires |r| >= 1, got " + r.to_string());
  if (!is_even(r.p()) && !is_even(r.q())) {
    throw NoEvenExpansion("no even expansion: numerator and denominator of " + r.to_string() + " are both odd");
  }
  // x = num/den with den > 0; each step picks the even integer nearest x.
  Integer num = r.p(), den = r.q();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // Q[b] has l_n - 1 >= n - 1 vertices and p order ideals, so n <= p.
  const std::size_t max_steps = r.p().fits_ulong_p() ? r.p().get_ui() + 2 : static_cast<std::size_t>(-1);
  std::vector<ContinuedFraction::Term> terms;
  while (den != 0) {
    if (terms.size() >= max_steps) throw InternalError("even expansion exceeded its step bound for " + r.to_string());
    // b = 2 * round(x / 2) = 2 * floor((num + den) / (2 den))
    Integer b = 2 * floor_div(num + den, 2 * den);
    if (b == 0) throw InternalError("even expansion produced a zero term for " + r.to_string());
    terms.push_back(detail::checked_term(b));
    Integer rem = num - b * den;  // x - b = rem/den, |rem| < den
    num = den;
    den = rem;
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  ContinuedFraction cf(std::move(terms));
  if (!(eval_cf(cf) == r)) throw InternalError("even expansion failed re-evaluation for " + r.to_string());
  return cf;
}

/// p/q -> p/(q - sgn(q) p).
inline ExtendedRational involution(const ExtendedRational& r) {
  if (r.is_infinity()) throw DomainError("involution is undefined at infinity");
  if (r.is_zero()) return r;
  Integer q2 = r.q() - Integer(sgn(r.q())) * r.p();
  return ExtendedRational(r.p(), q2);
}

/// Sequences derived from a continued fraction.
struct CFQuantities {
  std::vector<long> ell;               ///< l_0 .. l_n
  std::vector<int> type;               ///< t_0 .. t_n (t_0 = -1)
  std::vector<int> sign_sequence;      ///< length l_n
  std::optional<std::vector<int>> inner_sign_sequence;  ///< only when l_n >= 2
};

inline CFQuantities cf_quantities(const ContinuedFraction& cf) {
  CFQuantities out;
  out.ell = cf.partial_sums();
  out.type.push_back(-1);
  long n = std::max(0L, cf.length());
  for (long i = 1; i <= n; ++i) {
    int t = cf.type(i);
    out.type.push_back(t);
    for (long k = 0; k < out.ell[i] - out.ell[i - 1]; ++k) out.sign_sequence.push_back(t);
  }
  if (out.ell.back() >= 2) {
    out.inner_sign_sequence.emplace(out.sign_sequence.begin() + 1, out.sign_sequence.end() - 1);
  }
  return out;
}

struct UnknotMarker {
  friend bool operator==(UnknotMarker, UnknotMarker) { return true; }
};
struct TwoUnlinkMarker {
  friend bool operator==(TwoUnlinkMarker, TwoUnlinkMarker) { return true; }
};

using LinkForm = std::variant<ContinuedFraction, UnknotMarker, TwoUnlinkMarker>;

/// An even continued fraction indexing a link isotopic to C(r), or a marker
/// for the unknot (p = 1) and the two-component unlink (p = 0).
inline LinkForm canonical_link_form(const ExtendedRational& r) {
  if (r.p() == 0) return TwoUnlinkMarker{};
  if (r.p() == 1) return UnknotMarker{};
  const Integer& p = r.p();
  if (is_even(p)) {
    // Two components: keep q mod 2p so the orientation class is unchanged.
    Integer q = mod_floor(r.q(), 2 * p);
    if (q > p) q -= 2 * p;
    return even_cf(ExtendedRational(p, q));
  }
  Integer q = mod_floor(r.q(), p);
  if (!is_even(q)) q -= p;
  return even_cf(ExtendedRational(p, q));
}

inline LinkForm canonical_link_form(const Integer& p, const Integer& q) {
  return canonical_link_form(ExtendedRational::coprime(p, q));
}

/// C(p/q) and C(p'/q') are isotopic iff p = p' and q' = q^{+-1} mod p.
inline bool link_isotopic(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.p() != b.p()) return false;
  const Integer& p = a.p();
  if (p == 0) return a.q() == b.q();
  Integer qa = mod_floor(a.q(), p), qb = mod_floor(b.q(), p);
  if (qa == qb) return true;
  return mod_floor(qa * qb, p) == mod_floor(Integer(1), p);
}

/// Isotopy of oriented links with the orientation carried by the even
/// expansion: for even p the congruences hold mod 2p.
inline bool link_isotopic_oriented(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.p() != b.p()) return false;
  const Integer& p = a.p();
  if (!is_even(p) || p == 0) return link_isotopic(a, b);
  const Integer m = 2 * p;
  Integer qa = mod_floor(a.q(), m), qb = mod_floor(b.q(), m);
  return qa == qb || mod_floor(qa * qb, m) == 1;
}

inline bool link_isotopic(const Integer& p1, const Integer& q1, const Integer& p2, const Integer& q2) {
  return link_isotopic(ExtendedRational::coprime(p1, q1), ExtendedRational::coprime(p2, q2));
}

}  // namespace ratknot

#endif  // RATKNOT_CF_HPP
