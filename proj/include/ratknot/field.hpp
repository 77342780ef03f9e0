#ifndef RATKNOT_FIELD_HPP
#define RATKNOT_FIELD_HPP

// The rational function field Z(l, s) with s = q^(1/2), and Laurent
// polynomials in t^(1/2) for Jones and Alexander output.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ratknot/errors.hpp"
#include "ratknot/integer.hpp"
#include "ratknot/multipoly.hpp"
#include "ratknot/upoly.hpp"

namespace ratknot {

inline const std::vector<std::string>& field_variables() {
  static const std::vector<std::string> vars{"l", "s"};
  return vars;
}

namespace detail {

using Nested = UPoly<UPoly<Integer>>;

// Polynomial in (l, s) with nonnegative exponents -> outer s, inner l.
inline Nested to_nested(const MultiPoly& p) {
  const Exponents hi = p.max_exponents();
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(hi[1] + 1));
  for (const auto& [e, c] : p.terms()) {
    auto& row = rows[static_cast<std::size_t>(e[1])];
    if (row.size() <= static_cast<std::size_t>(e[0])) row.resize(static_cast<std::size_t>(e[0] + 1));
    row[static_cast<std::size_t>(e[0])] = c;
  }
  std::vector<UPoly<Integer>> outer;
  outer.reserve(rows.size());
  for (auto& row : rows) outer.emplace_back(std::move(row));
  return Nested(std::move(outer));
}

inline MultiPoly from_nested(const Nested& n) {
  MultiPoly p(field_variables());
  const auto& outer = n.coeffs();
  for (std::size_t es = 0; es < outer.size(); ++es) {
    const auto& inner = outer[es].coeffs();
    for (std::size_t el = 0; el < inner.size(); ++el) {
      if (inner[el] != 0) p.add_term({static_cast<int>(el), static_cast<int>(es)}, inner[el]);
    }
  }
  return p;
}

inline Exponents negated(Exponents e) {
  for (int& x : e) x = -x;
  return e;
}

}  // namespace detail

/// Reduced fraction num/den of Laurent polynomials in (l, s).  The
/// denominator has no monomial factor and a positive leading coefficient;
/// the fraction has no common factor, integer content included.
class FieldElem {
 public:
  FieldElem() : num_(field_variables()), den_(MultiPoly::constant(field_variables(), 1)) {}
  FieldElem(long c) : FieldElem(Integer(c)) {}  // NOLINT: implicit by design for arithmetic with literals
  FieldElem(const Integer& c)  // NOLINT
      : num_(MultiPoly::constant(field_variables(), c)), den_(MultiPoly::constant(field_variables(), 1)) {}
  explicit FieldElem(MultiPoly num) : FieldElem(std::move(num), MultiPoly::constant(field_variables(), 1)) {}
  FieldElem(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.variables() != field_variables() || den_.variables() != field_variables()) {
      throw DomainError("field elements live in the variables (l, s)");
    }
    normalize();
  }

  /// c * l^a * s^b
  static FieldElem monomial(int a, int b, const Integer& c = 1) {
    return FieldElem(MultiPoly::monomial(field_variables(), {a, b}, c));
  }
  static FieldElem l() { return monomial(1, 0); }
  static FieldElem s() { return monomial(0, 1); }
  static FieldElem q() { return monomial(0, 2); }
  /// w = (1 - l^2 q) / (1 - q^-1)
  static FieldElem w() {
    MultiPoly num(field_variables()), den(field_variables());
    num.add_term({0, 0}, 1);
    num.add_term({2, 2}, -1);
    den.add_term({0, 0}, 1);
    den.add_term({0, -2}, -1);
    return FieldElem(std::move(num), std::move(den));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value is a Laurent polynomial.
  bool is_polynomial() const { return den_.is_one(); }
  /// True for +-l^a s^b.
  bool is_unit_monomial() const {
    return is_polynomial() && num_.is_monomial() && abs(num_.lead_coefficient()) == 1;
  }

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return FieldElem(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return FieldElem(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return FieldElem(a.num_ + b.num_ * a.den_, a.den_);
    return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend FieldElem operator-(const FieldElem& a) {
    FieldElem out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    if (a.is_zero() || b.is_zero()) return FieldElem();
    if (a.is_unit_monomial()) return b.times_unit_monomial(a);
    if (b.is_unit_monomial()) return a.times_unit_monomial(b);
    return FieldElem(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  FieldElem inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in the field");
    return FieldElem(den_, num_);
  }

  /// Integer power; negative exponents invert.
  FieldElem pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    FieldElem result(1), base = *this;
    while (k) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  /// Canonical text, e.g. `(-l^-3*q^(-1/2) + l^-3*q^(3/2))/(q - 1)`.
  std::string to_string() const {
    auto print = [](std::ostream& os, const Exponents& e) {
      bool first = true;
      if (e[0] != 0) {
        os << 'l';
        if (e[0] != 1) os << '^' << e[0];
        first = false;
      }
      if (e[1] != 0) {
        if (!first) os << '*';
        os << 'q';
        if (e[1] % 2 == 0) {
          if (e[1] != 2) os << '^' << e[1] / 2;
        } else {
          os << "^(" << e[1] << "/2)";
        }
      }
    };
    if (den_.is_one()) return num_.format(print);
    return "(" + num_.format(print) + ")/(" + den_.format(print) + ")";
  }

  nlohmann::json to_json() const {
    auto encode = [](const MultiPoly& p) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [e, c] : p.terms()) {
        nlohmann::json coef;
        if (c.fits_slong_p()) {
          coef = static_cast<std::int64_t>(c.get_si());
        } else {
          coef = c.get_str();
        }
        terms.push_back(nlohmann::json::array({coef, e[0], e[1]}));
      }
      return terms;
    };
    return nlohmann::json{{"num", encode(num_)}, {"den", encode(den_)}};
  }

  /// Inverse of to_json; the result is re-normalized.
  static FieldElem from_json(const nlohmann::json& j) {
    auto decode = [](const nlohmann::json& terms) {
      MultiPoly p(field_variables());
      if (!terms.is_array()) throw ParseError("expected an array of [coef, e_l, e_s] terms");
      for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3) throw ParseError("expected a [coef, e_l, e_s] term");
        Integer c = t[0].is_string() ? parse_integer(t[0].get<std::string>()) : Integer(t[0].get<long>());
        p.add_term({t[1].get<int>(), t[2].get<int>()}, c);
      }
      return p;
    };
    try {
      return FieldElem(decode(j.at("num")), decode(j.at("den")));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed field element JSON: ") + e.what());
    }
  }

 private:
  FieldElem(MultiPoly num, MultiPoly den, bool /*already normalized*/) : num_(std::move(num)), den_(std::move(den)) {}

  // u = +-l^a s^b; multiplying by a unit keeps the fraction reduced.
  FieldElem times_unit_monomial(const FieldElem& u) const {
    const auto& [e, c] = *u.num_.terms().begin();
    MultiPoly n = num_.shifted(e);
    if (c < 0) n = -n;
    return FieldElem(std::move(n), den_, true);
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(field_variables(), 1);
      return;
    }
    const Exponents mn = num_.min_exponents();
    const Exponents md = den_.min_exponents();
    MultiPoly n = num_.shifted(detail::negated(mn));
    MultiPoly d = den_.shifted(detail::negated(md));
    Exponents shift{mn[0] - md[0], mn[1] - md[1]};

    if (d.is_constant() || n.is_constant()) {
      Integer g = gcd_abs(n.content(), d.content());
      if (g != 1) {
        n = n.divided_exactly(g);
        d = d.divided_exactly(g);
      }
    } else {
      detail::Nested dn = detail::to_nested(d);
      detail::Nested nn = detail::to_nested(n);
      detail::Nested g = gcd(nn, dn);
      if (!ring_is_one(g)) {
        n = detail::from_nested(divexact(nn, g));
        d = detail::from_nested(divexact(dn, g));
      }
    }
    if (d.lead_coefficient() < 0) {
      n = -n;
      d = -d;
    }
    num_ = n.shifted(shift);
    den_ = std::move(d);
  }

  MultiPoly num_;
  MultiPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

/// [k]_x for a field element x.
inline FieldElem bracket(unsigned k, const FieldElem& x) {
  FieldElem sum, power(1);
  for (unsigned i = 0; i < k; ++i) {
    sum += power;
    if (i + 1 < k) power *= x;
  }
  return sum;
}

using Assignment = std::map<std::string, FieldElem>;

namespace detail {

// +-1 * monomial, if x is one.
inline std::optional<std::pair<Exponents, int>> as_unit_monomial(const FieldElem& x) {
  if (!x.is_unit_monomial()) return std::nullopt;
  const auto& [e, c] = *x.num().terms().begin();
  return std::make_pair(e, c < 0 ? -1 : 1);
}

}  // namespace detail

/// Substitutes field values for the variables of p.  Terms are grouped by
/// their exponents on variables whose value is not a signed monomial, so
/// each distinct non-monomial power product is formed once.
inline FieldElem substitute(const MultiPoly& p, const Assignment& assignment) {
  const std::size_t k = p.arity();
  std::vector<std::optional<std::pair<Exponents, int>>> unit(k);
  std::vector<const FieldElem*> value(k, nullptr);
  std::vector<std::size_t> general;  // indices with non-monomial values
  for (std::size_t i = 0; i < k; ++i) {
    auto it = assignment.find(p.variables()[i]);
    if (it == assignment.end()) {
      bool used = false;
      for (const auto& [e, c] : p.terms()) used = used || e[i] != 0;
      if (used) throw DomainError("no value assigned to variable '" + p.variables()[i] + "'");
      unit[i] = std::make_pair(Exponents{0, 0}, 1);
      continue;
    }
    value[i] = &it->second;
    unit[i] = detail::as_unit_monomial(it->second);
    if (!unit[i]) general.push_back(i);
  }

  std::map<Exponents, MultiPoly> groups;
  for (const auto& [e, c] : p.terms()) {
    Exponents mono{0, 0};
    Integer coef = c;
    Exponents key;
    key.reserve(general.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (e[i] == 0) continue;
      if (unit[i]) {
        mono[0] += unit[i]->first[0] * e[i];
        mono[1] += unit[i]->first[1] * e[i];
        if (unit[i]->second < 0 && e[i] % 2 != 0) coef = -coef;
      }
    }
    for (std::size_t i : general) key.push_back(e[i]);
    auto [it, inserted] = groups.try_emplace(key, field_variables());
    it->second.add_term(mono, coef);
  }

  FieldElem result;
  for (const auto& [key, poly] : groups) {
    if (poly.is_zero()) continue;
    FieldElem term{MultiPoly(poly)};
    for (std::size_t j = 0; j < general.size(); ++j) {
      if (key[j] != 0) term *= value[general[j]]->pow(key[j]);
    }
    result += term;
  }
  return result;
}

/// Substitutes into a field element.  Keys are "l" and "s", or "q" for
/// q = s^2, in which case the value must be a perfect square monomial.
inline FieldElem substitute(const FieldElem& f, Assignment assignment) {
  if (auto qit = assignment.find("q"); qit != assignment.end()) {
    if (assignment.count("s")) throw DomainError("assign either q or s, not both");
    auto mono = detail::as_unit_monomial(qit->second);
    if (!mono || mono->second < 0 || mono->first[0] % 2 != 0 || mono->first[1] % 2 != 0) {
      throw DomainError("q must map to a square monomial so that q^(1/2) is defined");
    }
    assignment.emplace("s", FieldElem::monomial(mono->first[0] / 2, mono->first[1] / 2));
    assignment.erase("q");
  }
  for (const auto& name : field_variables()) {
    if (!assignment.count(name)) assignment.emplace(name, name == "l" ? FieldElem::l() : FieldElem::s());
  }
  FieldElem num = substitute(f.num(), assignment);
  FieldElem den = substitute(f.den(), assignment);
  if (den.is_zero()) throw SubstitutionSingularity("denominator " + f.den().to_string() + " vanishes under the substitution");
  return num / den;
}

/// Laurent polynomial in t^(1/2), keyed by twice the exponent of t.
class TPoly {
 public:
  TPoly() = default;
  static TPoly monomial(long doubled_exponent, const Integer& c = 1) {
    TPoly p;
    if (c != 0) p.terms_[doubled_exponent] = c;
    return p;
  }
  /// A Laurent polynomial in s = t^(1/2) with no l; throws if it has a denominator or an l.
  static TPoly from_field(const FieldElem& x) {
    if (!x.is_polynomial()) throw InternalError("expected a Laurent polynomial, got " + x.to_string());
    TPoly p;
    for (const auto& [e, c] : x.num().terms()) {
      if (e[0] != 0) throw InternalError("expected no l in " + x.to_string());
      p.terms_[e[1]] = c;
    }
    return p;
  }
  /// The same value as a field element in s = t^(1/2).
  FieldElem to_field() const {
    MultiPoly m(field_variables());
    for (const auto& [e, c] : terms_) m.add_term({0, static_cast<int>(e)}, c);
    return FieldElem(std::move(m));
  }

  const std::map<long, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }
  friend TPoly operator+(TPoly a, const TPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend TPoly operator-(TPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
    }
    return out;
  }

  /// t -> t^-1
  TPoly mirror() const {
    TPoly out;
    for (const auto& [e, c] : terms_) out.terms_[-e] = c;
    return out;
  }

  /// True when a = +-t^(k/2) * b for some integer k.
  friend bool unit_equivalent(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms_.size() != b.terms_.size()) return false;
    const long shift = a.terms_.begin()->first - b.terms_.begin()->first;
    const bool flip = a.terms_.begin()->second != b.terms_.begin()->second;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first + shift) return false;
      if (ia->second != (flip ? -ib->second : ib->second)) return false;
    }
    return true;
  }

  /// Decreasing powers, e.g. `t^2 - t + 1 - t^-1 + t^(-3/2)`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << '*';
      os << 't';
      if (e % 2 != 0) {
        os << "^(" << e << "/2)";
      } else if (e != 2) {
        os << '^' << e / 2;
      }
    }
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      nlohmann::json coef;
      if (it->second.fits_slong_p()) {
        coef = static_cast<std::int64_t>(it->second.get_si());
      } else {
        coef = it->second.get_str();
      }
      terms.push_back(nlohmann::json::array({coef, it->first}));
    }
    return terms;
  }

 private:
  void add(long e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<long, Integer> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const TPoly& x) { return os << x.to_string(); }

}  // namespace ratknot

#endif  // RATKNOT_FIELD_HPP
