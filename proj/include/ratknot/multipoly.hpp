#ifndef RATKNOT_MULTIPOLY_HPP
#define RATKNOT_MULTIPOLY_HPP

// Sparse multivariate Laurent polynomials with Integer coefficients.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ratknot/errors.hpp"
#include "ratknot/integer.hpp"

namespace ratknot {

using Exponents = std::vector<int>;

/// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Integer, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Integer& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.arity(), 0), c);
    return p;
  }
  static MultiPoly monomial(std::vector<std::string> vars, Exponents e, const Integer& c = 1) {
    MultiPoly p(std::move(vars));
    p.add_term(std::move(e), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Exponents e(p.arity(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  /// Value of a constant polynomial.
  Integer constant_value() const {
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.empty() ? Integer(0) : terms_.begin()->second;
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }
  /// Leading coefficient in graded lexicographic order.
  const Integer& lead_coefficient() const { return terms_.begin()->second; }

  Integer coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(Exponents e, const Integer& c) {
    if (e.size() != arity()) throw DomainError("exponent vector does not match the variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.vars_);
    Exponents e(a.arity());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const Integer& k) const {
    MultiPoly out(vars_);
    if (k == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * k);
    return out;
  }
  /// Divides every coefficient by k; throws InternalError if one is not divisible.
  MultiPoly divided_exactly(const Integer& k) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, divexact(c, k));
    return out;
  }
  /// Multiplication by the monomial with exponent vector shift.
  MultiPoly shifted(const Exponents& shift) const {
    if (shift.size() != arity()) throw DomainError("shift does not match the variable count");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
      out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
    }
    return out;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (k) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return result;
  }

  /// Componentwise minimum exponent over all terms (zeros for the zero polynomial).
  Exponents min_exponents() const {
    Exponents m(arity(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        m = e;
        first = false;
        continue;
      }
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
  }
  Exponents max_exponents() const {
    Exponents m(arity(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        m = e;
        first = false;
        continue;
      }
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
    }
    return m;
  }

  /// gcd of the coefficients, nonnegative.
  Integer content() const {
    Integer g = 0;
    for (const auto& [e, c] : terms_) {
      g = gcd_abs(g, c);
      if (g == 1) break;
    }
    return g;
  }

  /// Plain text such as `3*x^2*y - y^-1 + 2`.
  std::string to_string() const {
    return format([this](std::ostream& os, const Exponents& e) {
      bool first = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << vars_[i];
        if (e[i] != 1) os << '^' << e[i];
      }
    });
  }

  /// Joins terms in the stored order; print_monomial writes a non-constant monomial.
  std::string format(const std::function<void(std::ostream&, const Exponents&)>& print_monomial) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool unit = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (unit) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << '*';
      print_monomial(os, e);
    }
    return os.str();
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw DomainError("polynomials over different variables");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

/// [k]_x = 1 + x + ... + x^(k-1); bracket(0, x) = 0.
inline MultiPoly bracket(unsigned k, const MultiPoly& x) {
  MultiPoly sum(x.variables());
  MultiPoly power = MultiPoly::constant(x.variables(), 1);
  for (unsigned i = 0; i < k; ++i) {
    sum += power;
    if (i + 1 < k) power = power * x;
  }
  return sum;
}

}  // namespace ratknot

#endif  // RATKNOT_MULTIPOLY_HPP
