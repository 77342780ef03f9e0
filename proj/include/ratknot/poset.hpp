#ifndef RATKNOT_POSET_HPP
#define RATKNOT_POSET_HPP

// Path posets: construction from sign sequences, rationals and continued
// fractions; order ideals; isomorphism tests; the rewriting identities used to
// reduce a continued fraction to a positive one.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ratknot/cf.hpp"
#include "ratknot/errors.hpp"
#include "ratknot/integer.hpp"

namespace ratknot {

inline constexpr std::size_t kDefaultIdealCap = 10'000'000;

/// Straight sub-chain S_i contributed by term c_i of a continued fraction.
struct Segment {
  long ell_prev = 0;         ///< l_{i-1}
  long ell = 0;              ///< l_i
  int type = 0;              ///< t_i
  std::vector<int> members;  ///< labels l_{i-1}+1 .. l_i-1
  bool has_connector = false;  ///< vertex l_i joins S_i to S_{i+1}

  /// j-th vertex from the bottom, 1 <= j <= |c_i| - 1.
  int lambda(long j) const { return static_cast<int>(type == 1 ? ell_prev + j : ell - j); }
};

/// A poset whose Hasse diagram is a path, stored in left-to-right traversal
/// order.  orientations[i] = +1 means vertex i+1 covers vertex i.
struct PathPoset {
  std::vector<int> labels;
  std::vector<int> orientations;
  std::vector<Segment> segments;  ///< empty unless built from a continued fraction

  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
  int max_label() const { return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()); }
};

struct OrderIdeal {
  std::vector<int> members;  ///< labels, in traversal order

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

/// Unlabeled poset (labels 1..k) with the given edge orientations.
inline PathPoset poset_from_sign_sequence(const std::vector<int>& seq) {
  PathPoset poset;
  poset.orientations = seq;
  for (std::size_t i = 0; i <= seq.size(); ++i) poset.labels.push_back(static_cast<int>(i + 1));
  return poset;
}

/// Q(r) for r >= 1 or infinity: empty for infinity and 1, otherwise the poset
/// of the inner sign sequence of the positive expansion.
inline PathPoset poset_from_rational(const ExtendedRational& r) {
  if (r.is_infinity()) return {};
  if (!r.at_least(1)) throw DomainError("Q(r) requires r >= 1, got " + r.to_string());
  if (r.p() == r.q()) return {};
  auto quantities = cf_quantities(positive_cf(r));
  return poset_from_sign_sequence(*quantities.inner_sign_sequence);
}

/// The labeled path poset Q[c_1, ..., c_n].
inline PathPoset poset_from_cf(const ContinuedFraction& cf) {
  if (!cf.is_poset_valid()) throw InvalidCF("continued fraction " + cf.to_string() + " does not define a path poset");
  const long n = cf.length();
  const auto ell = cf.partial_sums();

  PathPoset poset;
  // Each traversal item remembers the segment it belongs to and whether it is
  // the connecting vertex l_i that follows S_i.
  struct Item {
    long segment;
    bool connector;
  };
  std::vector<Item> items;
  for (long i = 1; i <= n; ++i) {
    Segment seg;
    seg.ell_prev = ell[i - 1];
    seg.ell = ell[i];
    seg.type = cf.type(i);
    for (long label = ell[i - 1] + 1; label < ell[i]; ++label) {
      seg.members.push_back(static_cast<int>(label));
      poset.labels.push_back(static_cast<int>(label));
      items.push_back({i, false});
    }
    seg.has_connector = i < n && cf.type(i) != cf.type(i + 1);
    if (seg.has_connector) {
      poset.labels.push_back(static_cast<int>(ell[i]));
      items.push_back({i, true});
    }
    poset.segments.push_back(std::move(seg));
  }
  for (std::size_t k = 0; k + 1 < items.size(); ++k) {
    const Item& a = items[k];
    const Item& b = items[k + 1];
    int orientation;
    if (b.connector) {
      orientation = cf.type(b.segment);
    } else if (a.connector) {
      orientation = cf.type(a.segment + 1);
    } else if (a.segment == b.segment) {
      orientation = cf.type(a.segment);
    } else {
      orientation = -cf.type(a.segment);
    }
    poset.orientations.push_back(orientation);
  }
  return poset;
}

/// Number of order ideals, by a left-to-right count of monotone 0/1 vectors.
inline Integer count_order_ideals(const PathPoset& poset) {
  if (poset.empty()) return 1;
  Integer out0 = 1, in1 = 1;  // ideals of the prefix ending with vertex excluded / included
  for (int o : poset.orientations) {
    Integer next0, next1;
    if (o == 1) {
      // next covers current: next in => current in
      next0 = out0 + in1;
      next1 = in1;
    } else {
      // current covers next: current in => next in
      next0 = out0;
      next1 = out0 + in1;
    }
    out0 = std::move(next0);
    in1 = std::move(next1);
  }
  return out0 + in1;
}

/// Every order ideal, in lexicographic order of the membership vector
/// (excluded before included, leftmost vertex most significant).
inline std::vector<OrderIdeal> order_ideals(const PathPoset& poset, std::size_t cap = kDefaultIdealCap) {
  Integer count = count_order_ideals(poset);
  if (count > Integer(static_cast<unsigned long>(cap))) {
    throw ResourceLimit("poset has " + count.get_str() + " order ideals, above the cap of " + std::to_string(cap));
  }
  std::vector<OrderIdeal> out;
  out.reserve(count.get_ui());
  const std::size_t k = poset.size();
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<char> member(k, 0);
  auto sweep = [&](auto&& self, std::size_t pos) -> void {
    if (pos == k) {
      OrderIdeal ideal;
      for (std::size_t i = 0; i < k; ++i) {
        if (member[i]) ideal.members.push_back(poset.labels[i]);
      }
      out.push_back(std::move(ideal));
      return;
    }
    for (char value = 0; value <= 1; ++value) {
      if (pos > 0) {
        char prev = member[pos - 1];
        bool ok = poset.orientations[pos - 1] == 1 ? value <= prev : prev <= value;
        if (!ok) continue;
      }
      member[pos] = value;
      self(self, pos + 1);
    }
  };
  sweep(sweep, 0);
  return out;
}

/// The chain of ideals of S_m: {lambda_m(1..k)} for k = 0 .. |c_m| - 1.
inline std::vector<OrderIdeal> segment_ideals(const ContinuedFraction& cf, long m) {
  if (m < 1 || m > cf.length()) {
    throw IndexError("segment index " + std::to_string(m) + " outside 1.." + std::to_string(cf.length()));
  }
  if (!cf.is_poset_valid()) throw InvalidCF("continued fraction " + cf.to_string() + " does not define a path poset");
  Segment seg;
  seg.ell_prev = cf.ell(m - 1);
  seg.ell = cf.ell(m);
  seg.type = cf.type(m);
  std::vector<OrderIdeal> chain;
  OrderIdeal current;
  chain.push_back(current);
  for (long j = 1; j < seg.ell - seg.ell_prev; ++j) {
    current.members.push_back(seg.lambda(j));
    chain.push_back(current);
  }
  return chain;
}

/// Equal orientation sequences; labels are ignored.
inline bool oriented_equal(const PathPoset& a, const PathPoset& b) {
  return a.size() == b.size() && a.orientations == b.orientations;
}

/// Abstract poset isomorphism: equal orientations, or one sequence is the
/// reversed negation of the other.
inline bool abstract_isomorphic(const PathPoset& a, const PathPoset& b) {
  if (a.size() != b.size()) return false;
  if (a.orientations == b.orientations) return true;
  const auto& x = a.orientations;
  const auto& y = b.orientations;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != -y[y.size() - 1 - i]) return false;
  }
  return true;
}

namespace detail {

inline ContinuedFraction rewrite_negative_term(const ContinuedFraction& cf, long k) {
  const long n = cf.length();
  if (k < 0 || k >= n) throw IndexError("reduction index " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  if (cf[k + 1] > 0) throw DomainError("reduction needs a negative term at position " + std::to_string(k + 1));
  std::vector<ContinuedFraction::Term> out;
  if (k == 0) {
    out.push_back(1);
    out.push_back(-cf[1] - 1);
    for (long i = 2; i <= n; ++i) out.push_back(-cf[i]);
    return ContinuedFraction(std::move(out));
  }
  for (long i = 1; i < k; ++i) out.push_back(cf[i]);
  out.push_back(cf[k] - 1);
  out.push_back(1);
  out.push_back(-cf[k + 1] - 1);
  for (long i = k + 2; i <= n; ++i) out.push_back(-cf[i]);
  return ContinuedFraction(std::move(out));
}

}  // namespace detail

/// [a_1..a_k, c_{k+1}, ...] -> [a_1..a_{k-1}, a_k - 1, 1, -c_{k+1} - 1, -c_{k+2}, ...]
/// for k >= 1 and c_{k+1} < 0 (value preserved).  For k = 0 and c_1 < 0 the
/// prefix identity [1, -c_1 - 1, -c_2, ...] is applied instead, which maps
/// p/q to p/(q + p).
inline ContinuedFraction reduce_cf_step(const ContinuedFraction& cf, long k) {
  if (!cf.is_poset_valid()) throw InvalidCF("continued fraction " + cf.to_string() + " does not define a path poset");
  return detail::rewrite_negative_term(cf, k);
}

/// Rewrites at the first negative term until the expansion is positive.  Its
/// value equals the input's when c_1 > 0 and p/(q + p) when c_1 < 0.
/// Intermediate forms can leave the poset-valid set (a term -2 becomes 1, and
/// [4,-2,2,-4] -> [3,1,1,-2,4]), so the step precondition is not re-checked.
/// A term 1 followed by a negative term becomes 0; [.., a, 0, b, ..] is
/// merged to [.., a + b, ..], which keeps the value.
inline ContinuedFraction reduce_to_positive(ContinuedFraction cf) {
  if (!cf.is_poset_valid()) throw InvalidCF("continued fraction " + cf.to_string() + " does not define a path poset");
  while (true) {
    auto terms = cf.terms();
    for (std::size_t i = 1; i + 1 < terms.size();) {
      if (terms[i] != 0) {
        ++i;
        continue;
      }
      terms[i - 1] += terms[i + 1];
      terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(i), terms.begin() + static_cast<std::ptrdiff_t>(i + 2));
    }
    if (!terms.empty() && (terms.front() == 0 || terms.back() == 0)) {
      throw DomainError("rewriting " + cf.to_string() + " reached a leading or trailing zero term");
    }
    cf = ContinuedFraction(std::move(terms));
    long first_negative = 0;
    for (long i = 1; i <= cf.length(); ++i) {
      if (cf[i] < 0) {
        first_negative = i;
        break;
      }
    }
    if (first_negative == 0) return cf;
    cf = detail::rewrite_negative_term(cf, first_negative - 1);
  }
}

/// A finite poset given by its cover relations.  Used for small posets that
/// are not paths and as an independent check on path-poset enumeration.
struct HassePoset {
  std::vector<int> labels;
  std::vector<std::pair<int, int>> covers;  ///< (lower, upper) label pairs

  static HassePoset from_path(const PathPoset& p) {
    HassePoset h;
    h.labels = p.labels;
    for (std::size_t i = 0; i < p.orientations.size(); ++i) {
      if (p.orientations[i] == 1) {
        h.covers.emplace_back(p.labels[i], p.labels[i + 1]);
      } else {
        h.covers.emplace_back(p.labels[i + 1], p.labels[i]);
      }
    }
    return h;
  }
};

/// Subset enumeration; limited to 24 elements.
inline std::vector<OrderIdeal> order_ideals(const HassePoset& poset) {
  const std::size_t k = poset.labels.size();
  if (k > 24) throw ResourceLimit("subset enumeration is limited to 24 elements");
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[poset.labels[i]] = i;
  std::vector<OrderIdeal> out;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    bool closed = true;
    for (auto [lo, hi] : poset.covers) {
      if ((mask >> index.at(hi) & 1UL) && !(mask >> index.at(lo) & 1UL)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    OrderIdeal ideal;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1UL) ideal.members.push_back(poset.labels[i]);
    }
    out.push_back(std::move(ideal));
  }
  return out;
}

/// DOT digraph with an edge from each element to the element covering it,
/// listed in traversal order.
inline std::string render_dot(const PathPoset& poset) {
  std::ostringstream os;
  os << "digraph poset {";
  if (poset.size() == 1) os << ' ' << poset.labels[0] << ';';
  for (std::size_t i = 0; i < poset.orientations.size(); ++i) {
    int a = poset.labels[i], b = poset.labels[i + 1];
    if (poset.orientations[i] == 1) {
      os << ' ' << a << " -> " << b << ';';
    } else {
      os << ' ' << b << " -> " << a << ';';
    }
  }
  os << " }\n";
  return os.str();
}

/// Hasse diagram drawn with vertices on diagonal lines: '/' for an upward
/// edge and '\' for a downward one.
inline std::string render_ascii(const PathPoset& poset) {
  if (poset.empty()) return "(empty poset)\n";
  const std::size_t k = poset.size();
  std::vector<long> height(k, 0);
  for (std::size_t i = 1; i < k; ++i) height[i] = height[i - 1] + poset.orientations[i - 1];
  long top = *std::max_element(height.begin(), height.end());
  long bottom = *std::min_element(height.begin(), height.end());
  std::size_t width = 1;
  for (int label : poset.labels) width = std::max(width, std::to_string(label).size());
  const std::size_t cell = width + 1;
  const std::size_t rows = static_cast<std::size_t>(2 * (top - bottom) + 1);
  const std::size_t cols = k * cell;
  std::vector<std::string> grid(rows, std::string(cols, ' '));
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t row = static_cast<std::size_t>(2 * (top - height[i]));
    std::string text = std::to_string(poset.labels[i]);
    grid[row].replace(i * cell, text.size(), text);
    if (i + 1 < k) {
      int o = poset.orientations[i];
      std::size_t edge_row = o == 1 ? row - 1 : row + 1;
      grid[edge_row][i * cell + width] = o == 1 ? '/' : '\\';
    }
  }
  std::ostringstream os;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace ratknot

#endif  // RATKNOT_POSET_HPP
