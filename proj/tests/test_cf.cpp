#include <gtest/gtest.h>

#include "ratknot/cf.hpp"

using namespace ratknot;

namespace {

ExtendedRational R(long p, long q) { return ExtendedRational(p, q); }

// Right-to-left evaluation with long arithmetic, for small cases only.
std::pair<long, long> naive_eval(const std::vector<long>& c) {
  long num = 1, den = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    long n2 = *it * num + den;
    den = num;
    num = n2;
  }
  return {num, den};
}

}  // namespace

TEST(ExtendedRational, Normalization) {
  EXPECT_EQ(R(-3, 2).p(), 3);
  EXPECT_EQ(R(-3, 2).q(), -2);
  EXPECT_EQ(R(3, -2), R(-3, 2));
  EXPECT_EQ(R(4, 6), R(2, 3));
  EXPECT_TRUE(R(5, 0).is_infinity());
  EXPECT_EQ(R(0, -7), R(0, 1));
  EXPECT_THROW(R(0, 0), DomainError);
  EXPECT_THROW(ExtendedRational::coprime(4, 6), NotCoprime);
  EXPECT_EQ(parse_coprime_fraction("-3/2"), R(3, -2));
  EXPECT_EQ(parse_coprime_fraction("7"), R(7, 1));
  EXPECT_THROW(parse_coprime_fraction("6/4"), NotCoprime);
  EXPECT_THROW(parse_fraction("3/"), ParseError);
  EXPECT_THROW(parse_fraction("a/2"), ParseError);
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval_cf({2, 3, -4, 2, 3, 1}), R(206, 87));
  EXPECT_EQ(eval_cf({}), R(1, 0));
  EXPECT_EQ(eval_cf(ContinuedFraction::degenerate()), R(0, 1));
  EXPECT_EQ(eval_cf({2, 2}), R(5, 2));
  EXPECT_EQ(eval_cf({-2, 2}), R(-3, 2));
  EXPECT_EQ(eval_cf({0}), R(0, 1));
  EXPECT_EQ(eval_cf({1, 0, 1}), R(2, 1));
}

TEST(Expansions, Examples) {
  EXPECT_EQ(positive_cf(R(206, 87)), ContinuedFraction({2, 2, 1, 2, 1, 1, 4}));
  EXPECT_EQ(positive_cf(R(1, 0)), ContinuedFraction());
  EXPECT_EQ(positive_cf(R(1, 1)), ContinuedFraction({1}));
  EXPECT_EQ(positive_cf(R(5, 2)), ContinuedFraction({2, 2}));
  EXPECT_THROW(positive_cf(R(2, 3)), DomainError);
  EXPECT_THROW(positive_cf(R(3, -2)), DomainError);

  EXPECT_EQ(even_cf(R(5, 2)), ContinuedFraction({2, 2}));
  EXPECT_EQ(even_cf(R(-3, 2)), ContinuedFraction({-2, 2}));
  EXPECT_EQ(even_cf(R(206, 87)), ContinuedFraction({2, 2, 2, -2, 2, 2, -2, 2, -2}));
  EXPECT_EQ(even_cf(R(1, 0)), ContinuedFraction());
  EXPECT_THROW(even_cf(R(3, 1)), NoEvenExpansion);
  EXPECT_THROW(even_cf(R(2, 3)), DomainError);
  // Fractions near 1 have long even expansions.
  EXPECT_EQ(eval_cf(even_cf(R(26, -25))), R(26, -25));
  EXPECT_GE(even_cf(R(26, -25)).length(), 10);
}

TEST(Expansions, LargeValues) {
  Integer p("14472334024676221"), q("8944394323791464");  // consecutive Fibonacci numbers
  ExtendedRational r(p, q);
  ContinuedFraction pos = positive_cf(r);
  EXPECT_EQ(eval_cf(pos), r);
  EXPECT_EQ(eval_cf(even_cf(r)), r);
  EXPECT_THROW(detail::checked_term(Integer("100000000000000000000")), DomainError);
}

TEST(Expansions, RoundTripProperties) {
  for (long p = 1; p <= 60; ++p) {
    for (long q = -p; q <= p; ++q) {
      if (q == 0 || gcd_abs(p, q) != 1) continue;
      ExtendedRational r(p, q);
      if (q > 0) {
        ContinuedFraction pos = positive_cf(r);
        EXPECT_TRUE(pos.is_positive());
        EXPECT_EQ(eval_cf(pos), r);
        if (pos.ell(pos.length()) >= 2) { EXPECT_GE(pos[pos.length()], 2); }
        auto q1 = cf_quantities(pos);
        EXPECT_EQ(q1.sign_sequence.front(), 1);
      }
      if (p % 2 == 0 || q % 2 == 0) {
        ContinuedFraction ev = even_cf(r);
        EXPECT_TRUE(ev.is_even());
        EXPECT_EQ(eval_cf(ev), r);
      }
      if (p > 1) {
        ExtendedRational s = involution(r);
        bool r_even = p % 2 == 0 || q % 2 == 0;
        bool s_even = is_even(s.p()) || is_even(s.q());
        if (p % 2 == 1) {
          EXPECT_NE(r_even, s_even) << r;
        } else {
          EXPECT_TRUE(r_even && s_even) << r;
        }
        EXPECT_NE(r.q() > 0, s.q() > 0) << r;
      }
    }
  }
}

TEST(Expansions, TrailingOneIdentity) {
  const std::vector<std::vector<long>> cases = {{2}, {3, -1}, {-2, 5, 7}, {1, 1, 1}, {4, -3, 2, -6}};
  for (const auto& c : cases) {
    std::vector<ContinuedFraction::Term> with_one(c.begin(), c.end()), bumped(c.begin(), c.end());
    with_one.push_back(1);
    bumped.back() += 1;
    EXPECT_EQ(eval_cf(ContinuedFraction(with_one)), eval_cf(ContinuedFraction(bumped)));
    auto [num, den] = naive_eval(c);
    EXPECT_EQ(eval_cf(ContinuedFraction(std::vector<ContinuedFraction::Term>(c.begin(), c.end()))), R(num, den));
  }
}

TEST(Involution, Examples) {
  EXPECT_EQ(involution(R(3, 1)), R(3, -2));
  EXPECT_EQ(involution(R(5, 2)), R(5, -3));
  EXPECT_EQ(involution(R(206, 87)), R(206, -119));
  EXPECT_THROW(involution(R(1, 0)), DomainError);
}

TEST(Quantities, Examples) {
  auto a = cf_quantities({2, -2, -4});
  EXPECT_EQ(a.sign_sequence, (std::vector<int>{1, 1, 1, 1, -1, -1, -1, -1}));
  auto b = cf_quantities({2, 3});
  EXPECT_EQ(*b.inner_sign_sequence, (std::vector<int>{1, -1, -1}));
  ContinuedFraction c{2, 3, -4, 2, 3, 1};
  std::vector<int> types;
  for (long i = 1; i <= c.length(); ++i) types.push_back(c.type(i));
  EXPECT_EQ(types, (std::vector<int>{1, -1, -1, -1, 1, -1}));
  EXPECT_EQ(c.type(0), -1);
  auto d = cf_quantities(c);
  EXPECT_EQ(d.ell, (std::vector<long>{0, 2, 5, 9, 11, 14, 15}));
  EXPECT_EQ(d.sign_sequence.size(), 15U);
  EXPECT_EQ(d.inner_sign_sequence->size(), 13U);
  EXPECT_FALSE(cf_quantities({1}).inner_sign_sequence.has_value());
}

TEST(Quantities, Classification) {
  EXPECT_TRUE(ContinuedFraction({2, 3}).is_positive());
  EXPECT_FALSE(ContinuedFraction({2, -3}).is_positive());
  EXPECT_TRUE(ContinuedFraction({2, -4}).is_even());
  EXPECT_FALSE(ContinuedFraction({2, 0}).is_even());
  EXPECT_TRUE(ContinuedFraction({2, 3, -4, 2, 3, 1}).is_poset_valid());
  EXPECT_FALSE(ContinuedFraction({2, -1}).is_poset_valid());  // t1 = t2 = 1 with |c2| = 1
  EXPECT_FALSE(ContinuedFraction({2, 0}).is_poset_valid());
  EXPECT_EQ(parse_cf("2,-3, 4"), ContinuedFraction({2, -3, 4}));
  EXPECT_EQ(parse_cf("[2,2]"), ContinuedFraction({2, 2}));
  EXPECT_THROW(parse_cf("2,,3"), ParseError);
}

TEST(LinkForm, Examples) {
  EXPECT_EQ(std::get<ContinuedFraction>(canonical_link_form(R(3, 1))), ContinuedFraction({-2, 2}));
  EXPECT_EQ(std::get<ContinuedFraction>(canonical_link_form(R(7, 4))), ContinuedFraction({2, -4}));
  EXPECT_TRUE(std::holds_alternative<UnknotMarker>(canonical_link_form(R(1, 0))));
  EXPECT_TRUE(std::holds_alternative<TwoUnlinkMarker>(canonical_link_form(R(0, 1))));
  EXPECT_THROW(canonical_link_form(Integer(4), Integer(6)), NotCoprime);
}

TEST(LinkForm, IndexesAnIsotopicLink) {
  for (long p = 2; p <= 40; ++p) {
    for (long q = -3 * p; q <= 3 * p; ++q) {
      if (q == 0 || gcd_abs(p, q) != 1) continue;
      auto cf = std::get<ContinuedFraction>(canonical_link_form(R(p, q)));
      EXPECT_TRUE(cf.is_even());
      EXPECT_TRUE(link_isotopic(R(p, q), eval_cf(cf)));
      EXPECT_TRUE(link_isotopic_oriented(R(p, q), eval_cf(cf)));
    }
  }
}

TEST(LinkIsotopy, Examples) {
  EXPECT_TRUE(link_isotopic(R(5, 2), R(5, 3)));
  EXPECT_FALSE(link_isotopic(R(3, 1), R(3, 2)));
  EXPECT_TRUE(link_isotopic(R(7, 3), R(7, 3)));
  EXPECT_THROW(link_isotopic(Integer(4), Integer(2), Integer(5), Integer(2)), NotCoprime);
  // Unoriented but not oriented: 3 * 5 = 15 = 1 mod 14, but not mod 28.
  EXPECT_TRUE(link_isotopic(R(14, 3), R(14, 5)));
  EXPECT_FALSE(link_isotopic_oriented(R(14, 3), R(14, 5)));
  EXPECT_TRUE(link_isotopic_oriented(R(14, 3), R(14, 19)));
}

TEST(LinkIsotopy, EquivalenceRelation) {
  for (long p = 1; p <= 50; ++p) {
    std::vector<ExtendedRational> fr;
    for (long q = 1; q <= p; ++q) {
      if (gcd_abs(p, q) == 1) fr.emplace_back(p, q);
    }
    for (const auto& a : fr) {
      EXPECT_TRUE(link_isotopic(a, a));
      for (const auto& b : fr) {
        EXPECT_EQ(link_isotopic(a, b), link_isotopic(b, a));
        if (!link_isotopic(a, b)) continue;
        for (const auto& c : fr) {
          if (link_isotopic(b, c)) { EXPECT_TRUE(link_isotopic(a, c)) << a << ' ' << b << ' ' << c; }
        }
      }
    }
  }
}
