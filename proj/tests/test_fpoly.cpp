#include <gtest/gtest.h>

#include "ratknot/fpoly.hpp"
#include "ratknot/verify.hpp"

using namespace ratknot;

TEST(FPoly, Golden) {
  MultiPoly brute = f_poly_brute(poset_from_cf({2, 2}));
  EXPECT_EQ(format_fpoly(brute), "1 + y1 + y3 + y1*y3 + y1*y2*y3");
  EXPECT_EQ(f_poly_recursive({2, 2}), brute);
  EXPECT_EQ(format_fpoly(f_poly_recursive({2, -2})), "1 + y3 + y1*y3");
}

TEST(FPoly, SmallCases) {
  EXPECT_EQ(format_fpoly(f_poly_recursive(ContinuedFraction())), "1");
  EXPECT_EQ(format_fpoly(f_poly_recursive({1})), "1");
  EXPECT_EQ(format_fpoly(f_poly_recursive({3})), "1 + y1 + y1*y2");
  EXPECT_EQ(format_fpoly(f_poly_recursive({-3})), "1 + y2 + y1*y2");
  EXPECT_EQ(fpoly_arity({2, 3, -4}), 8);
  EXPECT_THROW(f_poly_recursive({2, -1}), InvalidCF);
}

TEST(FPoly, Diamond) {
  HassePoset diamond{{1, 2, 3, 4}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}};
  EXPECT_EQ(format_fpoly(f_poly_brute(diamond)), "1 + y1 + y1*y2 + y1*y3 + y1*y2*y3 + y1*y2*y3*y4");
}

TEST(FPoly, SegmentClosedForm) {
  EXPECT_EQ(format_fpoly(f_segment({3, -5}, 2)), "1 + y4 + y4*y5 + y4*y5*y6 + y4*y5*y6*y7");
  EXPECT_EQ(format_fpoly(f_segment({3, 5}, 2)), "1 + y7 + y6*y7 + y5*y6*y7 + y4*y5*y6*y7");
  EXPECT_EQ(format_fpoly(f_segment({2, 1, 2}, 2)), "1");
  EXPECT_THROW(f_segment({2}, 2), IndexError);
}

TEST(FPoly, RecursionMatchesBrute) {
  for (const auto& x : expansions(40)) {
    auto r = checks::recursion_matches_brute(x);
    EXPECT_FALSE(r.has_value()) << *r;
    auto c = checks::numerator_count(x);
    EXPECT_FALSE(c.has_value()) << *c;
  }
}

TEST(FPoly, TermSweepIncludingOddTerms) {
  for (const auto& cf : term_sweep({1, -1, 2, -2, 3, -3}, 4)) {
    if (!cf.is_poset_valid()) continue;
    EXPECT_EQ(f_poly_recursive(cf), f_poly_brute(poset_from_cf(cf))) << cf;
  }
}

TEST(FPoly, Specializations) {
  auto p = Specialization::homfly(1);
  EXPECT_EQ(p.value(1), FieldElem::monomial(2, 0) / FieldElem::w());
  EXPECT_EQ(Specialization::homfly(-1).value(1), FieldElem::monomial(0, -4) * FieldElem::w());
  EXPECT_EQ(p.value(2), FieldElem::monomial(2, 2, -1));
  EXPECT_EQ(p.value(3), FieldElem::monomial(0, -2, -1));
  EXPECT_EQ(Specialization::alexander().value(4), FieldElem::monomial(0, 2, -1));
  EXPECT_EQ(Specialization::jones().value(1), FieldElem::monomial(0, -4));
  // The recursion on specialized values agrees with substituting into F.
  for (const auto& cf : even_sweep(3)) {
    auto spec = Specialization::homfly(cf[1] > 0 ? 1 : -1);
    MultiPoly f = f_poly_recursive(cf);
    EXPECT_EQ(specialize_recursive(cf, spec), specialize_f(f, spec)) << cf;
    EXPECT_EQ(alexander_specialized_f(cf).to_field(), specialize_f(f, Specialization::alexander())) << cf;
  }
}

TEST(FPoly, SpecializedRecursion) {
  for (const auto& cf : even_sweep(4)) {
    auto r = checks::specialization_identities(cf, true);
    EXPECT_FALSE(r.has_value()) << *r;
  }
  EXPECT_THROW(recursion_coefficients({2, 2}, 1), IndexError);
  EXPECT_THROW(f_tilde_recursive({2, 3}), InvalidCF);
  EXPECT_EQ(f_tilde_recursive(ContinuedFraction()), FieldElem(1));
}

TEST(FPoly, EvaluateAtOnes) {
  EXPECT_EQ(evaluate_at_ones(f_poly_recursive(positive_cf(ExtendedRational(206, 87)))), 206);
  EXPECT_EQ(evaluate_at_ones(f_poly_recursive(even_cf(ExtendedRational(206, 87)))), 206);
}

TEST(FPoly, FirstTermExtension) {
  const FieldElem one(1), q = FieldElem::q(), winv = FieldElem::w().inverse();
  for (long b = 2; b <= 12; b += 2) {
    EXPECT_EQ(f_tilde_recursive({b + 2}), f_tilde_recursive({b}) + FieldElem::l().pow(b + 2) * winv * (one - q)) << b;
    EXPECT_EQ(f_tilde_recursive({-b - 2}), FieldElem::monomial(2, 0) * f_tilde_recursive({-b}) + one - q.inverse()) << -b;
  }
}
