#include <gtest/gtest.h>

#include <random>

#include "pontclass/poly.hpp"
#include "random_poly.hpp"

using namespace pontclass;
using pontclass::testing::evaluate_at;
using pontclass::testing::random_poly;

namespace {

poly x(std::size_t n, std::size_t i) { return poly::variable(n, i); }
poly one(std::size_t n) { return poly::constant(n, 1); }
rational r(long a, long b = 1) { return make_rational(a, b); }

} // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(r(6, -4)), "-3/2");
  EXPECT_EQ(to_string(r(0, 5)), "0");
  EXPECT_EQ(r(0, 7).get_den(), 1);
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(make_rational(1, 0), usage_error);
  EXPECT_THROW(parse_rational("1/0"), usage_error);
  EXPECT_THROW(parse_rational("abc"), usage_error);
}

TEST(Rational, Height) {
  EXPECT_EQ(height(r(1)), 2u);
  EXPECT_EQ(height(r(255, 2)), 10u);
  EXPECT_LT(height(r(1, 2)), height(r(1023, 1024)));
}

TEST(PolyAdd, Examples) {
  EXPECT_TRUE((x(1, 0) + (-x(1, 0))).is_zero());
  auto y2 = x(1, 0) * x(1, 0);
  EXPECT_EQ(one(1) + y2 + y2, one(1) + r(2) * y2);
  auto h = r(1, 2) * x(2, 0) * x(2, 1);
  EXPECT_EQ(render(h + h), "x1*x2");
  EXPECT_THROW(x(1, 0) + x(2, 0), usage_error);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(poly_mul(one(1) + x(1, 0), one(1) - x(1, 0)),
            one(1) - x(1, 0) * x(1, 0));
  EXPECT_TRUE(poly_mul(x(2, 0) + x(2, 1), poly(2)).is_zero());
  EXPECT_EQ(render(poly_mul(x(2, 0) + x(2, 1), x(2, 0) - x(2, 1))),
            "x1^2 - x2^2");
  EXPECT_THROW(poly_mul(x(1, 0), x(3, 0)), usage_error);
}

TEST(PolyMulTruncated, Examples) {
  auto p = one(1) + x(1, 0);
  EXPECT_EQ(render(poly_mul_truncated(p, p, 1)), "1 + 2*x1");
  auto s = x(2, 0) + x(2, 1), d = x(2, 0) - x(2, 1);
  auto got = poly_mul_truncated(one(2) - s * s, one(2) - d * d, 4);
  EXPECT_EQ(render(got), "1 - 2*x1^2 - 2*x2^2 + x1^4 - 2*x1^2*x2^2 + x2^4");
}

TEST(PolyMulTruncated, MatchesFullProductOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng, 4, 6, 10), b = random_poly(rng, 4, 6, 10);
    EXPECT_EQ(poly_mul_truncated(a, b, 4), truncate(poly_mul(a, b), 4));
  }
}

TEST(PolyMul, AgreesWithPointEvaluation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-7, 7);
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(rng, 3, 5, 8), b = random_poly(rng, 3, 5, 8);
    std::vector<rational> pt{r(v(rng), 3), r(v(rng)), r(v(rng), 2)};
    EXPECT_EQ(evaluate_at(a * b, pt), evaluate_at(a, pt) * evaluate_at(b, pt));
    EXPECT_EQ(evaluate_at(a + b, pt), evaluate_at(a, pt) + evaluate_at(b, pt));
  }
}

TEST(SubstituteLinear, Examples) {
  // ring (y1, z1); z1 := -y1
  auto y = x(2, 0), z = x(2, 1);
  auto sq = (y - z) * (y - z);
  EXPECT_EQ(render(substitute_linear(sq, 1, -y)), "4*x1^2");

  poly sum(8);
  for (std::size_t i = 0; i < 8; ++i)
    sum += x(8, i);
  poly rel(8);
  for (std::size_t i = 0; i < 7; ++i)
    rel -= x(8, i);
  EXPECT_TRUE(substitute_linear(sum, 7, rel).is_zero());

  auto p = x(3, 0) * x(3, 1) + poly::constant(3, 2);
  auto q = substitute_linear(p, 2, x(3, 0));
  EXPECT_EQ(q.arity(), 2u);
  EXPECT_EQ(render(q), "2 + x1*x2");
}

TEST(SubstituteLinear, RejectsBadReplacement) {
  auto y = x(2, 0), z = x(2, 1);
  EXPECT_THROW(substitute_linear(y, 1, z), usage_error);
  EXPECT_THROW(substitute_linear(y, 1, y * y), usage_error);
  EXPECT_THROW(substitute_linear(y, 5, y), usage_error);
}

TEST(GradedComponent, Examples) {
  auto y = x(1, 0);
  auto p = one(1) - r(2) * y * y + y * y * y * y;
  EXPECT_EQ(graded_component(p, 2), r(-2) * y * y);
  EXPECT_TRUE(graded_component(one(1) - r(4) * y * y, 1).is_zero());
  poly sum(1);
  for (unsigned d = 0; d <= 4; ++d)
    sum += graded_component(p, d);
  EXPECT_EQ(sum, p);
}

TEST(MonomialsOfDegree, OrderAndCount) {
  auto m = monomials_of_degree(2, 2);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(render(poly::term(m[0], 1)), "x1^2");
  EXPECT_EQ(render(poly::term(m[1], 1)), "x1*x2");
  EXPECT_EQ(render(poly::term(m[2], 1)), "x2^2");
  EXPECT_EQ(monomials_of_degree(8, 4).size(), 330u);
  EXPECT_EQ(monomials_of_degree(5, 0).size(), 1u);
  EXPECT_THROW(monomials_of_degree(0, 2), usage_error);
  for (std::size_t n = 1; n <= 5; ++n)
    for (unsigned d = 0; d <= 5; ++d) {
      auto ms = monomials_of_degree(n, d);
      EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(), grlex_less{}));
    }
}

TEST(CoeffVector, Examples) {
  auto p = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
  auto v = coeff_vector(p, 2);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], 1);
  EXPECT_EQ(v[1], 0);
  EXPECT_EQ(v[2], -1);
  for (const auto &c : coeff_vector(poly(3), 2))
    EXPECT_EQ(c, 0);
  EXPECT_EQ(from_coeff_vector(v, 2, 2), p);
  EXPECT_THROW(coeff_vector(p + one(2), 2), usage_error);
}

TEST(Render, Canonical) {
  auto y1 = x(2, 0), y2 = x(2, 1);
  EXPECT_EQ(render(r(-3, 4) * y1 * y1 + y1 * y2, {"y1", "y2"}),
            "-3/4*y1^2 + y1*y2");
  EXPECT_EQ(render(poly(2)), "0");
  EXPECT_EQ(render(-one(2)), "-1");
  EXPECT_THROW(render(y1, {"a"}), usage_error);
}

TEST(Proportional, Basics) {
  auto p = x(2, 0) * x(2, 0) + r(3) * x(2, 1) * x(2, 1);
  EXPECT_TRUE(proportional(p, r(-2, 7) * p));
  EXPECT_FALSE(proportional(p, p + x(2, 0) * x(2, 1)));
  EXPECT_FALSE(proportional(p, poly(2)));
}

TEST(MicroSuite, ThousandRandomCases) {
  auto res = pontclass::testing::run_micro_suite(20240611, 200);
  EXPECT_GE(res.cases, 1000u);
  EXPECT_EQ(res.failures, 0u);
}
