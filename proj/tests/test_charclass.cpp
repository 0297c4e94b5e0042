#include <gtest/gtest.h>

#include <string>

#include "pontclass/charclass.hpp"

using namespace pontclass;

namespace pontclass {
void PrintTo(const group_spec &s, std::ostream *os) { *os << to_token(s); }
} // namespace pontclass

namespace {

rational r(long a, long b = 1) { return make_rational(a, b); }
poly v(std::size_t n, std::size_t i) { return poly::variable(n, i); }

poly sq(std::size_t n, std::size_t from, std::size_t to) {
  poly p(n);
  for (std::size_t i = from; i < to; ++i)
    p += v(n, i) * v(n, i);
  return p;
}

poly quartic(std::size_t n, std::size_t from, std::size_t to) {
  poly p(n);
  for (std::size_t i = from; i < to; ++i)
    p += power(v(n, i), 4);
  return p;
}

// sum_{i<j} x_i^e x_j^e over [from, to).
poly pairs(std::size_t n, std::size_t from, std::size_t to, unsigned e) {
  poly p(n);
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = i + 1; j < to; ++j)
      p += power(v(n, i), e) * power(v(n, j), e);
  return p;
}

poly mixed(std::size_t n, std::size_t a0, std::size_t a1, std::size_t b0,
           std::size_t b1) {
  poly p(n);
  for (std::size_t i = a0; i < a1; ++i)
    for (std::size_t j = b0; j < b1; ++j)
      p += v(n, i) * v(n, j);
  return p;
}

pontryagin_pair pont(const std::string &t) {
  return pontryagin_classes(parse_group(t));
}

std::vector<std::string> names_of(const std::string &t) {
  return reduced_names(get_isotropy_data(parse_group(t)));
}

} // namespace

TEST(TotalChern, Basics) {
  EXPECT_EQ(total_chern({}, 3, 4).truncated_total, poly::constant(3, 1));
  // SU(1,1) before the relation: weights +-(y1 - z1).
  auto d = get_isotropy_data(parse_group("SU:1,1"));
  auto w = v(2, 0) - v(2, 1);
  EXPECT_EQ(total_chern(d).truncated_total, poly::constant(2, 1) - w * w);
  EXPECT_THROW(total_chern({weight{1, 2}}, 3, 4), usage_error);
}

TEST(TotalChern, G2DegreeTwo) {
  auto c = total_chern(get_isotropy_data(parse_group("G2(2)")));
  EXPECT_EQ(c.c(2), -(r(20) * sq(2, 0, 1) + r(4) * sq(2, 1, 2)));
  EXPECT_EQ(c.c(0), poly::constant(2, 1));
}

TEST(Pontryagin, ComplexRejected) {
  EXPECT_THROW(pont("SLC:3"), complex_group_error);
  EXPECT_THROW(total_chern(get_isotropy_data(parse_group("E8C"))),
               complex_group_error);
}

TEST(Golden, SuPq) {
  for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 2}}) {
    auto s = make_spec(family::SU_PQ, {p, q});
    auto d = get_isotropy_data(s);
    std::size_t n = std::size_t(p + q);
    poly want = r(q) * sq(n, 0, std::size_t(p)) + r(p) * sq(n, std::size_t(p), n) -
                r(2) * mixed(n, 0, std::size_t(p), std::size_t(p), n);
    EXPECT_EQ(pontryagin_classes(s).p1, apply_relations(want, d.relations))
        << p << "," << q;
  }
}

TEST(Golden, SpR) {
  for (int n : {2, 3}) {
    std::size_t k = std::size_t(n);
    EXPECT_EQ(pontryagin_classes(make_spec(family::SP_R, {n})).p1,
              r(n + 3) * sq(k, 0, k) + r(2) * pairs(k, 0, k, 1));
  }
}

TEST(Golden, SoPqAllParityCases) {
  for (int p = 2; p <= 7; ++p)
    for (int q = 1; q <= p; ++q) {
      if (p + q < 3)
        continue;
      std::size_t a = std::size_t(p / 2), b = std::size_t(q / 2), n = a + b;
      rational cy = 2 * long(b) + (q % 2), cz = 2 * long(a) + (p % 2);
      auto got = pontryagin_classes(make_spec(family::SO_PQ, {p, q})).p1;
      EXPECT_EQ(got, cy * sq(n, 0, a) + cz * sq(n, a, n)) << p << "," << q;
    }
}

TEST(Golden, SoEqualRankP2) {
  for (int a = 1; a <= 3; ++a) {
    std::size_t k = std::size_t(a), n = 2 * k;
    long c = long(2 * a) * (2 * a - 1) / 2;
    poly want = r(c) * (quartic(n, 0, k) + quartic(n, k, n)) +
                r(4 * a * a) * (pairs(n, 0, k, 2) + pairs(n, k, n, 2));
    poly cross(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = k; j < n; ++j)
        cross += power(v(n, i), 2) * power(v(n, j), 2);
    want += r(4 * a * a - 6) * cross;
    EXPECT_EQ(pontryagin_classes(make_spec(family::SO_PQ, {2 * a, 2 * a})).p2,
              want)
        << a;
  }
}

TEST(Golden, E8Split) {
  auto p = pont("E8(8)");
  EXPECT_EQ(p.p1, r(16) * sq(8, 0, 8));
  EXPECT_EQ(p.p2, r(126) * quartic(8, 0, 8) + r(244) * pairs(8, 0, 8, 2));
}

TEST(Golden, E8m24) {
  EXPECT_EQ(pont("E8(-24)").p1,
            r(12) * sq(8, 0, 6) + r(6) * sq(8, 6, 7) + r(14) * sq(8, 7, 8));
}

// The printed E7(7) values are the raw degree-2 and degree-4 Chern
// components in eight variables, before the relation.
TEST(Golden, E7Split) {
  auto d = get_isotropy_data(parse_group("E7(7)"));
  auto c = total_chern(d);
  poly c2 = r(595) * sq(8, 0, 8) + r(1210) * pairs(8, 0, 8, 1);
  EXPECT_EQ(c.c(2), c2);
  auto M = [](std::vector<int> e) {
    monomial m(8, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      m[i] = exponent(e[i]);
    return m;
  };
  EXPECT_EQ(c.c(4).coefficient(M({4})), 52360);
  EXPECT_EQ(c.c(4).coefficient(M({3, 1})), 220660);
  EXPECT_EQ(c.c(4).coefficient(M({2, 2})), 336790);
  EXPECT_EQ(c.c(4).coefficient(M({2, 1, 1})), 684810);
  EXPECT_EQ(c.c(4).coefficient(M({1, 1, 1, 1})), 1392444);
  // Only those five orbit shapes occur, each with a constant coefficient.
  EXPECT_EQ(c.c(4).size(), std::size_t(8 + 56 + 28 + 168 + 70));
  auto p = pontryagin_classes(d);
  EXPECT_EQ(p.p1, apply_relations(-c2, d.relations));
  EXPECT_EQ(p.p2, apply_relations(c.c(4), d.relations));
}

TEST(Golden, E7Others) {
  EXPECT_EQ(pont("E7(-5)").p1, r(8) * sq(7, 0, 7));
  EXPECT_EQ(pont("E7(-25)").p1,
            r(6) * sq(7, 0, 5) + r(2) * sq(7, 5, 6) + r(3) * sq(7, 6, 7));
}

TEST(Golden, E6Forms) {
  auto p = pont("E6(6)");
  EXPECT_EQ(p.p1, r(14) * sq(4, 0, 4));
  EXPECT_EQ(p.p2, r(91) * quartic(4, 0, 4) + r(166) * pairs(4, 0, 4, 2));

  auto d = get_isotropy_data(parse_group("E6(2)"));
  poly raw = r(10) * sq(7, 0, 6) + r(20) * sq(7, 6, 7) + r(8) * pairs(7, 0, 6, 1);
  EXPECT_EQ(pontryagin_classes(d).p1, apply_relations(raw, d.relations));

  EXPECT_EQ(pont("E6(-14)").p1, r(4) * sq(6, 0, 5) + r(144) * sq(6, 5, 6));
}

TEST(Golden, F4AndG2) {
  EXPECT_EQ(pont("F4(4)").p1, r(14) * sq(4, 0, 1) + r(10) * sq(4, 1, 4));
  auto f = pont("F4(-20)");
  EXPECT_EQ(f.p1, r(2) * sq(4, 0, 4));
  EXPECT_EQ(f.p2, r(7, 4) * quartic(4, 0, 4) + r(5, 2) * pairs(4, 0, 4, 2));
  EXPECT_EQ(pont("G2(2)").p1, r(20) * sq(2, 0, 1) + r(4) * sq(2, 1, 2));
}

TEST(Render, GoldenStrings) {
  EXPECT_EQ(render(pont("G2(2)").p1, names_of("G2(2)")), "20*y1^2 + 4*y2^2");
  EXPECT_EQ(render(pont("F4(-20)").p2, names_of("F4(-20)")),
            "7/4*y1^4 + 5/2*y1^2*y2^2 + 5/2*y1^2*y3^2 + 5/2*y1^2*y4^2 + "
            "7/4*y2^4 + 5/2*y2^2*y3^2 + 5/2*y2^2*y4^2 + 7/4*y3^4 + "
            "5/2*y3^2*y4^2 + 7/4*y4^4");
}

class ChernProperty : public ::testing::TestWithParam<group_spec> {};

TEST_P(ChernProperty, OddComponentsVanish) {
  auto c = reduced_chern(get_isotropy_data(GetParam()));
  EXPECT_TRUE(c.c(1).is_zero());
  EXPECT_TRUE(c.c(3).is_zero());
  EXPECT_EQ(c.c(0), poly::constant(c.arity, 1));
}

// For a negation-closed multiset prod(1 + w) = prod over pairs (1 - w^2), so
// p1 and p2 are the first two elementary symmetric functions of the w^2 over
// pairs: p1 = S2/2, p2 = S2^2/8 - S4/4 with S_k = sum over all weights w^k.
TEST_P(ChernProperty, PowerSumFormulas) {
  auto d = get_isotropy_data(GetParam());
  auto forms = reduced_weight_forms(d);
  std::size_t n = d.arity() - d.relations.size();
  poly s2(n), s4(n);
  for (const auto &f : forms) {
    auto f2 = f * f;
    s2 += f2;
    s4 += f2 * f2;
  }
  auto p = pontryagin_classes(d);
  EXPECT_EQ(p.p1, r(1, 2) * s2);
  EXPECT_EQ(p.p2, r(1, 8) * s2 * s2 - r(1, 4) * s4);
}

TEST_P(ChernProperty, SymmetryInvariant) {
  auto d = get_isotropy_data(GetParam());
  if (!d.relations.empty())
    GTEST_SKIP() << "symmetries act before relation elimination";
  auto p = pontryagin_classes(d);
  for (const auto &s : d.symmetries) {
    EXPECT_EQ(apply(s, p.p1), p.p1);
    EXPECT_EQ(apply(s, p.p2), p.p2);
  }
}

TEST_P(ChernProperty, RawSymmetryInvariant) {
  auto d = get_isotropy_data(GetParam());
  auto c = total_chern(d);
  for (const auto &s : d.symmetries)
    EXPECT_EQ(apply(s, c.truncated_total), c.truncated_total);
}

TEST_P(ChernProperty, OrderIndependent) {
  auto d = get_isotropy_data(GetParam());
  auto rev = d.weights;
  std::reverse(rev.begin(), rev.end());
  EXPECT_EQ(total_chern(rev, d.arity(), 4).truncated_total,
            total_chern(d).truncated_total);
}

std::vector<group_spec> real_catalog() {
  std::vector<group_spec> out;
  for (const auto &s : catalog())
    if (!s.is_complex())
      out.push_back(s);
  return out;
}

INSTANTIATE_TEST_SUITE_P(
    Sweep, ChernProperty, ::testing::ValuesIn(real_catalog()),
    [](const ::testing::TestParamInfo<group_spec> &i) {
      std::string s;
      for (char c : to_token(i.param))
        s += std::isalnum(static_cast<unsigned char>(c)) ? c
             : c == '-'                                   ? 'm'
                                                          : '_';
      return s;
    });
