#include <gtest/gtest.h>

#include "pontclass/classify.hpp"

using namespace pontclass;

namespace pontclass {
void PrintTo(const group_spec &s, std::ostream *os) { *os << to_token(s); }
} // namespace pontclass

namespace {

vanishing_report cl(const std::string &t, bool certs = false) {
  classify_options o;
  o.certificates = certs;
  return classify(parse_group(t), o);
}

const std::vector<vanishing_report> &sweep() {
  static const auto rows = [] {
    classify_options o;
    o.certificates = true;
    return theorem_table({}, 4, o);
  }();
  return rows;
}

} // namespace

TEST(Classify, SpecExamples) {
  EXPECT_FALSE(cl("SO:5,3").p1_vanishes);
  auto so33 = cl("SO:3,3");
  EXPECT_TRUE(so33.p1_vanishes);
  EXPECT_TRUE(so33.p2_vanishes);
  auto e77 = cl("E7(7)");
  EXPECT_TRUE(e77.p1_vanishes);
  EXPECT_FALSE(e77.p2_vanishes);
  auto sl5 = cl("SL:5");
  EXPECT_TRUE(sl5.p1_vanishes && sl5.p2_vanishes);
  EXPECT_EQ(sl5.via, route::IDEAL_TEST);
  auto slc = cl("SLC:3");
  EXPECT_EQ(slc.via, route::COMPLEX_RULE);
  EXPECT_TRUE(slc.in_theorem_1_1_list);
  EXPECT_TRUE(cl("E6(-26)").in_theorem_1_1_list);
  EXPECT_FALSE(cl("SO*:4").p1_vanishes);
}

TEST(Classify, ProductExamples) {
  auto P = [](std::vector<std::string> ts) {
    std::vector<group_spec> s;
    for (auto &t : ts)
      s.push_back(parse_group(t));
    return classify_product(s);
  };
  EXPECT_TRUE(P({"SL:3", "E6(-26)"}).all_vanish);
  auto g = P({"SL:3", "G2(2)"});
  EXPECT_FALSE(g.all_vanish);
  EXPECT_FALSE(g.factors[1].p1_vanishes);
  EXPECT_FALSE(P({"E8(8)"}).all_vanish);
  EXPECT_THROW(classify_product({}), usage_error);
}

// Published membership facts for individual forms.
TEST(Classify, MembershipVerdicts) {
  for (const char *t : {"SO:2,2", "SO:3,3"}) {
    auto r = cl(t);
    auto y1 = poly::variable(r.p1_poly.arity(), 0);
    EXPECT_TRUE(is_in_ideal({r.kernel_gens, power(y1, 4), 4}).in_ideal) << t;
  }
  for (const char *t : {"E8(8)", "E7(7)", "E6(6)"}) {
    auto r = cl(t);
    std::size_t n = r.names.size();
    poly s4(n);
    for (std::size_t i = 0; i < n; ++i)
      s4 += power(poly::variable(n, i), 4);
    EXPECT_FALSE(is_in_ideal({r.kernel_gens, s4, 4}).in_ideal) << t;
  }
  for (const char *t : {"E8(-24)", "E7(-5)", "E7(-25)", "E6(2)", "E6(-14)",
                        "F4(4)", "G2(2)"}) {
    auto r = cl(t);
    std::size_t n = r.names.size();
    auto y = poly::variable(n, n - 1);
    EXPECT_FALSE(is_in_ideal({r.kernel_gens, y * y, 2}).in_ideal) << t;
  }
  auto f = cl("F4(-20)");
  poly cross(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      cross += power(poly::variable(4, i), 2) * power(poly::variable(4, j), 2);
  EXPECT_FALSE(is_in_ideal({f.kernel_gens, cross, 4}).in_ideal);
}

TEST(Sweep, AgreesWithPublishedList) {
  const auto &rows = sweep();
  EXPECT_EQ(rows.size(), catalog().size());
  for (const auto &r : rows)
    EXPECT_TRUE(agrees_with_theorem(r)) << to_token(r.spec);
}

TEST(Sweep, OrthogonalFamilyLaw) {
  for (const auto &r : sweep()) {
    if (r.spec.fam != family::SO_PQ)
      continue;
    int p = r.spec.params[0], q = r.spec.params[1];
    if (q >= 2) {
      EXPECT_EQ(r.p1_vanishes, p == q) << p << "," << q;
    }
    if (p == q && p >= 4) {
      EXPECT_FALSE(r.p2_vanishes) << p;
    }
    if (p + q <= 8) {
      bool want = q == 1 || (p == q && (p == 2 || p == 3));
      EXPECT_EQ(r.in_theorem_1_1_list, want) << p << "," << q;
    }
  }
}

TEST(Sweep, SymplecticMirrorsOrthogonal) {
  int seen = 0;
  for (const auto &r : sweep()) {
    if (r.spec.fam != family::SP_PQ)
      continue;
    int p = r.spec.params[0], q = r.spec.params[1];
    auto so = classify(make_spec(family::SO_PQ, {2 * p, 2 * q}));
    EXPECT_EQ(r.p1_vanishes, so.p1_vanishes) << p << "," << q;
    EXPECT_EQ(r.p2_vanishes, so.p2_vanishes) << p << "," << q;
    ++seen;
  }
  EXPECT_GT(seen, 3);
}

TEST(Sweep, IsogenousPairs) {
  for (auto [a, b] : {std::pair{"SU:1,1", "SO:2,1"}, {"Sp:1,1", "SO:4,1"}}) {
    auto x = cl(a), y = cl(b);
    EXPECT_EQ(x.p1_vanishes, y.p1_vanishes);
    EXPECT_EQ(x.p2_vanishes, y.p2_vanishes);
    EXPECT_TRUE(x.in_theorem_1_1_list && y.in_theorem_1_1_list);
  }
}

TEST(Sweep, DimensionConsistency) {
  int hit = 0;
  for (const auto &r : sweep()) {
    if (4 > r.dim_M) {
      EXPECT_TRUE(r.p1_vanishes) << to_token(r.spec);
      ++hit;
    }
    if (8 > r.dim_M) {
      EXPECT_TRUE(r.p2_vanishes) << to_token(r.spec);
      ++hit;
    }
  }
  EXPECT_GT(hit, 0);
  EXPECT_TRUE(cl("SO:2,2").p2_vanishes);
}

TEST(Sweep, CertificatesSound) {
  int positives = 0;
  for (const auto &r : sweep()) {
    if (r.via == route::COMPLEX_RULE)
      continue;
    for (auto [v, cert, target] :
         {std::tuple{r.p1_vanishes, &r.p1_certificate, &r.p1_poly},
          {r.p2_vanishes, &r.p2_certificate, &r.p2_poly}}) {
      ASSERT_TRUE(cert->has_value());
      EXPECT_EQ((*cert)->in_ideal, v);
      if (!v)
        continue;
      ++positives;
      EXPECT_EQ(recombine(r.kernel_gens, (*cert)->certificate,
                          target->arity()),
                *target)
          << to_token(r.spec);
    }
  }
  EXPECT_GT(positives, 20);
}

TEST(Sweep, ScalingInvariance) {
  std::vector<std::string> ts{"SO:4,4", "SO:3,3", "SL:6", "E7(7)", "E8(8)",
                              "Sp:2,1", "SU:3,2", "G2(2)"};
  for (const auto &t : ts) {
    auto s = parse_group(t);
    auto d = get_isotropy_data(s);
    classify_options o;
    std::vector<poly> scaled;
    long k = 2;
    for (const auto &g : d.kernel_gens)
      scaled.push_back(make_rational(-k++, 5) * g);
    o.kernel_override = scaled;
    auto a = classify(s), b = classify(s, o);
    EXPECT_EQ(a.p1_vanishes, b.p1_vanishes) << t;
    EXPECT_EQ(a.p2_vanishes, b.p2_vanishes) << t;
  }
}

TEST(Sweep, ParallelMatchesSerial) {
  auto specs = catalog({6, 4});
  auto a = classify_all(specs, 1), b = classify_all(specs, 8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(to_token(a[i].spec), to_token(b[i].spec));
    EXPECT_EQ(a[i].p1_vanishes, b[i].p1_vanishes);
    EXPECT_EQ(a[i].p2_vanishes, b[i].p2_vanishes);
    EXPECT_EQ(a[i].p1_poly, b[i].p1_poly);
  }
}

TEST(Sweep, ListFlagIsConjunction) {
  for (const auto &r : sweep())
    EXPECT_EQ(r.in_theorem_1_1_list, r.p1_vanishes && r.p2_vanishes);
}
