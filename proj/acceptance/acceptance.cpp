// Acceptance suite: one PASS/FAIL line per criterion, all tolerances exact.
//
// Exit status is 0 when every failing sub-check is in the known-deviation
// list below, 1 otherwise. With --strict any FAIL gives exit 1.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pontclass/pontclass.hpp"
#include "random_poly.hpp"

using namespace pontclass;

namespace {

struct sub_check {
  std::string name;
  bool ok;
};

struct criterion {
  int id;
  std::string title;
  std::vector<sub_check> checks;
  void add(std::string n, bool ok) { checks.push_back({std::move(n), ok}); }
};

// Sub-checks that fail for a documented reason and do not fail the run.
const std::set<std::pair<int, std::string>> known_deviations{
    {3, "pin E6(-14)"}};

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

poly pairs(std::size_t n, std::size_t from, std::size_t to, unsigned e) {
  poly p(n);
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = i + 1; j < to; ++j)
      p += power(v(n, i), e) * power(v(n, j), e);
  return p;
}

pontryagin_pair pont(const std::string &t) {
  return pontryagin_classes(parse_group(t));
}

criterion sweep_agreement() {
  criterion c{1, "published vanishing list reproduced over the sweep", {}};
  auto specs = catalog();
  auto t0 = std::chrono::steady_clock::now();
  auto rows = classify_all(specs, 1);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  std::size_t bad = 0, exceptional = 0;
  std::set<std::string> complex_bases;
  for (const auto &row : rows) {
    if (!agrees_with_theorem(row)) {
      ++bad;
      c.add("verdict " + to_token(row.spec), false);
    }
    if (is_exceptional(row.spec))
      ++exceptional;
    if (row.spec.is_complex())
      complex_bases.insert(to_token(row.spec).substr(0, 3));
  }
  c.add("all " + std::to_string(rows.size()) + " verdicts agree", bad == 0);
  c.add("12 exceptional real forms", exceptional == 12);
  c.add("8 complex families", complex_bases.size() == 8);
  c.add("single-threaded sweep " + std::to_string(secs).substr(0, 5) +
            " s < 60 s",
        secs < 60);
  return c;
}

criterion golden_polynomials() {
  criterion c{2, "Pontryagin polynomial golden values", {}};
  for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 2}}) {
    auto s = make_spec(family::SU_PQ, {p, q});
    auto d = get_isotropy_data(s);
    std::size_t n = std::size_t(p + q), a = std::size_t(p);
    poly cross(n);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = a; j < n; ++j)
        cross += v(n, i) * v(n, j);
    poly want = r(q) * sq(n, 0, a) + r(p) * sq(n, a, n) - r(2) * cross;
    c.add("SU:" + std::to_string(p) + "," + std::to_string(q) + " p1",
          pontryagin_classes(d).p1 == apply_relations(want, d.relations));
  }
  for (int n : {2, 3}) {
    std::size_t k = std::size_t(n);
    c.add("SpR:" + std::to_string(n) + " p1",
          pontryagin_classes(make_spec(family::SP_R, {n})).p1 ==
              r(n + 3) * sq(k, 0, k) + r(2) * pairs(k, 0, k, 1));
  }
  for (auto [p, q] : {std::pair{4, 2}, {5, 2}, {4, 3}, {5, 3}}) {
    std::size_t a = std::size_t(p / 2), b = std::size_t(q / 2), n = a + b;
    rational cy = 2 * long(b) + (q % 2), cz = 2 * long(a) + (p % 2);
    c.add("SO:" + std::to_string(p) + "," + std::to_string(q) + " p1",
          pontryagin_classes(make_spec(family::SO_PQ, {p, q})).p1 ==
              cy * sq(n, 0, a) + cz * sq(n, a, n));
  }
  auto e8 = pont("E8(8)");
  c.add("E8(8) p1", e8.p1 == r(16) * sq(8, 0, 8));
  c.add("E8(8) p2",
        e8.p2 == r(126) * quartic(8, 0, 8) + r(244) * pairs(8, 0, 8, 2));
  c.add("E8(-24) p1", pont("E8(-24)").p1 == r(12) * sq(8, 0, 6) +
                                                r(6) * sq(8, 6, 7) +
                                                r(14) * sq(8, 7, 8));
  {
    // printed as the raw degree-2 and degree-4 components in 8 variables
    auto d = get_isotropy_data(parse_group("E7(7)"));
    auto ch = total_chern(d);
    poly c2 = r(595) * sq(8, 0, 8) + r(1210) * pairs(8, 0, 8, 1);
    c.add("E7(7) degree-2 coefficients 595/1210", ch.c(2) == c2);
    auto M = [](std::vector<int> e) {
      monomial m(8, 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        m[i] = exponent(e[i]);
      return m;
    };
    const auto &c4 = ch.c(4);
    c.add("E7(7) degree-4 coefficients",
          c4.coefficient(M({4})) == 52360 &&
              c4.coefficient(M({3, 1})) == 220660 &&
              c4.coefficient(M({2, 2})) == 336790 &&
              c4.coefficient(M({2, 1, 1})) == 684810 &&
              c4.coefficient(M({1, 1, 1, 1})) == 1392444 &&
              c4.size() == 8 + 56 + 28 + 168 + 70);
    auto pp = pontryagin_classes(d);
    c.add("E7(7) p1, p2 are their reductions",
          pp.p1 == apply_relations(-c2, d.relations) &&
              pp.p2 == apply_relations(c4, d.relations));
  }
  c.add("E7(-5) p1", pont("E7(-5)").p1 == r(8) * sq(7, 0, 7));
  c.add("E7(-25) p1", pont("E7(-25)").p1 == r(6) * sq(7, 0, 5) +
                                                r(2) * sq(7, 5, 6) +
                                                r(3) * sq(7, 6, 7));
  auto e66 = pont("E6(6)");
  c.add("E6(6) p1", e66.p1 == r(14) * sq(4, 0, 4));
  c.add("E6(6) p2",
        e66.p2 == r(91) * quartic(4, 0, 4) + r(166) * pairs(4, 0, 4, 2));
  {
    auto d = get_isotropy_data(parse_group("E6(2)"));
    poly raw = r(10) * sq(7, 0, 6) + r(20) * sq(7, 6, 7) +
               r(8) * pairs(7, 0, 6, 1);
    c.add("E6(2) p1",
          pontryagin_classes(d).p1 == apply_relations(raw, d.relations));
  }
  c.add("E6(-14) p1",
        pont("E6(-14)").p1 == r(4) * sq(6, 0, 5) + r(144) * sq(6, 5, 6));
  c.add("F4(4) p1",
        pont("F4(4)").p1 == r(14) * sq(4, 0, 1) + r(10) * sq(4, 1, 4));
  auto f = pont("F4(-20)");
  c.add("F4(-20) p1", f.p1 == r(2) * sq(4, 0, 4));
  c.add("F4(-20) p2", f.p2 == r(7, 4) * quartic(4, 0, 4) +
                                  r(5, 2) * pairs(4, 0, 4, 2));
  c.add("G2(2) p1",
        pont("G2(2)").p1 == r(20) * sq(2, 0, 1) + r(4) * sq(2, 1, 2));
  return c;
}

criterion kernel_generators() {
  criterion c{3, "kernel generators recomputed up to scalar", {}};
  for (const auto &s : exceptional_specs()) {
    auto d = get_isotropy_data(s);
    c.add("curated " + to_token(s),
          proportional(
              apply_relations(recompute_kernel_generator(s), d.relations),
              apply_relations(curated_kernel_generator(s), d.relations)));
  }
  auto pin = [&](const std::string &t, const poly &want) {
    c.add("pin " + t,
          proportional(
              recompute_kernel_generator_as_tabulated(parse_group(t)), want));
  };
  pin("E8(-24)", r(30) * sq(8, 0, 6) + r(15) * sq(8, 6, 8));
  pin("E7(-5)", r(6) * (sq(7, 0, 6) + r(2) * sq(7, 6, 7)));
  pin("E7(-25)", r(6) * sq(7, 0, 5) + r(2) * sq(7, 5, 6) + sq(7, 6, 7));
  pin("E6(6)", r(12) * sq(4, 0, 4));
  pin("E6(-14)", r(6) * sq(6, 0, 5) + r(3) * sq(6, 5, 6));
  pin("F4(4)", r(6) * sq(4, 0, 4));
  pin("G2(2)", r(2) * (r(3) * sq(2, 0, 1) + sq(2, 1, 2)));
  return c;
}

criterion membership_verdicts() {
  criterion c{4, "individual membership verdicts", {}};
  auto gens = [](const std::string &t) { return classify(parse_group(t)); };
  for (const char *t : {"SO:2,2", "SO:3,3"}) {
    auto rep = gens(t);
    auto y1 = v(rep.names.size(), 0);
    c.add(std::string("y1^4 in ideal for ") + t,
          is_in_ideal({rep.kernel_gens, power(y1, 4), 4}).in_ideal);
  }
  for (const char *t : {"E8(8)", "E7(7)", "E6(6)"}) {
    auto rep = gens(t);
    std::size_t n = rep.names.size();
    c.add(std::string("sum y^4 not in ideal for ") + t,
          !is_in_ideal({rep.kernel_gens, quartic(n, 0, n), 4}).in_ideal);
  }
  for (const char *t : {"E8(-24)", "E7(-5)", "E7(-25)", "E6(2)", "E6(-14)",
                        "F4(4)", "G2(2)"}) {
    auto rep = gens(t);
    std::size_t n = rep.names.size();
    c.add(std::string("last y^2 not in ideal for ") + t,
          !is_in_ideal({rep.kernel_gens, sq(n, n - 1, n), 2}).in_ideal);
  }
  auto f = gens("F4(-20)");
  c.add("sum y_i^2 y_j^2 not in ideal for F4(-20)",
        !is_in_ideal({f.kernel_gens, pairs(4, 0, 4, 2), 4}).in_ideal);
  return c;
}

bool negation_closed(const std::vector<poly> &forms) {
  std::map<std::string, int> count;
  for (const auto &f : forms)
    ++count[render(f)];
  for (const auto &f : forms)
    if (count[render(f)] != count[render(-f)])
      return false;
  return true;
}

criterion property_suite() {
  criterion c{5, "property suite (a)-(j)", {}};
  bool a = true, b = true, cc = true, d = true, e = true, f = true;
  int f_groups = 0;
  for (const auto &s : catalog()) {
    if (s.is_complex())
      continue;
    auto data = get_isotropy_data(s);
    a = a && int(data.weights.size()) + data.zero_weight_count ==
                 dim_symmetric_space(s);
    auto forms = reduced_weight_forms(data);
    b = b && negation_closed(forms);
    auto red = reduced_chern(data);
    cc = cc && red.c(1).is_zero() && red.c(3).is_zero();
    std::size_t n = data.arity() - data.relations.size();
    poly s2(n);
    for (const auto &w : forms)
      s2 += w * w;
    auto pp = pontryagin_classes(data);
    d = d && pp.p1 == r(1, 2) * s2;
    auto raw = total_chern(data).truncated_total;
    for (const auto &g : data.symmetries) {
      e = e && apply(g, raw) == raw;
      if (data.relations.empty())
        e = e && apply(g, pp.p1) == pp.p1 && apply(g, pp.p2) == pp.p2;
    }
    if (data.weights.size() <= 32) {
      f = f && untruncated_agrees(s);
      ++f_groups;
    }
  }
  c.add("(a) weight count plus zeros equals dim", a);
  c.add("(b) weights negation-closed", b);
  c.add("(c) c1 = c3 = 0", cc);
  c.add("(d) p1 = half the sum of squared weights", d);
  c.add("(e) symmetry invariance", e);
  c.add("(f) truncated equals untruncated on " + std::to_string(f_groups) +
            " groups",
        f);

  bool g = true;
  for (const auto &s : catalog())
    if (!s.is_complex() && parity_variant_applicable(s))
      g = g && parity_variant_check(s);
  c.add("(g) parity variants agree", g);

  bool h = true;
  for (auto [x, y] : {std::pair{"SU:1,1", "SO:2,1"}, {"Sp:1,1", "SO:4,1"}}) {
    auto rx = classify(parse_group(x)), ry = classify(parse_group(y));
    h = h && rx.p1_vanishes == ry.p1_vanishes &&
        rx.p2_vanishes == ry.p2_vanishes;
  }
  c.add("(h) isogenous pairs agree", h);

  classify_options opt;
  opt.certificates = true;
  auto rows = classify_all(catalog(), 1, opt);
  bool i = true, j = true;
  for (const auto &row : rows) {
    if (4 > row.dim_M)
      i = i && row.p1_vanishes;
    if (8 > row.dim_M)
      i = i && row.p2_vanishes;
    if (row.via == route::COMPLEX_RULE)
      continue;
    if (row.p1_vanishes)
      j = j && recombine(row.kernel_gens, row.p1_certificate->certificate,
                         row.p1_poly.arity()) == row.p1_poly;
    if (row.p2_vanishes)
      j = j && recombine(row.kernel_gens, row.p2_certificate->certificate,
                         row.p2_poly.arity()) == row.p2_poly;
  }
  i = i && classify(parse_group("SO:2,2")).p2_vanishes;
  c.add("(i) dimension consistency", i);
  c.add("(j) certificates recombine exactly", j);
  return c;
}

criterion micro_suite() {
  criterion c{6, "polynomial arithmetic micro-suite", {}};
  auto res = pontclass::testing::run_micro_suite(20240611, 200);
  c.add(std::to_string(res.cases) + " randomized cases", res.cases >= 1000);
  c.add(std::to_string(res.failures) + " failures", res.failures == 0);
  return c;
}

} // namespace

int main(int argc, char **argv) {
  bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  std::vector<criterion> all{sweep_agreement(),    golden_polynomials(),
                             kernel_generators(),  membership_verdicts(),
                             property_suite(),     micro_suite()};
  bool unexpected = false, any = false;
  for (const auto &c : all) {
    std::size_t passed = 0;
    for (const auto &s : c.checks)
      passed += s.ok;
    bool ok = passed == c.checks.size();
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  "
              << c.title << "  [exact, " << passed << "/" << c.checks.size()
              << "]\n";
    for (const auto &s : c.checks) {
      if (s.ok)
        continue;
      any = true;
      bool known = known_deviations.count({c.id, s.name}) > 0;
      unexpected = unexpected || !known;
      std::cout << "    failed: " << s.name
                << (known ? " (known deviation)" : "") << '\n';
    }
  }
  return (strict ? any : unexpected) ? 1 : 0;
}
