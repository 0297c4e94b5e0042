#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "charclass.hpp"
#include "groupdata.hpp"
#include "poly.hpp"

namespace pontclass {

// Minimal-dimension fundamental representations of the compact exceptional
// groups, in the coordinates used for the real forms. E7 and E6 each come in
// two bases; the B bases are restrictions from E8 and carry a linear
// constraint on their coordinates.
enum class fundamental_rep { E8, E7_A, E7_B, E6_A, E6_B, F4, G2 };

struct fundamental_rep_data {
  fundamental_rep rep;
  std::string name;
  std::vector<std::string> variable_names;
  std::vector<weight> weights;
  // Constraint on the coordinates (restriction bases only).
  std::vector<relation> source_relations;
  // I_2 as tabulated for this basis; compared modulo source_relations.
  poly tabulated_I2;
};

namespace detail {

inline fundamental_rep_data make_rep(fundamental_rep r) {
  fundamental_rep_data d;
  d.rep = r;
  auto &W = d.weights;
  switch (r) {
  case fundamental_rep::E8: {
    const std::size_t n = 8;
    d.name = "E8";
    d.variable_names = names("z", 8);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1})
            W.push_back(unit(n, i, si) + unit(n, j, sj));
    for (unsigned m = 0; m < 256; ++m) {
      if (!parity_ok(m, 0))
        continue;
      auto sg = signs(m, 8);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < n; ++i)
        w[i] = q(sg[i], 2);
      W.push_back(w);
    }
    d.tabulated_I2 = 30 * sum_squares(n, 0, 8);
    break;
  }
  case fundamental_rep::E7_A: {
    const std::size_t n = 7;
    d.name = "E7 (so12 x su2 basis)";
    d.variable_names = names("z", 7);
    for (std::size_t i = 0; i < 6; ++i)
      for (int si : {1, -1})
        for (int s7 : {1, -1}) {
          weight w = unit(n, i, si);
          w[6] = q(s7, 2);
          W.push_back(w);
        }
    for (unsigned m = 0; m < 64; ++m) {
      if (!parity_ok(m, 1))
        continue;
      auto sg = signs(m, 6);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 6; ++i)
        w[i] = q(sg[i], 2);
      W.push_back(w);
    }
    d.tabulated_I2 = 6 * sum_squares(n, 0, 6) + 3 * sum_squares(n, 6, 7);
    break;
  }
  case fundamental_rep::E7_B: {
    const std::size_t n = 8;
    d.name = "E7 (su8 basis)";
    d.variable_names = names("z", 8);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        weight w = zero_weight(n);
        for (std::size_t k = 0; k < n; ++k)
          w[k] = q(-1, 4);
        w[i] += 1;
        w[j] += 1;
        W.push_back(w);
        W.push_back(-w);
      }
    d.source_relations.push_back({7, -sum_vars(n, 0, 7)});
    // The cross term is -2: with +2 the value on sum z = 0 is 3/4 of the
    // weight sum, so only the scalar would change.
    d.tabulated_I2 =
        rational(3, 4) * (7 * sum_squares(n, 0, 8) - 2 * sum_cross(n, 0, 8));
    break;
  }
  case fundamental_rep::E6_A: {
    const std::size_t n = 6;
    d.name = "E6 (so10 x so2 basis)";
    d.variable_names = names("z", 6);
    for (std::size_t i = 0; i < 5; ++i)
      for (int si : {1, -1}) {
        weight w = unit(n, i, si);
        w[5] = q(1, 3);
        W.push_back(w);
      }
    for (unsigned m = 0; m < 32; ++m) {
      if (!parity_ok(m, 0))
        continue;
      auto sg = signs(m, 5);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 5; ++i)
        w[i] = q(sg[i], 2);
      w[5] = q(-1, 6);
      W.push_back(w);
    }
    W.push_back(unit(n, 5, q(-2, 3)));
    d.tabulated_I2 = 6 * sum_squares(n, 0, 5) + 2 * sum_squares(n, 5, 6);
    break;
  }
  case fundamental_rep::E6_B: {
    const std::size_t n = 7;
    d.name = "E6 (su6 x su2 basis)";
    d.variable_names = names("z", 7);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) {
        weight w = zero_weight(n);
        for (std::size_t k = 0; k < 6; ++k)
          w[k] = q(-1, 3);
        w[i] += 1;
        w[j] += 1;
        W.push_back(w);
      }
    for (std::size_t i = 0; i < 6; ++i)
      for (int e : {1, -1}) {
        weight w = zero_weight(n);
        for (std::size_t k = 0; k < 6; ++k)
          w[k] = q(-5, 6);
        w[i] += 1;
        w[6] = q(e, 2);
        W.push_back(w);
      }
    d.source_relations.push_back({5, -sum_vars(n, 0, 5)});
    d.tabulated_I2 = 5 * sum_squares(n, 0, 6) + 3 * sum_squares(n, 6, 7) -
                     2 * sum_cross(n, 0, 6);
    break;
  }
  case fundamental_rep::F4: {
    const std::size_t n = 4;
    d.name = "F4";
    d.variable_names = names("z", 4);
    for (std::size_t i = 0; i < n; ++i) {
      W.push_back(unit(n, i));
      W.push_back(unit(n, i, -1));
    }
    for (unsigned m = 0; m < 16; ++m) {
      auto sg = signs(m, 4);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < n; ++i)
        w[i] = q(sg[i], 2);
      W.push_back(w);
    }
    d.tabulated_I2 = 3 * sum_squares(n, 0, 4);
    break;
  }
  case fundamental_rep::G2: {
    const std::size_t n = 2;
    d.name = "G2";
    d.variable_names = names("z", 2);
    for (weight w : {weight{1, 0}, weight{1, 1}, weight{2, 1}}) {
      W.push_back(w);
      W.push_back(-w);
    }
    poly z1 = var(n, 0), z2 = var(n, 1);
    d.tabulated_I2 = 2 * (3 * z1 * z1 + 3 * z1 * z2 + z2 * z2);
    break;
  }
  }
  return d;
}

inline bool negation_closed(const std::vector<poly> &forms) {
  std::map<std::string, int> count;
  for (const auto &f : forms)
    ++count[render(f)];
  for (const auto &f : forms)
    if (count[render(f)] != count[render(-f)])
      return false;
  return true;
}

inline std::vector<poly> forms_of(const std::vector<weight> &ws) {
  std::vector<poly> out;
  for (const auto &w : ws)
    out.push_back(weight_form(w));
  return out;
}

} // namespace detail

inline fundamental_rep_data fundamental_data(fundamental_rep r) {
  return detail::make_rep(r);
}

inline std::vector<fundamental_rep> all_fundamental_reps() {
  return {fundamental_rep::E8,   fundamental_rep::E7_A, fundamental_rep::E7_B,
          fundamental_rep::E6_A, fundamental_rep::E6_B, fundamental_rep::F4,
          fundamental_rep::G2};
}

// I_k = sum of tau(lambda)^k over the weights. For a negation-closed weight
// list only one weight of each +-pair is counted, i.e. half the full sum;
// the 27-dimensional E6 lists are not negation-closed and use the full sum.
inline poly power_sum_invariant(const fundamental_rep_data &d, unsigned k) {
  if (k == 0)
    throw usage_error("power sum index must be positive");
  std::size_t n = d.variable_names.size();
  poly s(n);
  for (const auto &w : d.weights)
    s += power(weight_form(w), k);
  if (detail::negation_closed(detail::forms_of(d.weights)))
    s *= rational(1, 2);
  return s;
}

struct kernel_substitution {
  fundamental_rep rep;
  std::vector<poly> images; // one per source coordinate, in the target ring
};

// H^2(BS') -> H^2(BS) for each exceptional real form, as tabulated.
inline kernel_substitution substitution_for(const group_spec &spec) {
  using detail::q;
  using detail::var;
  auto lin = [](std::size_t n, std::vector<rational> c) {
    c.resize(n, rational(0));
    return linear_form(c);
  };
  auto identity = [&](std::size_t src, std::size_t n) {
    std::vector<poly> im;
    for (std::size_t i = 0; i < src; ++i)
      im.push_back(var(n, i));
    return im;
  };
  switch (spec.fam) {
  case family::E8_8:
    return {fundamental_rep::E8, identity(8, 8)};
  case family::E8_m24: {
    auto im = identity(6, 8);
    im.push_back(lin(8, {0, 0, 0, 0, 0, 0, q(1, 2), q(1, 2)}));
    im.push_back(lin(8, {0, 0, 0, 0, 0, 0, q(1, 2), q(-1, 2)}));
    return {fundamental_rep::E8, im};
  }
  case family::E7_7:
    return {fundamental_rep::E7_B, identity(8, 8)};
  case family::E7_m5: {
    auto im = identity(6, 7);
    im.push_back(2 * var(7, 6));
    return {fundamental_rep::E7_A, im};
  }
  case family::E7_m25: {
    auto im = identity(5, 7);
    im.push_back(lin(7, {0, 0, 0, 0, 0, q(1, 3), q(-1, 3)}));
    im.push_back(lin(7, {0, 0, 0, 0, 0, q(2, 3), q(1, 3)}));
    return {fundamental_rep::E7_A, im};
  }
  case family::E6_6: {
    std::vector<poly> im;
    for (std::size_t i = 0; i < 3; ++i)
      im.push_back(var(4, i));
    for (std::size_t i = 0; i < 3; ++i)
      im.push_back(-var(4, i));
    im.push_back(2 * var(4, 3));
    return {fundamental_rep::E6_B, im};
  }
  case family::E6_2: {
    auto im = identity(6, 7);
    im.push_back(2 * var(7, 6));
    return {fundamental_rep::E6_B, im};
  }
  case family::E6_m14:
    return {fundamental_rep::E6_A, identity(6, 6)};
  case family::E6_m26: {
    auto im = identity(4, 4);
    im.push_back(poly(4));
    im.push_back(poly(4));
    return {fundamental_rep::E6_A, im};
  }
  case family::F4_4:
    return {fundamental_rep::F4,
            {lin(4, {1, 1}), lin(4, {-1, 1}), lin(4, {0, 0, 1, 1}),
             lin(4, {0, 0, 1, -1})}};
  case family::F4_m20:
    return {fundamental_rep::F4, identity(4, 4)};
  case family::G2_2:
    return {fundamental_rep::G2, {lin(2, {2}), lin(2, {-3, 1})}};
  default:
    throw usage_error("no substitution data for " + to_token(spec));
  }
}

inline bool is_exceptional(const group_spec &s) {
  switch (s.fam) {
  case family::E8_8:
  case family::E8_m24:
  case family::E7_7:
  case family::E7_m5:
  case family::E7_m25:
  case family::E6_6:
  case family::E6_2:
  case family::E6_m14:
  case family::E6_m26:
  case family::F4_4:
  case family::F4_m20:
  case family::G2_2:
    return true;
  default:
    return false;
  }
}

inline std::vector<group_spec> exceptional_specs() {
  std::vector<group_spec> out;
  for (const auto &s : catalog({0, 0}))
    if (is_exceptional(s))
      out.push_back(s);
  return out;
}

// j*(I_2) in the coordinates of the substitution table.
inline poly recompute_kernel_generator_as_tabulated(const group_spec &spec) {
  auto sub = substitution_for(spec);
  auto rep = fundamental_data(sub.rep);
  auto d = get_isotropy_data(spec);
  return substitute_all(power_sum_invariant(rep, 2), sub.images, d.arity());
}

// Images of the substitution-table coordinates in the isotropy-weight
// coordinates. Two forms normalize their last coordinate differently in the
// two tables: for E7(-5) the weights carry y7/2 where the substitution has
// y7, and for E6(-14) the weights carry the circle charge 3*y6 where the
// substitution has y6/2.
inline std::vector<poly> tabulated_to_isotropy(const group_spec &spec) {
  auto d = get_isotropy_data(spec);
  std::size_t n = d.arity();
  std::vector<poly> im;
  for (std::size_t i = 0; i < n; ++i)
    im.push_back(poly::variable(n, i));
  if (spec.fam == family::E7_m5)
    im[6] = rational(1, 2) * im[6];
  else if (spec.fam == family::E6_m14)
    im[5] = rational(6) * im[5];
  return im;
}

// j*(I_2) in the target ring, before the target's relations are applied.
inline poly recompute_kernel_generator(const group_spec &spec) {
  auto g = recompute_kernel_generator_as_tabulated(spec);
  return substitute_all(g, tabulated_to_isotropy(spec), g.arity());
}

// Roots of K in the isotropy coordinates, for the exceptional forms whose K
// is a product of classical factors and circles. Empty otherwise.
inline std::vector<weight> compact_roots(const group_spec &spec) {
  std::size_t n = spec.is_complex() ? 0 : get_isotropy_data(spec).arity();
  std::vector<weight> out;
  auto single = [&](std::size_t i, rational c) {
    weight w(n, rational(0));
    w[i] = c;
    out.push_back(w);
    w[i] = -c;
    out.push_back(w);
  };
  auto singles = [&](std::size_t a, std::size_t b, rational c) {
    for (std::size_t i = a; i < b; ++i)
      single(i, c);
  };
  // +-y_i +- y_j
  auto so = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = a; i < b; ++i)
      for (std::size_t j = i + 1; j < b; ++j)
        for (int s : {1, -1})
          for (int t : {1, -1}) {
            weight w(n, rational(0));
            w[i] = s;
            w[j] = t;
            out.push_back(w);
          }
  };
  // y_i - y_j
  auto su = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = a; i < b; ++i)
      for (std::size_t j = a; j < b; ++j)
        if (i != j) {
          weight w(n, rational(0));
          w[i] = 1;
          w[j] = -1;
          out.push_back(w);
        }
  };
  switch (spec.fam) {
  case family::E8_8:
    so(0, 8);
    break;
  case family::E7_7:
    su(0, 8);
    break;
  case family::E7_m5:
    so(0, 6);
    singles(6, 7, 1);
    break;
  case family::E6_6:
    so(0, 4);
    singles(0, 4, 2);
    break;
  case family::E6_2:
    su(0, 6);
    singles(6, 7, 2);
    break;
  case family::E6_m14:
    so(0, 5);
    break;
  case family::F4_4:
    singles(0, 1, 2);
    so(1, 4);
    singles(1, 4, 2);
    break;
  case family::F4_m20:
    so(0, 4);
    singles(0, 4, 1);
    break;
  case family::G2_2:
    singles(0, 2, 2);
    break;
  default:
    break;
  }
  return out;
}

// Restriction of the Killing form to the torus of K: the sum of squares of
// the roots of K and the weights of p. Any invariant quadratic is a multiple.
inline std::optional<poly> killing_restriction(const group_spec &spec) {
  auto roots = compact_roots(spec);
  if (roots.empty())
    return std::nullopt;
  auto d = get_isotropy_data(spec);
  poly q(d.arity());
  for (const auto *ws : {&roots, &d.weights})
    for (const auto &w : *ws) {
      auto l = weight_form(w);
      q += l * l;
    }
  return apply_relations(q, d.relations);
}

// Full product prod(1 + w) with no truncation; refuses more than 32 weights.
inline poly untruncated_chern(const group_spec &spec);

namespace detail {

// Integer-coefficient product over packed exponent keys, used only when an
// a priori bound rules out overflow of the 128-bit accumulator.
inline std::optional<poly> packed_product(const std::vector<weight> &ws,
                                          std::size_t n) {
  constexpr unsigned bits = 6;
  if (n == 0 || n * bits > 64 || ws.size() >= (1u << bits))
    return std::nullopt;
  mpz_class lcd = 1;
  for (const auto &w : ws)
    for (const auto &c : w)
      lcd = lcm(lcd, mpz_class(c.get_den()));
  // Every coefficient is bounded by prod(1 + |w|_1) for the scaled forms.
  mpz_class bound = 1;
  std::vector<std::vector<long>> scaled;
  for (const auto &w : ws) {
    std::vector<long> s;
    mpz_class norm = 0;
    for (const auto &c : w) {
      mpz_class v = mpz_class(c.get_num() * (lcd / c.get_den()));
      if (!v.fits_slong_p())
        return std::nullopt;
      s.push_back(v.get_si());
      norm += abs(v);
    }
    bound *= 1 + norm;
    scaled.push_back(std::move(s));
  }
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) > 125)
    return std::nullopt;
  using i128 = __int128;
  std::unordered_map<std::uint64_t, i128> cur{{0, 1}}, next;
  for (const auto &s : scaled) {
    next.clear();
    next.reserve(cur.size() * 2);
    for (const auto &[key, c] : cur) {
      next[key] += c;
      for (std::size_t i = 0; i < n; ++i)
        if (s[i] != 0)
          next[key + (std::uint64_t(1) << (bits * i))] += c * s[i];
    }
    std::swap(cur, next);
  }
  auto to_mpz = [](i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & ~std::uint64_t(0)));
    mpz_class r = hi * (mpz_class(1) << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  poly out(n);
  for (const auto &[key, c] : cur) {
    if (c == 0)
      continue;
    monomial m(n, 0);
    unsigned deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = std::uint16_t((key >> (bits * i)) & ((1u << bits) - 1));
      deg += m[i];
    }
    mpz_class den = 1;
    for (unsigned k = 0; k < deg; ++k)
      den *= lcd;
    rational coef(to_mpz(c), den);
    coef.canonicalize();
    out.add_term(m, coef);
  }
  return out;
}

} // namespace detail

inline poly untruncated_chern(const group_spec &spec) {
  if (spec.is_complex())
    throw complex_group_error("complex group has no weight data");
  auto d = get_isotropy_data(spec);
  if (d.weights.size() > 32)
    throw usage_error("untruncated product refused for " + to_token(spec) +
                      ": more than 32 weights");
  if (auto p = detail::packed_product(d.weights, d.arity()))
    return *p;
  poly total = poly::constant(d.arity(), 1);
  for (const auto &w : d.weights)
    total = poly_mul(total, weight_form(w) + poly::constant(d.arity(), 1));
  return total;
}

inline rational evaluate(const poly &p, const std::vector<rational> &x) {
  rational v = 0;
  for (const auto &[m, c] : p.terms()) {
    rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e)
        t *= x[i];
    v += t;
  }
  return v;
}

// Compares the truncated components c_0..c_max_deg with the full product,
// exactly and without expanding it symbolically. A homogeneous polynomial of
// degree k in n variables is fixed by its values on {x in N^n : |x| = k};
// at each such point prod(1 + t w(x)) is expanded in Q[t] to full degree.
inline bool untruncated_agrees(const group_spec &spec,
                               unsigned max_deg = default_max_degree) {
  if (spec.is_complex())
    throw complex_group_error("complex group has no weight data");
  auto d = get_isotropy_data(spec);
  if (d.weights.size() > 32)
    throw usage_error("untruncated product refused for " + to_token(spec) +
                      ": more than 32 weights");
  auto c = total_chern(d, max_deg);
  for (unsigned k = 0; k <= max_deg; ++k)
    for (const auto &pt : monomials_of_degree(d.arity(), k)) {
      std::vector<rational> x(pt.begin(), pt.end());
      std::vector<rational> series{rational(1)};
      for (const auto &w : d.weights) {
        rational a = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
          a += w[i] * x[i];
        series.push_back(rational(0));
        for (std::size_t j = series.size() - 1; j >= 1; --j)
          series[j] += a * series[j - 1];
      }
      rational full = k < series.size() ? series[k] : rational(0);
      if (full != evaluate(c.c(k), x))
        return false;
    }
  return true;
}

inline bool parity_variant_applicable(const group_spec &s) {
  return s.fam == family::E8_8 || s.fam == family::E8_m24 ||
         s.fam == family::E6_m14 || s.fam == family::E7_m5 ||
         s.fam == family::F4_m20;
}

// True iff the flipped sign-parity convention yields the same p1 and p2.
// F4(-20) carries no parity constraint, so both conventions coincide there.
inline bool parity_variant_check(const group_spec &spec) {
  if (!parity_variant_applicable(spec))
    throw usage_error("no sign-parity convention for " + to_token(spec));
  auto a = pontryagin_classes(isotropy_data_with_parity(spec, 0));
  auto b = pontryagin_classes(isotropy_data_with_parity(spec, 1));
  return a.p1 == b.p1 && a.p2 == b.p2;
}

struct oracle_check {
  std::string name;
  std::string group; // empty for checks not tied to one group
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct oracle_options {
  // Test fixture: perturb this group's curated kernel generator.
  std::optional<group_spec> corrupt_kernel;
  catalog_bounds bounds{};
};

inline poly curated_kernel_generator(const group_spec &spec,
                                     const oracle_options &opt = {}) {
  auto d = get_isotropy_data(spec);
  poly g = d.kernel_gens.at(0);
  if (opt.corrupt_kernel && *opt.corrupt_kernel == spec)
    g += detail::var(g.arity(), 0) * detail::var(g.arity(), 0);
  return g;
}

inline std::vector<oracle_check> run_oracle_checks(const oracle_options &opt = {}) {
  std::vector<oracle_check> out;
  static const std::map<fundamental_rep, std::size_t> expected_counts{
      {fundamental_rep::E8, 240}, {fundamental_rep::E7_A, 56},
      {fundamental_rep::E7_B, 56}, {fundamental_rep::E6_A, 27},
      {fundamental_rep::E6_B, 27}, {fundamental_rep::F4, 24},
      {fundamental_rep::G2, 6}};
  for (auto r : all_fundamental_reps()) {
    auto d = fundamental_data(r);
    std::size_t want = expected_counts.at(r);
    out.push_back({"weight-count " + d.name, "", d.weights.size() == want,
                   std::to_string(want), std::to_string(d.weights.size())});
    auto names = d.variable_names;
    for (const auto &rel : d.source_relations)
      names.erase(names.begin() + std::ptrdiff_t(rel.var));
    poly got = apply_relations(power_sum_invariant(d, 2), d.source_relations);
    poly want_i2 = apply_relations(d.tabulated_I2, d.source_relations);
    out.push_back({"I2 " + d.name, "", got == want_i2, render(want_i2, names),
                   render(got, names)});
  }
  {
    auto d = fundamental_data(fundamental_rep::E6_A);
    poly i1 = power_sum_invariant(d, 1), i2 = power_sum_invariant(d, 2),
         i3 = power_sum_invariant(d, 3), i4 = power_sum_invariant(d, 4);
    poly want = i2 * i2 * rational(1, 12);
    out.push_back({"E6 I1 = 0", "", i1.is_zero(), "0",
                   render(i1, d.variable_names)});
    out.push_back({"E6 I3 = 0", "", i3.is_zero(), "0",
                   render(i3, d.variable_names)});
    out.push_back({"E6 I4 = I2^2/12", "", i4 == want,
                   render(want, d.variable_names),
                   render(i4, d.variable_names)});
  }
  for (const auto &s : exceptional_specs()) {
    auto d = get_isotropy_data(s);
    auto names = reduced_names(d);
    poly re = apply_relations(recompute_kernel_generator(s), d.relations);
    poly cur = apply_relations(curated_kernel_generator(s, opt), d.relations);
    out.push_back({"kernel generator", to_token(s), proportional(re, cur),
                   render(cur, names), render(re, names)});
  }
  for (const auto &s : exceptional_specs()) {
    auto k = killing_restriction(s);
    if (!k)
      continue;
    auto d = get_isotropy_data(s);
    auto names = reduced_names(d);
    poly cur = apply_relations(curated_kernel_generator(s, opt), d.relations);
    out.push_back({"Killing form", to_token(s), proportional(*k, cur),
                   render(cur, names), render(*k, names)});
  }
  for (const auto &s : exceptional_specs())
    if (parity_variant_applicable(s)) {
      bool ok = parity_variant_check(s);
      out.push_back({"parity variant", to_token(s), ok, "equal p1, p2",
                     ok ? "equal p1, p2" : "differ"});
    }
  for (const auto &s : catalog(opt.bounds)) {
    if (s.is_complex() || get_isotropy_data(s).weights.size() > 32)
      continue;
    bool ok = untruncated_agrees(s);
    out.push_back({"untruncated product", to_token(s), ok, "c_0..c_4 agree",
                   ok ? "c_0..c_4 agree" : "differ"});
  }
  return out;
}

} // namespace pontclass
