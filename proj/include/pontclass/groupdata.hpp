#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace pontclass {

enum class family {
  SL_R,
  SU_STAR,
  SU_PQ,
  SO_PQ,
  SO_STAR,
  SP_R,
  SP_PQ,
  E6_6,
  E6_2,
  E6_m14,
  E6_m26,
  E7_7,
  E7_m5,
  E7_m25,
  E8_8,
  E8_m24,
  F4_4,
  F4_m20,
  G2_2,
  COMPLEX
};

// Rows of the complex table.
enum class complex_base { NONE, SL, SO, SP, E6, E7, E8, F4, G2 };

struct group_spec {
  family fam = family::SL_R;
  complex_base base = complex_base::NONE;
  std::vector<int> params;

  bool is_complex() const { return fam == family::COMPLEX; }
  auto operator<=>(const group_spec &) const = default;
};

inline group_spec make_spec(family f, std::vector<int> params = {}) {
  return {f, complex_base::NONE, std::move(params)};
}
inline group_spec make_complex(complex_base b, std::vector<int> params = {}) {
  return {family::COMPLEX, b, std::move(params)};
}

using weight = std::vector<rational>;

// x_var := replacement, applied in the ring left by the previous relations.
struct relation {
  std::size_t var;
  poly replacement;
};

// x_i -> sign[i] * x_{target[i]}.
struct signed_perm {
  std::vector<std::size_t> target;
  std::vector<int> sign;
};

struct isotropy_data {
  group_spec spec;
  std::vector<std::string> variable_names;
  std::vector<weight> weights; // nonzero weights only
  int zero_weight_count = 0;
  std::vector<relation> relations;
  std::vector<poly> kernel_gens; // before relation elimination
  std::vector<signed_perm> symmetries;
  int dim_p = 0;

  std::size_t arity() const { return variable_names.size(); }
  bool is_complex_marker() const { return spec.is_complex(); }
};

struct catalog_bounds {
  int max_pq = 10;
  int max_n = 6;
};

namespace detail {

struct token_row {
  std::string_view token;
  family fam;
  complex_base base;
  int nparams;
};

inline constexpr std::array<token_row, 28> token_table{{
    {"SL", family::SL_R, complex_base::NONE, 1},
    {"SU*", family::SU_STAR, complex_base::NONE, 1},
    {"SU", family::SU_PQ, complex_base::NONE, 2},
    {"SO", family::SO_PQ, complex_base::NONE, 2},
    {"SO*", family::SO_STAR, complex_base::NONE, 1},
    {"SpR", family::SP_R, complex_base::NONE, 1},
    {"Sp", family::SP_PQ, complex_base::NONE, 2},
    {"E6(6)", family::E6_6, complex_base::NONE, 0},
    {"E6(2)", family::E6_2, complex_base::NONE, 0},
    {"E6(-14)", family::E6_m14, complex_base::NONE, 0},
    {"E6(-26)", family::E6_m26, complex_base::NONE, 0},
    {"E7(7)", family::E7_7, complex_base::NONE, 0},
    {"E7(-5)", family::E7_m5, complex_base::NONE, 0},
    {"E7(-25)", family::E7_m25, complex_base::NONE, 0},
    {"E8(8)", family::E8_8, complex_base::NONE, 0},
    {"E8(-24)", family::E8_m24, complex_base::NONE, 0},
    {"F4(4)", family::F4_4, complex_base::NONE, 0},
    {"F4(-20)", family::F4_m20, complex_base::NONE, 0},
    {"G2(2)", family::G2_2, complex_base::NONE, 0},
    {"SLC", family::COMPLEX, complex_base::SL, 1},
    {"SOC", family::COMPLEX, complex_base::SO, 1},
    {"SPC", family::COMPLEX, complex_base::SP, 1},
    {"E6C", family::COMPLEX, complex_base::E6, 0},
    {"E7C", family::COMPLEX, complex_base::E7, 0},
    {"E8C", family::COMPLEX, complex_base::E8, 0},
    {"F4C", family::COMPLEX, complex_base::F4, 0},
    {"G2C", family::COMPLEX, complex_base::G2, 0},
    // Alias accepted by the parser; never produced by to_token.
    {"SLR", family::SL_R, complex_base::NONE, 1},
}};

inline const token_row &row_for(const group_spec &s) {
  for (const auto &r : token_table)
    if (r.fam == s.fam && r.base == s.base)
      return r;
  throw usage_error("unknown group family");
}

inline std::vector<std::string> names(std::string_view stem, int count,
                                      int first = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i)
    out.push_back(std::string(stem) + std::to_string(first + i));
  return out;
}

inline weight zero_weight(std::size_t n) { return weight(n, rational(0)); }

inline weight unit(std::size_t n, std::size_t i, const rational &c = 1) {
  weight w = zero_weight(n);
  w[i] = c;
  return w;
}

inline weight operator+(weight a, const weight &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

inline weight operator-(const weight &a) {
  weight r(a);
  for (auto &x : r)
    x = -x;
  return r;
}

inline bool is_zero_weight(const weight &w) {
  return std::all_of(w.begin(), w.end(),
                     [](const rational &x) { return sgn(x) == 0; });
}

// Sign vector for bit mask: bit i set means a minus sign at position i.
inline std::vector<int> signs(unsigned mask, int k) {
  std::vector<int> s(std::size_t(k), 1);
  for (int i = 0; i < k; ++i)
    if (mask >> i & 1u)
      s[std::size_t(i)] = -1;
  return s;
}

inline bool parity_ok(unsigned mask, int parity) {
  return std::popcount(mask) % 2 == parity;
}

inline poly var(std::size_t n, std::size_t i) { return poly::variable(n, i); }

inline poly sum_squares(std::size_t n, std::size_t from, std::size_t to) {
  poly p(n);
  for (std::size_t i = from; i < to; ++i)
    p += var(n, i) * var(n, i);
  return p;
}

inline poly sum_cross(std::size_t n, std::size_t from, std::size_t to) {
  poly p(n);
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = i + 1; j < to; ++j)
      p += var(n, i) * var(n, j);
  return p;
}

// e_0 .. e_kmax of the given polynomials.
inline std::vector<poly> elementary_symmetric(const std::vector<poly> &xs,
                                              std::size_t arity,
                                              unsigned kmax) {
  std::vector<poly> e(kmax + 1, poly(arity));
  e[0] = poly::constant(arity, 1);
  for (const auto &x : xs)
    for (unsigned k = kmax; k >= 1; --k)
      e[k] += e[k - 1] * x;
  return e;
}

inline void push_nonzero(std::vector<poly> &out, const poly &p) {
  if (!p.is_zero())
    out.push_back(p);
}

inline signed_perm identity_perm(std::size_t n) {
  signed_perm s;
  for (std::size_t i = 0; i < n; ++i) {
    s.target.push_back(i);
    s.sign.push_back(1);
  }
  return s;
}

inline signed_perm swap_perm(std::size_t n, std::size_t i, std::size_t j) {
  signed_perm s = identity_perm(n);
  std::swap(s.target[i], s.target[j]);
  return s;
}

inline signed_perm flip_perm(std::size_t n, std::vector<std::size_t> idx) {
  signed_perm s = identity_perm(n);
  for (auto i : idx)
    s.sign[i] = -1;
  return s;
}

// Adjacent transpositions generating the symmetric group on [from, to).
inline void add_perms(std::vector<signed_perm> &out, std::size_t n,
                      std::size_t from, std::size_t to) {
  for (std::size_t i = from; i + 1 < to; ++i)
    out.push_back(swap_perm(n, i, i + 1));
}

inline void add_single_flips(std::vector<signed_perm> &out, std::size_t n,
                             std::size_t from, std::size_t to) {
  if (from < to)
    out.push_back(flip_perm(n, {from}));
}

inline void add_pair_flip(std::vector<signed_perm> &out, std::size_t n,
                          std::size_t from, std::size_t to) {
  if (from + 1 < to)
    out.push_back(flip_perm(n, {from, from + 1}));
}

inline poly sum_vars(std::size_t n, std::size_t from, std::size_t to) {
  poly p(n);
  for (std::size_t i = from; i < to; ++i)
    p += var(n, i);
  return p;
}

// Appends the nonzero weights and counts zeros.
struct weight_sink {
  std::vector<weight> &ws;
  int &zeros;
  void operator()(const weight &w) {
    if (is_zero_weight(w))
      ++zeros;
    else
      ws.push_back(w);
  }
};

inline rational q(long a, long b = 1) { return make_rational(a, b); }

// Fills weights, names, relations, kernel generators and symmetries.
// parity selects the sign-parity convention for the spin-type families:
// 0 is the stored convention, 1 the flipped one used by the oracle.
inline void build(isotropy_data &d, int parity) {
  const auto &s = d.spec;
  auto &W = d.weights;
  weight_sink add{W, d.zero_weight_count};
  auto &K = d.kernel_gens;
  auto &S = d.symmetries;
  auto P = [&](std::size_t i) { return std::size_t(s.params.at(i)); };

  switch (s.fam) {
  case family::SL_R: {
    std::size_t n = P(0), k = n / 2;
    d.variable_names = names("y", int(k));
    std::vector<weight> v;
    for (std::size_t i = 0; i < k; ++i) {
      v.push_back(unit(k, i));
      v.push_back(unit(k, i, -1));
    }
    if (n % 2 == 1)
      v.push_back(zero_weight(k));
    bool dropped = false;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i; j < v.size(); ++j) {
        weight w = v[i] + v[j];
        if (!dropped && is_zero_weight(w)) {
          dropped = true;
          continue;
        }
        add(w);
      }
    std::vector<poly> sq;
    for (std::size_t i = 0; i < k; ++i)
      sq.push_back(var(k, i) * var(k, i));
    auto e = elementary_symmetric(sq, k, 2);
    push_nonzero(K, e[1]);
    push_nonzero(K, e[2]);
    add_perms(S, k, 0, k);
    add_single_flips(S, k, 0, k);
    break;
  }
  case family::SU_PQ: {
    std::size_t p = P(0), qq = P(1), n = p + qq;
    d.variable_names = names("y", int(p));
    for (auto &z : names("z", int(qq)))
      d.variable_names.push_back(z);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < qq; ++j) {
        weight w = unit(n, i) + unit(n, p + j, -1);
        add(w);
        add(-w);
      }
    d.relations.push_back({n - 1, -sum_vars(n, 0, n - 1)});
    std::vector<poly> xs;
    for (std::size_t i = 0; i < n; ++i)
      xs.push_back(var(n, i));
    auto e = elementary_symmetric(xs, n, 4);
    for (unsigned k = 2; k <= 4; ++k)
      push_nonzero(K, e[k]);
    add_perms(S, n, 0, p);
    add_perms(S, n, p, n);
    break;
  }
  case family::SP_R: {
    std::size_t n = P(0);
    d.variable_names = names("y", int(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        weight w = unit(n, i) + unit(n, j);
        add(w);
        add(-w);
      }
    std::vector<poly> sq;
    for (std::size_t i = 0; i < n; ++i)
      sq.push_back(var(n, i) * var(n, i));
    auto e = elementary_symmetric(sq, n, 2);
    push_nonzero(K, e[1]);
    push_nonzero(K, e[2]);
    add_perms(S, n, 0, n);
    break;
  }
  case family::SO_PQ: {
    std::size_t p = P(0), qq = P(1), a = p / 2, b = qq / 2, n = a + b;
    d.variable_names = names("y", int(a));
    for (auto &z : names("z", int(b)))
      d.variable_names.push_back(z);
    std::vector<weight> u, v;
    for (std::size_t i = 0; i < a; ++i) {
      u.push_back(unit(n, i));
      u.push_back(unit(n, i, -1));
    }
    if (p % 2 == 1)
      u.push_back(zero_weight(n));
    for (std::size_t j = 0; j < b; ++j) {
      v.push_back(unit(n, a + j));
      v.push_back(unit(n, a + j, -1));
    }
    if (qq % 2 == 1)
      v.push_back(zero_weight(n));
    for (const auto &x : u)
      for (const auto &y : v)
        add(x + y);
    std::vector<poly> sq;
    for (std::size_t i = 0; i < n; ++i)
      sq.push_back(var(n, i) * var(n, i));
    auto e = elementary_symmetric(sq, n, 2);
    push_nonzero(K, e[1]);
    push_nonzero(K, e[2]);
    if (p % 2 == 0 && qq % 2 == 0 && n <= 4) {
      poly euler = poly::constant(n, 1);
      for (std::size_t i = 0; i < n; ++i)
        euler = euler * var(n, i);
      K.push_back(euler);
    }
    add_perms(S, n, 0, a);
    add_perms(S, n, a, n);
    if (p % 2 == 1)
      add_single_flips(S, n, 0, a);
    else
      add_pair_flip(S, n, 0, a);
    if (qq % 2 == 1)
      add_single_flips(S, n, a, n);
    else
      add_pair_flip(S, n, a, n);
    break;
  }
  case family::SP_PQ: {
    std::size_t p = P(0), qq = P(1), n = p + qq;
    d.variable_names = names("y", int(p));
    for (auto &z : names("z", int(qq)))
      d.variable_names.push_back(z);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < qq; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1})
            add(unit(n, i, si) + unit(n, p + j, sj));
    std::vector<poly> sq;
    for (std::size_t i = 0; i < n; ++i)
      sq.push_back(var(n, i) * var(n, i));
    auto e = elementary_symmetric(sq, n, 2);
    push_nonzero(K, e[1]);
    push_nonzero(K, e[2]);
    add_perms(S, n, 0, p);
    add_perms(S, n, p, n);
    add_single_flips(S, n, 0, p);
    add_single_flips(S, n, p, n);
    break;
  }
  case family::SO_STAR: {
    std::size_t n = P(0);
    d.variable_names = names("y", int(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        weight w = unit(n, i) + unit(n, j);
        add(w);
        add(-w);
      }
    std::vector<poly> sq;
    for (std::size_t i = 0; i < n; ++i)
      sq.push_back(var(n, i) * var(n, i));
    auto e = elementary_symmetric(sq, n, 2);
    push_nonzero(K, e[1]);
    push_nonzero(K, e[2]);
    if (n <= 4) {
      poly euler = poly::constant(n, 1);
      for (std::size_t i = 0; i < n; ++i)
        euler = euler * var(n, i);
      K.push_back(euler);
    }
    add_perms(S, n, 0, n);
    break;
  }
  case family::SU_STAR: {
    std::size_t n = P(0);
    d.variable_names = names("y", int(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1})
            add(unit(n, i, si) + unit(n, j, sj));
    d.zero_weight_count += int(n) - 1;
    std::vector<poly> sq;
    for (std::size_t i = 0; i < n; ++i)
      sq.push_back(var(n, i) * var(n, i));
    auto e = elementary_symmetric(sq, n, 2);
    push_nonzero(K, e[1]);
    push_nonzero(K, e[2]);
    add_perms(S, n, 0, n);
    add_single_flips(S, n, 0, n);
    break;
  }
  case family::E8_8: {
    const std::size_t n = 8;
    d.variable_names = names("y", 8);
    for (unsigned m = 0; m < 256; ++m) {
      if (!parity_ok(m, parity))
        continue;
      auto sg = signs(m, 8);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 8; ++i)
        w[i] = q(sg[i], 2);
      add(w);
    }
    K.push_back(sum_squares(n, 0, 8));
    add_perms(S, n, 0, 8);
    add_pair_flip(S, n, 0, 8);
    break;
  }
  case family::E8_m24: {
    const std::size_t n = 8;
    d.variable_names = names("y", 8);
    for (std::size_t i = 0; i < 6; ++i)
      for (unsigned m = 0; m < 8; ++m) {
        auto sg = signs(m, 3);
        weight w = zero_weight(n);
        w[i] = sg[0];
        w[6] = q(sg[1], 2);
        w[7] = q(sg[2], 2);
        add(w);
      }
    for (unsigned m = 0; m < 64; ++m) {
      if (!parity_ok(m, parity))
        continue;
      auto sg = signs(m, 6);
      for (int e8 : {1, -1}) {
        weight w = zero_weight(n);
        for (std::size_t i = 0; i < 6; ++i)
          w[i] = q(sg[i], 2);
        w[7] = q(e8, 2);
        add(w);
      }
    }
    K.push_back(30 * sum_squares(n, 0, 6) + 15 * sum_squares(n, 6, 8));
    add_perms(S, n, 0, 6);
    add_pair_flip(S, n, 0, 6);
    S.push_back(flip_perm(n, {6}));
    S.push_back(flip_perm(n, {7}));
    break;
  }
  case family::E7_7: {
    const std::size_t n = 8;
    d.variable_names = names("y", 8);
    for (unsigned m = 0; m < 256; ++m) {
      if (std::popcount(m) != 4)
        continue;
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 8; ++i)
        if (m >> i & 1u)
          w[i] = 1;
      add(w);
    }
    // Enumerate in increasing (i1 < i2 < i3 < i4) lexicographic order.
    std::sort(W.begin(), W.end(), [](const weight &a, const weight &b) {
      return std::lexicographical_compare(b.begin(), b.end(), a.begin(),
                                          a.end());
    });
    d.relations.push_back({7, -sum_vars(n, 0, 7)});
    K.push_back(7 * sum_squares(n, 0, 8) + 2 * sum_cross(n, 0, 8));
    add_perms(S, n, 0, 8);
    break;
  }
  case family::E7_m5: {
    const std::size_t n = 7;
    d.variable_names = names("y", 7);
    for (unsigned m = 0; m < 64; ++m) {
      if (!parity_ok(m, parity))
        continue;
      auto sg = signs(m, 6);
      for (int e7 : {1, -1}) {
        weight w = zero_weight(n);
        for (std::size_t i = 0; i < 6; ++i)
          w[i] = q(sg[i], 2);
        w[6] = q(e7, 2);
        add(w);
      }
    }
    // j*(I_2) in these coordinates; the substitution tables use y7/2.
    K.push_back(2 * sum_squares(n, 0, 6) + sum_squares(n, 6, 7));
    add_perms(S, n, 0, 6);
    add_pair_flip(S, n, 0, 6);
    S.push_back(flip_perm(n, {6}));
    break;
  }
  case family::E7_m25: {
    const std::size_t n = 7;
    d.variable_names = names("y", 7);
    weight a = zero_weight(n);
    a[5] = q(2, 3);
    a[6] = q(1, 3);
    add(a);
    add(-a);
    weight b = zero_weight(n);
    b[5] = q(1, 3);
    b[6] = q(-1, 3);
    for (std::size_t i = 0; i < 5; ++i)
      for (int si : {1, -1})
        for (int sb : {1, -1}) {
          weight w = unit(n, i, si);
          w[5] += sb * b[5];
          w[6] += sb * b[6];
          add(w);
        }
    for (unsigned m = 0; m < 64; ++m) {
      if (!parity_ok(m, 0))
        continue;
      auto sg = signs(m, 6);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 5; ++i)
        w[i] = q(sg[i], 2);
      w[5] = q(-sg[5], 6);
      w[6] = q(-2 * sg[5], 6);
      add(w);
    }
    K.push_back(6 * sum_squares(n, 0, 5) + 2 * sum_squares(n, 5, 6) +
                sum_squares(n, 6, 7));
    add_perms(S, n, 0, 5);
    add_pair_flip(S, n, 0, 5);
    break;
  }
  case family::E6_6: {
    const std::size_t n = 4;
    d.variable_names = names("y", 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1})
            add(unit(n, i, si) + unit(n, j, sj));
    for (unsigned m = 0; m < 16; ++m) {
      auto sg = signs(m, 4);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 4; ++i)
        w[i] = sg[i];
      add(w);
    }
    d.zero_weight_count += 2;
    K.push_back(sum_squares(n, 0, 4));
    add_perms(S, n, 0, 4);
    add_single_flips(S, n, 0, 4);
    break;
  }
  case family::E6_2: {
    const std::size_t n = 7;
    d.variable_names = names("y", 7);
    for (unsigned m = 0; m < 64; ++m) {
      if (std::popcount(m) != 3)
        continue;
      for (int e7 : {1, -1}) {
        weight w = zero_weight(n);
        for (std::size_t i = 0; i < 6; ++i)
          if (m >> i & 1u)
            w[i] = 1;
        w[6] = e7;
        add(w);
      }
    }
    d.relations.push_back({5, -sum_vars(n, 0, 5)});
    K.push_back(5 * sum_squares(n, 0, 6) + 12 * sum_squares(n, 6, 7) -
                2 * sum_cross(n, 0, 6));
    add_perms(S, n, 0, 6);
    S.push_back(flip_perm(n, {6}));
    break;
  }
  case family::E6_m14: {
    const std::size_t n = 6;
    d.variable_names = names("y", 6);
    for (unsigned m = 0; m < 64; ++m) {
      if (!parity_ok(m, parity))
        continue;
      auto sg = signs(m, 6);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 5; ++i)
        w[i] = q(sg[i], 2);
      w[5] = 3 * sg[5];
      add(w);
    }
    // y6 here is the circle charge (3 on p); the substitution tables use 6*y6.
    K.push_back(6 * sum_squares(n, 0, 5) + 72 * sum_squares(n, 5, 6));
    add_perms(S, n, 0, 5);
    add_pair_flip(S, n, 0, 5);
    break;
  }
  case family::E6_m26: {
    const std::size_t n = 4;
    d.variable_names = names("y", 4);
    for (std::size_t i = 0; i < 4; ++i) {
      add(unit(n, i));
      add(unit(n, i, -1));
    }
    for (unsigned m = 0; m < 16; ++m) {
      auto sg = signs(m, 4);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 4; ++i)
        w[i] = q(sg[i], 2);
      add(w);
    }
    d.zero_weight_count += 2;
    K.push_back(3 * sum_squares(n, 0, 4));
    add_perms(S, n, 0, 4);
    add_single_flips(S, n, 0, 4);
    break;
  }
  case family::F4_4: {
    const std::size_t n = 4;
    d.variable_names = names("y", 4);
    for (std::size_t i = 1; i < 4; ++i)
      for (int s1 : {1, -1})
        for (int si : {1, -1})
          add(unit(n, 0, s1) + unit(n, i, si));
    for (unsigned m = 0; m < 16; ++m) {
      auto sg = signs(m, 4);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 4; ++i)
        w[i] = sg[i];
      add(w);
    }
    K.push_back(sum_squares(n, 0, 4));
    add_perms(S, n, 1, 4);
    add_single_flips(S, n, 0, 4);
    break;
  }
  case family::F4_m20: {
    const std::size_t n = 4;
    d.variable_names = names("y", 4);
    for (unsigned m = 0; m < 16; ++m) {
      auto sg = signs(m, 4);
      weight w = zero_weight(n);
      for (std::size_t i = 0; i < 4; ++i)
        w[i] = q(sg[i], 2);
      add(w);
    }
    K.push_back(3 * sum_squares(n, 0, 4));
    add_perms(S, n, 0, 4);
    add_single_flips(S, n, 0, 4);
    break;
  }
  case family::G2_2: {
    const std::size_t n = 2;
    d.variable_names = names("y", 2);
    for (int c : {3, 1, -1, -3}) {
      weight w = {rational(c), rational(1)};
      add(w);
      add(-w);
    }
    K.push_back(3 * sum_squares(n, 0, 1) + sum_squares(n, 1, 2));
    S.push_back(flip_perm(n, {0}));
    S.push_back(flip_perm(n, {1}));
    break;
  }
  case family::COMPLEX:
    break;
  }
}

} // namespace detail

inline std::string to_token(const group_spec &s) {
  const auto &r = detail::row_for(s);
  std::string out(r.token);
  if (r.nparams > 0) {
    out += ":";
    for (std::size_t i = 0; i < s.params.size(); ++i) {
      if (i)
        out += ",";
      out += std::to_string(s.params[i]);
    }
  }
  return out;
}

// Throws usage_error unless the parameters select a row of the tables.
inline void validate(const group_spec &s) {
  const auto &r = detail::row_for(s);
  if (int(s.params.size()) != r.nparams)
    throw usage_error(std::string(r.token) + " takes " +
                      std::to_string(r.nparams) + " parameter(s)");
  auto bad = [&](const std::string &why) {
    throw usage_error("invalid parameters for " + std::string(r.token) + ": " +
                      why);
  };
  const auto &p = s.params;
  switch (s.fam) {
  case family::SL_R:
  case family::SU_STAR:
  case family::SP_R:
    if (p[0] < 2)
      bad("need n >= 2");
    break;
  case family::SO_STAR:
    if (p[0] < 3)
      bad("need n >= 3");
    break;
  case family::SU_PQ:
  case family::SP_PQ:
    if (!(p[0] >= p[1] && p[1] >= 1))
      bad("need p >= q >= 1");
    break;
  case family::SO_PQ:
    if (!(p[0] >= p[1] && p[1] >= 1 && p[0] + p[1] >= 3))
      bad("need p >= q >= 1 and p + q >= 3");
    break;
  case family::COMPLEX:
    if (s.base == complex_base::SL && p[0] < 2)
      bad("need n >= 2");
    if (s.base == complex_base::SO && (p[0] < 3 || p[0] == 4))
      bad("need n >= 3 and n != 4");
    if (s.base == complex_base::SP && p[0] < 1)
      bad("need n >= 1");
    break;
  default:
    break;
  }
}

// Grammar: FAMILY[:p[,q]] with FAMILY from the token table, e.g. "SO:5,3",
// "SU*:4", "E7(-5)", "SLC:3".
inline group_spec parse_group(const std::string &token) {
  std::string head = token, tail;
  if (auto c = token.find(':'); c != std::string::npos) {
    head = token.substr(0, c);
    tail = token.substr(c + 1);
  }
  const detail::token_row *row = nullptr;
  for (const auto &r : detail::token_table)
    if (r.token == head)
      row = &r;
  if (!row)
    throw usage_error("unknown group token: " + token);
  group_spec s{row->fam, row->base, {}};
  if (row->nparams == 0) {
    if (token.find(':') != std::string::npos)
      throw usage_error(head + " takes no parameters");
  } else {
    if (tail.empty())
      throw usage_error(head + " needs parameters, e.g. " + head + ":3");
    std::size_t pos = 0;
    while (pos <= tail.size()) {
      auto comma = tail.find(',', pos);
      std::string item = tail.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty() || item.size() > 6 ||
          !std::all_of(item.begin(), item.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw usage_error("bad parameter list in " + token);
      s.params.push_back(std::stoi(item));
      if (comma == std::string::npos)
        break;
      pos = comma + 1;
    }
  }
  validate(s);
  return s;
}

inline int dim_symmetric_space(const group_spec &s) {
  validate(s);
  const auto &p = s.params;
  switch (s.fam) {
  case family::SL_R:
    return p[0] * (p[0] + 1) / 2 - 1;
  case family::SU_PQ:
    return 2 * p[0] * p[1];
  case family::SO_PQ:
    return p[0] * p[1];
  case family::SP_R:
    return p[0] * (p[0] + 1);
  case family::SP_PQ:
    return 4 * p[0] * p[1];
  case family::SO_STAR:
    return p[0] * (p[0] - 1);
  case family::SU_STAR:
    return (p[0] - 1) * (2 * p[0] + 1);
  case family::E8_8:
    return 128;
  case family::E8_m24:
    return 112;
  case family::E7_7:
    return 70;
  case family::E7_m5:
    return 64;
  case family::E7_m25:
    return 54;
  case family::E6_6:
    return 42;
  case family::E6_2:
    return 40;
  case family::E6_m14:
    return 32;
  case family::E6_m26:
    return 26;
  case family::F4_4:
    return 28;
  case family::F4_m20:
    return 16;
  case family::G2_2:
    return 8;
  case family::COMPLEX:
    // dim G - dim K = dim K for a complex group viewed as a real one.
    switch (s.base) {
    case complex_base::SL:
      return p[0] * p[0] - 1;
    case complex_base::SO:
      return p[0] * (p[0] - 1) / 2;
    case complex_base::SP:
      return p[0] * (2 * p[0] + 1);
    case complex_base::E6:
      return 78;
    case complex_base::E7:
      return 133;
    case complex_base::E8:
      return 248;
    case complex_base::F4:
      return 52;
    case complex_base::G2:
      return 14;
    case complex_base::NONE:
      break;
    }
    break;
  }
  throw usage_error("unknown group family");
}

// parity 1 flips the sign-parity convention of the spin-type weight families
// (E8(8), E8(-24), E7(-5), E6(-14)); other families ignore it.
inline isotropy_data isotropy_data_with_parity(const group_spec &spec,
                                               int parity) {
  validate(spec);
  isotropy_data d;
  d.spec = spec;
  d.dim_p = dim_symmetric_space(spec);
  detail::build(d, parity);
  return d;
}

inline isotropy_data get_isotropy_data(const group_spec &spec) {
  return isotropy_data_with_parity(spec, 0);
}

inline std::vector<group_spec> catalog(const catalog_bounds &b = {}) {
  if (b.max_pq < 0 || b.max_n < 0)
    throw usage_error("catalog bounds must be non-negative");
  std::vector<group_spec> out;
  for (int n = 2; n <= b.max_n; ++n)
    out.push_back(make_spec(family::SL_R, {n}));
  for (int n = 2; n <= b.max_n; ++n)
    out.push_back(make_spec(family::SU_STAR, {n}));
  for (int s = 2; s <= b.max_pq; ++s)
    for (int q = 1; 2 * q <= s; ++q)
      out.push_back(make_spec(family::SU_PQ, {s - q, q}));
  for (int s = 3; s <= b.max_pq; ++s)
    for (int q = 1; 2 * q <= s; ++q)
      out.push_back(make_spec(family::SO_PQ, {s - q, q}));
  for (int n = 3; n <= b.max_n; ++n)
    out.push_back(make_spec(family::SO_STAR, {n}));
  for (int n = 2; n <= b.max_n; ++n)
    out.push_back(make_spec(family::SP_R, {n}));
  for (int s = 2; s <= b.max_pq; ++s)
    for (int q = 1; 2 * q <= s; ++q)
      out.push_back(make_spec(family::SP_PQ, {s - q, q}));
  for (family f : {family::E8_8, family::E8_m24, family::E7_7, family::E7_m5,
                   family::E7_m25, family::E6_6, family::E6_2, family::E6_m14,
                   family::E6_m26, family::F4_4, family::F4_m20, family::G2_2})
    out.push_back(make_spec(f));
  for (int n = 2; n <= b.max_n; ++n)
    out.push_back(make_complex(complex_base::SL, {n}));
  for (int n = 3; n <= b.max_n; ++n)
    if (n != 4)
      out.push_back(make_complex(complex_base::SO, {n}));
  for (int n = 1; n <= b.max_n; ++n)
    out.push_back(make_complex(complex_base::SP, {n}));
  for (complex_base c : {complex_base::E6, complex_base::E7, complex_base::E8,
                         complex_base::F4, complex_base::G2})
    out.push_back(make_complex(c));
  return out;
}

// Pushes p through the relations in order.
inline poly apply_relations(poly p, const std::vector<relation> &rels) {
  for (const auto &r : rels)
    p = substitute_linear(p, r.var, r.replacement);
  return p;
}

inline std::vector<std::string>
reduced_names(const isotropy_data &d) {
  auto names = d.variable_names;
  for (const auto &r : d.relations)
    names.erase(names.begin() + std::ptrdiff_t(r.var));
  return names;
}

inline poly weight_form(const weight &w) { return linear_form(w); }

inline weight apply(const signed_perm &s, const weight &w) {
  weight r(w.size(), rational(0));
  for (std::size_t i = 0; i < w.size(); ++i)
    r[s.target[i]] += s.sign[i] * w[i];
  return r;
}

inline poly apply(const signed_perm &s, const poly &p) {
  std::vector<poly> images;
  for (std::size_t i = 0; i < p.arity(); ++i)
    images.push_back(poly::variable(p.arity(), s.target[i], s.sign[i]));
  return substitute_all(p, images, p.arity());
}

// Weights as canonical linear forms after relation elimination, sorted.
inline std::vector<poly> reduced_weight_forms(const isotropy_data &d) {
  std::vector<poly> out;
  for (const auto &w : d.weights)
    out.push_back(apply_relations(weight_form(w), d.relations));
  return out;
}

} // namespace pontclass
