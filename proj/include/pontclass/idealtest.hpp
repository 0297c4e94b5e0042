#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "poly.hpp"

namespace pontclass {

struct certificate_term {
  std::size_t generator;
  monomial multiplier;
  rational coefficient;
};

struct membership_problem {
  std::vector<poly> generators;
  poly target;
  unsigned degree = 0;
};

struct membership_result {
  bool in_ideal = false;
  std::vector<certificate_term> certificate;
};

struct span_column {
  std::size_t generator;
  monomial multiplier;
};

// Dense column-major matrix: columns[j] is the coefficient vector of
// multiplier_j * generator_j over monomials_of_degree(arity, degree).
struct span_matrix {
  std::size_t rows = 0;
  std::vector<span_column> labels;
  std::vector<std::vector<rational>> columns;
};

enum class multiplier_order { grlex, reverse_grlex };

inline span_matrix degree_span_matrix(const std::vector<poly> &gens,
                                      unsigned degree, std::size_t arity,
                                      multiplier_order order =
                                          multiplier_order::grlex) {
  span_matrix m;
  m.rows = monomials_of_degree(arity, degree).size();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const poly &gen = gens[g];
    if (gen.arity() != arity)
      throw usage_error("generator arity mismatch");
    if (gen.is_zero())
      continue;
    unsigned dg = gen.degree();
    if (!gen.is_homogeneous(dg))
      throw usage_error("generators must be homogeneous");
    if (dg > degree)
      continue;
    auto mults = monomials_of_degree(arity, degree - dg);
    if (order == multiplier_order::reverse_grlex)
      std::reverse(mults.begin(), mults.end());
    for (const auto &mu : mults) {
      m.labels.push_back({g, mu});
      m.columns.push_back(coeff_vector(poly::term(mu, 1) * gen, degree));
    }
  }
  return m;
}

namespace detail {

using sparse_vec = std::map<std::size_t, rational>;

inline void axpy(sparse_vec &y, const rational &a, const sparse_vec &x) {
  for (const auto &[i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, 0);
    it->second -= a * v;
    if (sgn(it->second) == 0)
      y.erase(it);
  }
}

inline sparse_vec to_sparse(const std::vector<rational> &v) {
  sparse_vec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0)
      s.emplace(i, v[i]);
  return s;
}

// Incremental echelon basis of the column span. Each basis vector records the
// combination of original columns it equals, so a successful reduction of a
// target yields a certificate.
struct column_echelon {
  struct entry {
    std::size_t pivot;
    sparse_vec v;     // v[pivot] == 1
    sparse_vec combo; // v == sum combo[j] * column_j
  };
  std::vector<entry> basis;

  // Subtracts basis multiples from v in insertion order; returns the
  // coefficients used, expressed over original columns.
  sparse_vec reduce(sparse_vec &v, sparse_vec *combo) const {
    sparse_vec used;
    for (const auto &b : basis) {
      auto it = v.find(b.pivot);
      if (it == v.end())
        continue;
      rational c = it->second;
      axpy(v, c, b.v);
      if (combo)
        axpy(*combo, c, b.combo);
      axpy(used, -c, b.combo);
    }
    return used;
  }

  void insert(const std::vector<rational> &col, std::size_t index) {
    sparse_vec v = to_sparse(col);
    sparse_vec combo{{index, rational(1)}};
    reduce(v, &combo);
    if (v.empty())
      return;
    // Pivot on the entry of least height; ties go to the lowest row.
    auto best = v.begin();
    for (auto it = v.begin(); it != v.end(); ++it)
      if (height(it->second) < height(best->second))
        best = it;
    rational inv = 1 / best->second;
    for (auto &e : v)
      e.second *= inv;
    for (auto &e : combo)
      e.second *= inv;
    basis.push_back({best->first, std::move(v), std::move(combo)});
  }
};

} // namespace detail

inline membership_result
is_in_ideal(const membership_problem &pr,
            multiplier_order order = multiplier_order::grlex) {
  const poly &t = pr.target;
  if (!t.is_homogeneous(pr.degree))
    throw usage_error("membership target must be homogeneous of degree " +
                      std::to_string(pr.degree));
  membership_result res;
  if (t.is_zero()) {
    res.in_ideal = true;
    return res;
  }
  auto m = degree_span_matrix(pr.generators, pr.degree, t.arity(), order);
  detail::column_echelon ech;
  for (std::size_t j = 0; j < m.columns.size(); ++j)
    ech.insert(m.columns[j], j);
  auto v = detail::to_sparse(coeff_vector(t, pr.degree));
  auto used = ech.reduce(v, nullptr);
  if (!v.empty())
    return res;
  res.in_ideal = true;
  for (const auto &[j, c] : used)
    res.certificate.push_back(
        {m.labels[j].generator, m.labels[j].multiplier, c});
  return res;
}

// sum coefficient * multiplier * generator over the certificate.
inline poly recombine(const std::vector<poly> &gens,
                      const std::vector<certificate_term> &cert,
                      std::size_t arity) {
  poly r(arity);
  for (const auto &c : cert)
    r += poly::term(c.multiplier, c.coefficient) * gens.at(c.generator);
  return r;
}

} // namespace pontclass
