#pragma once

#include <cstddef>
#include <vector>

#include "groupdata.hpp"
#include "poly.hpp"

namespace pontclass {

// Pipeline default: polynomial degree 4 (cohomological degree 8) is the
// least needed for p2.
inline constexpr unsigned default_max_degree = 4;

struct chern_class {
  std::size_t arity = 0;
  poly truncated_total;          // degrees 0..max_deg
  std::vector<poly> components;  // c_0 .. c_max_deg

  const poly &c(unsigned k) const { return components.at(k); }
};

struct pontryagin_pair {
  poly p1; // polynomial degree 2
  poly p2; // polynomial degree 4
};

// Raised by pontryagin_classes for complex groups, whose classes vanish by
// rule and have no weight data.
struct complex_group_error : usage_error {
  using usage_error::usage_error;
};

inline chern_class split_components(const poly &total, unsigned max_deg) {
  chern_class c;
  c.arity = total.arity();
  c.truncated_total = total;
  for (unsigned k = 0; k <= max_deg; ++k)
    c.components.push_back(graded_component(total, k));
  return c;
}

// prod over weights of (1 + w), folded left in stored order with every
// partial product truncated at max_deg.
inline chern_class total_chern(const std::vector<weight> &weights,
                               std::size_t arity, unsigned max_deg) {
  poly total = poly::constant(arity, 1);
  for (const auto &w : weights) {
    if (w.size() != arity)
      throw usage_error("weight length does not match ring arity");
    poly factor = weight_form(w) + poly::constant(arity, 1);
    total = poly_mul_truncated(total, factor, max_deg);
  }
  return split_components(total, max_deg);
}

inline chern_class total_chern(const isotropy_data &d,
                               unsigned max_deg = default_max_degree) {
  if (d.is_complex_marker())
    throw complex_group_error(
        "complex group: characteristic classes vanish by rule");
  return total_chern(d.weights, d.arity(), max_deg);
}

// Chern components after relation elimination.
inline chern_class reduced_chern(const isotropy_data &d,
                                 unsigned max_deg = default_max_degree) {
  auto c = total_chern(d, max_deg);
  return split_components(apply_relations(c.truncated_total, d.relations),
                          max_deg);
}

// p_i = (-1)^i c_{2i}, taken after the relations are substituted.
inline pontryagin_pair pontryagin_classes(const isotropy_data &d) {
  auto c = reduced_chern(d, default_max_degree);
  return {-c.c(2), c.c(4)};
}

inline pontryagin_pair pontryagin_classes(const group_spec &spec) {
  if (spec.is_complex())
    throw complex_group_error(
        "complex group: characteristic classes vanish by rule");
  return pontryagin_classes(get_isotropy_data(spec));
}

} // namespace pontclass
