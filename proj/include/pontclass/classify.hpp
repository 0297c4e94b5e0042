#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "charclass.hpp"
#include "groupdata.hpp"
#include "idealtest.hpp"

namespace pontclass {

enum class route { COMPLEX_RULE, IDEAL_TEST };

inline const char *to_string(route r) {
  return r == route::COMPLEX_RULE ? "COMPLEX_RULE" : "IDEAL_TEST";
}

struct vanishing_report {
  group_spec spec;
  int dim_M = 0;
  route via = route::IDEAL_TEST;
  std::vector<std::string> names; // variables after relation elimination
  poly p1_poly, p2_poly;
  std::vector<poly> kernel_gens; // after relation elimination, zeros dropped
  bool p1_vanishes = false;
  bool p2_vanishes = false;
  // Computed verdict: both classes vanish.
  bool in_theorem_1_1_list = false;
  std::optional<membership_result> p1_certificate, p2_certificate;
};

struct product_report {
  std::vector<vanishing_report> factors;
  bool all_vanish = false;
};

// The published vanishing list, used as an oracle and never as a code path:
// complex groups, SL_n(R), SU*_2n, SO_{p,1}, SO_{2,2}, SO_{3,3}, E6(-26), and
// the isogenous aliases SU_{1,1} ~ SO_{2,1} and Sp_{1,1} ~ SO_{4,1}.
inline bool theorem_1_1_member(const group_spec &s) {
  const auto &p = s.params;
  switch (s.fam) {
  case family::COMPLEX:
  case family::SL_R:
  case family::SU_STAR:
  case family::E6_m26:
    return true;
  case family::SO_PQ:
    return p[1] == 1 || (p[0] == 2 && p[1] == 2) || (p[0] == 3 && p[1] == 3);
  case family::SU_PQ:
  case family::SP_PQ:
    return p[0] == 1 && p[1] == 1;
  default:
    return false;
  }
}

struct classify_options {
  bool certificates = false;
  // Replaces the curated kernel generators (before relations); used by the
  // scaling and fault-injection tests.
  std::optional<std::vector<poly>> kernel_override;
};

inline vanishing_report classify(const group_spec &spec,
                                 const classify_options &opt = {}) {
  validate(spec);
  vanishing_report r;
  r.spec = spec;
  r.dim_M = dim_symmetric_space(spec);
  if (spec.is_complex()) {
    r.via = route::COMPLEX_RULE;
    r.p1_vanishes = r.p2_vanishes = true;
    r.in_theorem_1_1_list = true;
    return r;
  }
  auto d = get_isotropy_data(spec);
  r.names = reduced_names(d);
  auto pp = pontryagin_classes(d);
  r.p1_poly = pp.p1;
  r.p2_poly = pp.p2;
  const auto &raw = opt.kernel_override ? *opt.kernel_override : d.kernel_gens;
  for (const auto &g : raw) {
    auto red = apply_relations(g, d.relations);
    if (!red.is_zero())
      r.kernel_gens.push_back(red);
  }
  auto m1 = is_in_ideal({r.kernel_gens, r.p1_poly, 2});
  auto m2 = is_in_ideal({r.kernel_gens, r.p2_poly, 4});
  r.p1_vanishes = m1.in_ideal;
  r.p2_vanishes = m2.in_ideal;
  r.in_theorem_1_1_list = r.p1_vanishes && r.p2_vanishes;
  if (opt.certificates) {
    r.p1_certificate = m1;
    r.p2_certificate = m2;
  }
  return r;
}

inline bool agrees_with_theorem(const vanishing_report &r) {
  return r.in_theorem_1_1_list == theorem_1_1_member(r.spec);
}

inline product_report classify_product(const std::vector<group_spec> &specs,
                                       const classify_options &opt = {}) {
  if (specs.empty())
    throw usage_error("classify_product needs at least one factor");
  product_report pr;
  pr.all_vanish = true;
  for (const auto &s : specs) {
    pr.factors.push_back(classify(s, opt));
    pr.all_vanish = pr.all_vanish && pr.factors.back().in_theorem_1_1_list;
  }
  return pr;
}

// Classifies every spec; rows are computed on up to `threads` workers and
// returned in input order.
inline std::vector<vanishing_report>
classify_all(const std::vector<group_spec> &specs, unsigned threads = 1,
             const classify_options &opt = {}) {
  std::vector<vanishing_report> out(specs.size());
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(specs.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i)
      out[i] = classify(specs[i], opt);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();)
          out[i] = classify(specs[i], opt);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto &th : pool)
    th.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

inline std::vector<vanishing_report>
theorem_table(const catalog_bounds &b = {}, unsigned threads = 1,
              const classify_options &opt = {}) {
  return classify_all(catalog(b), threads, opt);
}

} // namespace pontclass
