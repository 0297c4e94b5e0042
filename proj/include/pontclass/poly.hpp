#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "rational.hpp"

namespace pontclass {

// Exponent vector. Degrees are polynomial degrees throughout; the
// cohomological degree of a monomial is twice its polynomial degree.
using exponent = std::uint16_t;
using monomial = boost::container::small_vector<exponent, 12>;

inline unsigned degree(const monomial &m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

// Graded-lex order, variable 1 highest. Lower degrees come first; inside a
// degree, y1^2 < y1*y2 < y2^2.
struct grlex_less {
  bool operator()(const monomial &a, const monomial &b) const {
    unsigned da = degree(a), db = degree(b);
    if (da != db)
      return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(),
                                        a.end());
  }
};

template <class Coeff> class basic_poly {
public:
  using coeff_type = Coeff;
  using term_map = std::map<monomial, Coeff, grlex_less>;

  basic_poly() = default;
  explicit basic_poly(std::size_t arity) : arity_(arity) {}

  static basic_poly constant(std::size_t arity, const Coeff &c) {
    basic_poly p(arity);
    p.add_term(monomial(arity, 0), c);
    return p;
  }

  static basic_poly variable(std::size_t arity, std::size_t index,
                             const Coeff &c = Coeff(1)) {
    if (index >= arity)
      throw usage_error("variable index out of range");
    monomial m(arity, 0);
    m[index] = 1;
    basic_poly p(arity);
    p.add_term(m, c);
    return p;
  }

  static basic_poly term(const monomial &m, const Coeff &c) {
    basic_poly p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t arity() const { return arity_; }
  const term_map &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Highest polynomial degree present; 0 for the zero polynomial.
  unsigned degree() const {
    return terms_.empty() ? 0u : pontclass::degree(terms_.rbegin()->first);
  }

  bool is_homogeneous(unsigned d) const {
    for (const auto &t : terms_)
      if (pontclass::degree(t.first) != d)
        return false;
    return true;
  }

  Coeff coefficient(const monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const monomial &m, const Coeff &c) {
    if (m.size() != arity_)
      throw usage_error("monomial length does not match ring arity");
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  basic_poly &operator+=(const basic_poly &o) {
    check_arity(o);
    for (const auto &t : o.terms_)
      add_term(t.first, t.second);
    return *this;
  }
  basic_poly &operator-=(const basic_poly &o) {
    check_arity(o);
    for (const auto &t : o.terms_)
      add_term(t.first, -t.second);
    return *this;
  }
  basic_poly &operator*=(const Coeff &c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto &t : terms_)
      t.second *= c;
    return *this;
  }

  basic_poly operator-() const {
    basic_poly r(*this);
    for (auto &t : r.terms_)
      t.second = -t.second;
    return r;
  }

  friend basic_poly operator+(basic_poly a, const basic_poly &b) {
    return a += b;
  }
  friend basic_poly operator-(basic_poly a, const basic_poly &b) {
    return a -= b;
  }
  friend basic_poly operator*(basic_poly a, const Coeff &c) { return a *= c; }
  friend basic_poly operator*(const Coeff &c, basic_poly a) { return a *= c; }
  friend basic_poly operator*(const basic_poly &a, const basic_poly &b) {
    return multiply(a, b, -1);
  }

  friend bool operator==(const basic_poly &a, const basic_poly &b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const basic_poly &a, const basic_poly &b) {
    return !(a == b);
  }

  // Product keeping only terms of degree <= max_deg; max_deg < 0 means no
  // truncation. Terms are visited in degree order, so the inner loop stops as
  // soon as the degree bound is exceeded and higher terms are never formed.
  static basic_poly multiply(const basic_poly &a, const basic_poly &b,
                             long max_deg) {
    a.check_arity(b);
    basic_poly r(a.arity_);
    monomial m(a.arity_, 0);
    for (const auto &ta : a.terms_) {
      long da = pontclass::degree(ta.first);
      if (max_deg >= 0 && da > max_deg)
        break;
      for (const auto &tb : b.terms_) {
        if (max_deg >= 0 && da + long(pontclass::degree(tb.first)) > max_deg)
          break;
        for (std::size_t i = 0; i < m.size(); ++i)
          m[i] = ta.first[i] + tb.first[i];
        r.add_term(m, ta.second * tb.second);
      }
    }
    return r;
  }

private:
  void check_arity(const basic_poly &o) const {
    if (arity_ != o.arity_)
      throw usage_error("ring arity mismatch: " + std::to_string(arity_) +
                        " vs " + std::to_string(o.arity_));
  }

  std::size_t arity_ = 0;
  term_map terms_;
};

using poly = basic_poly<rational>;

template <class C>
basic_poly<C> poly_add(const basic_poly<C> &a, const basic_poly<C> &b) {
  return a + b;
}

template <class C>
basic_poly<C> poly_mul(const basic_poly<C> &a, const basic_poly<C> &b) {
  return basic_poly<C>::multiply(a, b, -1);
}

template <class C>
basic_poly<C> poly_mul_truncated(const basic_poly<C> &a,
                                 const basic_poly<C> &b, unsigned max_deg) {
  return basic_poly<C>::multiply(a, b, long(max_deg));
}

template <class C>
basic_poly<C> graded_component(const basic_poly<C> &p, unsigned d) {
  basic_poly<C> r(p.arity());
  for (const auto &t : p.terms())
    if (degree(t.first) == d)
      r.add_term(t.first, t.second);
  return r;
}

template <class C>
basic_poly<C> truncate(const basic_poly<C> &p, unsigned max_deg) {
  basic_poly<C> r(p.arity());
  for (const auto &t : p.terms()) {
    if (degree(t.first) > max_deg)
      break;
    r.add_term(t.first, t.second);
  }
  return r;
}

template <class C> basic_poly<C> power(const basic_poly<C> &p, unsigned k) {
  basic_poly<C> r = basic_poly<C>::constant(p.arity(), C(1));
  for (unsigned i = 0; i < k; ++i)
    r = r * p;
  return r;
}

// Linear form sum_i coords[i] * x_i.
template <class C> basic_poly<C> linear_form(const std::vector<C> &coords) {
  basic_poly<C> p(coords.size());
  monomial m(coords.size(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    m[i] = 1;
    p.add_term(m, coords[i]);
    m[i] = 0;
  }
  return p;
}

// All monomials of polynomial degree d in graded-lex order.
inline std::vector<monomial> monomials_of_degree(std::size_t arity,
                                                 unsigned d) {
  if (arity == 0)
    throw usage_error("arity must be positive");
  std::vector<monomial> out;
  monomial m(arity, 0);
  // Fill position i with every admissible exponent, largest first.
  auto rec = [&](auto &self, std::size_t i, unsigned left) -> void {
    if (i + 1 == arity) {
      m[i] = exponent(left);
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[i] = exponent(e);
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

template <class C>
std::vector<C> coeff_vector(const basic_poly<C> &p, unsigned d) {
  if (!p.is_homogeneous(d))
    throw usage_error("coeff_vector: polynomial is not homogeneous of degree " +
                      std::to_string(d));
  auto basis = monomials_of_degree(p.arity(), d);
  std::vector<C> v(basis.size(), C(0));
  for (const auto &t : p.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t.first,
                               grlex_less{});
    v[std::size_t(it - basis.begin())] = t.second;
  }
  return v;
}

template <class C>
basic_poly<C> from_coeff_vector(const std::vector<C> &v, std::size_t arity,
                                unsigned d) {
  auto basis = monomials_of_degree(arity, d);
  if (basis.size() != v.size())
    throw usage_error("from_coeff_vector: length mismatch");
  basic_poly<C> p(arity);
  for (std::size_t i = 0; i < v.size(); ++i)
    p.add_term(basis[i], v[i]);
  return p;
}

// Ring homomorphism x_i -> images[i] into a ring of the given arity.
template <class C>
basic_poly<C> substitute_all(const basic_poly<C> &p,
                             const std::vector<basic_poly<C>> &images,
                             std::size_t target_arity) {
  if (images.size() != p.arity())
    throw usage_error("substitute_all: one image per variable required");
  for (const auto &img : images)
    if (img.arity() != target_arity)
      throw usage_error("substitute_all: image arity mismatch");
  std::vector<std::vector<basic_poly<C>>> powers(p.arity());
  auto pow_of = [&](std::size_t i, unsigned e) -> const basic_poly<C> & {
    auto &cache = powers[i];
    if (cache.empty())
      cache.push_back(basic_poly<C>::constant(target_arity, C(1)));
    while (cache.size() <= e)
      cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  basic_poly<C> r(target_arity);
  for (const auto &t : p.terms()) {
    basic_poly<C> acc = basic_poly<C>::constant(target_arity, t.second);
    for (std::size_t i = 0; i < p.arity(); ++i)
      if (t.first[i] != 0)
        acc = acc * pow_of(i, t.first[i]);
    r += acc;
  }
  return r;
}

// Eliminates variable var_index by x_var := replacement, then drops that
// slot, so the result lives in a ring with one variable fewer.
template <class C>
basic_poly<C> substitute_linear(const basic_poly<C> &p, std::size_t var_index,
                                const basic_poly<C> &replacement) {
  if (replacement.arity() != p.arity())
    throw usage_error("substitute_linear: arity mismatch");
  if (var_index >= p.arity())
    throw usage_error("substitute_linear: variable index out of range");
  if (!replacement.is_homogeneous(1))
    throw usage_error("substitute_linear: replacement must be linear");
  for (const auto &t : replacement.terms())
    if (t.first[var_index] != 0)
      throw usage_error("substitute_linear: replacement involves the "
                        "eliminated variable");
  std::size_t n = p.arity();
  std::vector<basic_poly<C>> images;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == var_index) {
      basic_poly<C> r(n - 1);
      for (const auto &t : replacement.terms()) {
        monomial m;
        for (std::size_t j = 0; j < n; ++j)
          if (j != var_index)
            m.push_back(t.first[j]);
        r.add_term(m, t.second);
      }
      images.push_back(r);
    } else {
      images.push_back(basic_poly<C>::variable(n - 1, i < var_index ? i : i - 1));
    }
  }
  return substitute_all(p, images, n - 1);
}

// Canonical rendering: graded-lex order, coefficients "a/b" with "/1"
// omitted, unit coefficients dropped on non-constant terms.
template <class C>
std::string render(const basic_poly<C> &p,
                   const std::vector<std::string> &names) {
  if (names.size() != p.arity())
    throw usage_error("render: need one name per variable");
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &t : p.terms()) {
    C c = t.second;
    bool neg = c < 0;
    if (neg)
      c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool constant = degree(t.first) == 0;
    std::string mono;
    for (std::size_t i = 0; i < t.first.size(); ++i) {
      if (t.first[i] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += names[i];
      if (t.first[i] > 1)
        mono += "^" + std::to_string(t.first[i]);
    }
    if (constant)
      out += to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += to_string(c) + "*" + mono;
  }
  return out;
}

inline std::vector<std::string> default_names(std::size_t arity) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < arity; ++i)
    n.push_back("x" + std::to_string(i + 1));
  return n;
}

template <class C> std::string render(const basic_poly<C> &p) {
  return render(p, default_names(p.arity()));
}

// True when b = s * a for some nonzero scalar s; both must be nonzero.
template <class C>
bool proportional(const basic_poly<C> &a, const basic_poly<C> &b) {
  if (a.is_zero() || b.is_zero() || a.arity() != b.arity() ||
      a.size() != b.size())
    return false;
  const auto &ta = *a.terms().begin();
  C s = b.coefficient(ta.first) / ta.second;
  if (s == 0)
    return false;
  return a * s == b;
}

} // namespace pontclass
