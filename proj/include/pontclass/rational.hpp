#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pontclass {

// Raised for caller mistakes: arity mismatches, malformed tokens, invalid
// parameters. The CLI maps it to exit code 2.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// after every arithmetic operation; construction from a numerator/denominator
// pair goes through make_rational, which canonicalizes explicitly.
using rational = mpq_class;

inline rational make_rational(long num, long den = 1) {
  if (den == 0)
    throw usage_error("zero denominator");
  rational r(num, den);
  r.canonicalize();
  return r;
}

inline rational parse_rational(const std::string &s) {
  rational r;
  if (r.set_str(s, 10) != 0)
    throw usage_error("not a rational number: " + s);
  if (r.get_den() == 0)
    throw usage_error("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const rational &r) { return r.get_str(10); }

inline bool is_zero(const rational &r) { return sgn(r) == 0; }

// Size proxy used for pivot selection: bit length of numerator plus bit
// length of denominator.
inline std::size_t height(const rational &r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

} // namespace pontclass
