#ifndef QUIVERCOUNT_EXACT_HPP
#define QUIVERCOUNT_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace quivercount {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational power(const Rational& base, unsigned long e) {
  Rational r(power(Integer(base.get_num()), e), power(Integer(base.get_den()), e));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Parses "a", "-a" or "a/b"; throws InputError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Number-theoretic Moebius function; requires k >= 1.
int mobius(unsigned long k);

}  // namespace quivercount

#endif  // QUIVERCOUNT_EXACT_HPP
