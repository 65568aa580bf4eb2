#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polynet {

// Arbitrary-precision rational scalar. GMP keeps every value canonical:
// reduced form, denominator > 0, zero stored as 0/1. All field operations
// are exact, so equality of two computed values is a mathematical statement.
using Rational = mpq_class;

// Raised when a computation violates an invariant that the construction
// guarantees (e.g. a zero pivot in a generalized Vandermonde solve).
// The CLI maps it to exit code 3.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Rational make_rational(long numerator, long denominator = 1) {
  if (denominator == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

// Parses "num/den" or a plain integer. Rejects anything else (floats enter
// through rational_from_double, which is an exact binary expansion).
inline Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite double");
  return Rational(x);  // exact binary expansion
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

// base^exponent with 0^0 = 1. Canonical form is preserved: gcd(n,d)=1
// implies gcd(n^e, d^e)=1.
inline Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent);
  return out;
}

inline mpz_class integer_pow(const mpz_class& base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline mpz_class rational_floor(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return out;
}

// Numerator of a rational that is known to be an integer.
inline mpz_class rational_to_integer(const Rational& q) {
  if (q.get_den() != 1) throw std::invalid_argument("rational_to_integer: value is not integral");
  return q.get_num();
}

inline bool fits_longlong(const mpz_class& z) {
  return z.fits_slong_p();
}

inline long long to_longlong(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer too large for machine word");
  return static_cast<long long>(z.get_si());
}

}  // namespace polynet
