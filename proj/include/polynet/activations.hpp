#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "polynet/rational.hpp"

namespace polynet {

// The two piecewise-polynomial activations.
//
//   rho(x)   = 0 for x <= 0, (x-k)^(k+1) + k on [k, k+1] for integer k >= 0.
//              Coincides with max{0,x} on (-inf, 1].
//   sigma(x) = 0 for x <= -1, (x-k)^(a_k) (1 - b_k |x-k|)_+ on [k-1, k+1]
//              for even k >= 0, with the convention t^0 = 1 for every t.
//
// The sigma piece bookkeeping (m_k, a_k, b_k) enumerates all pairs
// (a, b) with a >= 0, b >= 1: within the band m(m+1) <= k < (m+1)(m+2)
// the exponent a_k runs 0..m while a_k + b_k = m_k + 1 stays fixed.

// t^e by repeated squaring; t^0 = 1 for every t including 0.
inline double pow_int(double t, long long e) {
  double out = 1.0;
  double base = t;
  for (long long n = e; n > 0; n >>= 1) {
    if (n & 1) out *= base;
    base *= base;
  }
  return out;
}

inline double rho(double x) {
  if (x <= 0.0) return 0.0;
  // Beyond 2^53 every double is an integer, so the shifted argument is 0
  // and the piece value collapses to k = x.
  if (x >= 9007199254740992.0) return x;
  const double kf = std::floor(x);
  const long long k = static_cast<long long>(kf);
  return pow_int(x - kf, k + 1) + kf;
}

// Value of the rho piece indexed by k at an arbitrary point, exact.
inline Rational rho_piece_value_exact(long long k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("rho piece index must be >= 0");
  Rational t = x - Rational(static_cast<long>(k));
  return rational_pow(t, static_cast<unsigned long>(k + 1)) + Rational(static_cast<long>(k));
}

inline Rational rho_exact(const Rational& x) {
  if (sgn(x) <= 0) return Rational(0);
  mpz_class kz = rational_floor(x);
  if (!fits_longlong(kz))
    throw std::domain_error("rho_exact: piece index exceeds machine range");
  return rho_piece_value_exact(to_longlong(kz), x);
}

struct SigmaPieceIndex {
  long long k = 0;  // even piece anchor
  long long m = 0;  // band index: m(m+1) <= k < (m+1)(m+2)
  long long a = 0;  // polynomial exponent of the piece
  long long b = 1;  // hat slope of the piece, b >= 1
};

// Unique (m, a, b) for even k >= 0. The band index is recovered from an
// integer square root and then certified against the bracketing
// inequality, so no float round-off can leak into the index arithmetic.
inline SigmaPieceIndex sigma_piece_index(long long k) {
  if (k < 0 || (k % 2) != 0)
    throw std::invalid_argument("sigma_piece_index: k must be even and >= 0");
  long long m = static_cast<long long>((std::sqrt(4.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  if (m < 0) m = 0;
  while (m > 0 && m * (m + 1) > k) --m;
  while ((m + 1) * (m + 2) <= k) ++m;
  if (!(m * (m + 1) <= k && k < (m + 1) * (m + 2)))
    throw internal_error("sigma_piece_index: bracketing failed");
  SigmaPieceIndex out;
  out.k = k;
  out.m = m;
  out.a = k / 2 - m * (m + 1) / 2;
  out.b = (m + 1) * (m + 2) / 2 - k / 2;
  return out;
}

// Even anchor of the piece whose interval [k-1, k+1] contains x.
inline long long sigma_piece_anchor(double x) {
  double half = std::floor((x + 1.0) / 2.0);
  if (half < 0.0) half = 0.0;
  if (half > 4503599627370496.0)
    throw std::domain_error("sigma: argument too large for exact piece arithmetic");
  return 2 * static_cast<long long>(half);
}

inline double sigma(double x) {
  if (x <= -1.0) return 0.0;
  const SigmaPieceIndex piece = sigma_piece_index(sigma_piece_anchor(x));
  const double t = x - static_cast<double>(piece.k);
  const double hat = 1.0 - static_cast<double>(piece.b) * std::abs(t);
  if (hat <= 0.0) return 0.0;
  return pow_int(t, piece.a) * hat;
}

// Value of the sigma piece indexed by k at an arbitrary point, exact.
inline Rational sigma_piece_value_exact(long long k, const Rational& x) {
  const SigmaPieceIndex piece = sigma_piece_index(k);
  Rational t = x - Rational(static_cast<long>(k));
  Rational hat = Rational(1) - Rational(static_cast<long>(piece.b)) * abs(t);
  if (sgn(hat) <= 0) return Rational(0);
  return rational_pow(t, static_cast<unsigned long>(piece.a)) * hat;
}

inline Rational sigma_exact(const Rational& x) {
  if (x <= -1) return Rational(0);
  mpz_class half = rational_floor((x + 1) / 2);
  if (half < 0) half = 0;
  mpz_class kz = 2 * half;
  if (!fits_longlong(kz))
    throw std::domain_error("sigma_exact: piece index exceeds machine range");
  return sigma_piece_value_exact(to_longlong(kz), x);
}

// The even k with a_k = r and b_k = M, in closed form. The band is
// m = M + r - 1, and within it a_k = r pins k = 2r + m(m+1). Tests
// certify this against an exhaustive piece scan.
inline long long sigma_knot_for(long long r, long long M) {
  if (r < 0) throw std::invalid_argument("sigma_knot_for: r must be >= 0");
  if (M < 1) throw std::invalid_argument("sigma_knot_for: M must be >= 1");
  const long long m = M + r - 1;
  return 2 * r + m * (m + 1);
}

// Certified Lipschitz constant of sigma on [-L, L] for even L >= 2.
// Each piece has local constant a_k + b_k = m_k + 1 <= k + 1.
inline long long sigma_lipschitz_bound(long long L) {
  if (L < 2 || (L % 2) != 0)
    throw std::invalid_argument("sigma_lipschitz_bound: L must be even and >= 2");
  return L + 1;
}

}  // namespace polynet
