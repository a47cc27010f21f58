#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two doubles with
// |lo| <= ulp(hi)/2, giving roughly 106 bits of significand.

#include <cmath>
#include <cstdint>

#include <gmpxx.h>

namespace qwalk {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}  // NOLINT: implicit widening is intended
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace dd_detail {

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DD operator-(const DD& a) { return {-a.hi, -a.lo}; }

inline DD operator+(const DD& a, const DD& b) {
  DD s = dd_detail::two_sum(a.hi, b.hi);
  DD t = dd_detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = dd_detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DD operator-(const DD& a, const DD& b) { return a + (-b); }

inline DD operator*(const DD& a, const DD& b) {
  DD p = dd_detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DD operator/(const DD& a, const DD& b) {
  double q1 = a.hi / b.hi;
  DD r = a - b * DD(q1);
  double q2 = r.hi / b.hi;
  r = r - b * DD(q2);
  double q3 = r.hi / b.hi;
  DD q = dd_detail::quick_two_sum(q1, q2);
  return q + DD(q3);
}

inline DD& operator+=(DD& a, const DD& b) { return a = a + b; }
inline DD& operator-=(DD& a, const DD& b) { return a = a - b; }
inline DD& operator*=(DD& a, const DD& b) { return a = a * b; }
inline DD& operator/=(DD& a, const DD& b) { return a = a / b; }

inline bool operator==(const DD& a, const DD& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator<(const DD& a, const DD& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DD& a, const DD& b) { return b < a; }

inline DD abs(const DD& a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline DD ldexp(const DD& a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

inline bool isfinite(const DD& a) { return std::isfinite(a.hi) && std::isfinite(a.lo); }

inline DD sqrt(const DD& a) {
  if (a.hi <= 0.0) return DD(0.0);
  double x = 1.0 / std::sqrt(a.hi);
  double ax = a.hi * x;
  DD diff = a - dd_detail::two_prod(ax, ax);
  return dd_detail::two_sum(ax, diff.hi * (x * 0.5));
}

/// Exact value of hi + lo as a rational.
inline mpq_class to_mpq(const DD& a) {
  mpq_class h(a.hi);
  mpq_class l(a.lo);
  return h + l;
}

/// Nearest double-double to an integer; exact when |z| < 2^106.
/// The binary exponent is returned separately so huge integers never overflow:
/// the value is mant * 2^exp with mant.hi in [0.5, 1).
inline DD mpz_to_dd_2exp(const mpz_class& z, long& exp) {
  if (z == 0) {
    exp = 0;
    return DD(0.0);
  }
  long e = 0;
  double hi = mpz_get_d_2exp(&e, z.get_mpz_t());
  exp = e;
  if (e <= 53) return DD(hi);
  // residual = z - hi * 2^e, computed exactly
  mpz_class top;
  mpz_set_d(top.get_mpz_t(), std::ldexp(hi, 53));
  top <<= static_cast<mp_bitcnt_t>(e - 53);
  mpz_class rest = z - top;
  if (rest == 0) return DD(hi);
  long e2 = 0;
  double lo = mpz_get_d_2exp(&e2, rest.get_mpz_t());
  return dd_detail::quick_two_sum(hi, std::ldexp(lo, static_cast<int>(e2 - e)));
}

inline const DD kDDPi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline const DD kDDHalfPi{1.570796326794896558e+00, 6.123233995736766036e-17};

namespace dd_detail {

// Taylor series on |x| <= pi/4.
inline DD sin_taylor(const DD& x) {
  DD x2 = x * x;
  DD term = x;
  DD sum = x;
  for (int k = 1; k < 40; ++k) {
    term = -term * x2 / DD(static_cast<double>((2 * k) * (2 * k + 1)));
    sum += term;
    if (std::abs(term.hi) < 1e-35) break;
  }
  return sum;
}

inline DD cos_taylor(const DD& x) {
  DD x2 = x * x;
  DD term(1.0);
  DD sum(1.0);
  for (int k = 1; k < 40; ++k) {
    term = -term * x2 / DD(static_cast<double>((2 * k - 1) * (2 * k)));
    sum += term;
    if (std::abs(term.hi) < 1e-35) break;
  }
  return sum;
}

}  // namespace dd_detail

/// cos and sin of a double-double angle. Accurate to a few ulps of DD for
/// moderate |x| (the reduction uses a two-word pi/2).
inline void sincos(const DD& x, DD& sin_out, DD& cos_out) {
  double q = std::nearbyint(x.hi / kDDHalfPi.hi);
  DD r = x - kDDHalfPi * DD(q);
  DD s = dd_detail::sin_taylor(r);
  DD c = dd_detail::cos_taylor(r);
  long quadrant = static_cast<long>(std::fmod(q, 4.0));
  if (quadrant < 0) quadrant += 4;
  switch (quadrant) {
    case 0: sin_out = s; cos_out = c; break;
    case 1: sin_out = c; cos_out = -s; break;
    case 2: sin_out = -s; cos_out = -c; break;
    default: sin_out = -c; cos_out = s; break;
  }
}

}  // namespace qwalk
