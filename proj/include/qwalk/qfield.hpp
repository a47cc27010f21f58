#pragma once

#include <gmpxx.h>

namespace qwalk {

/// a + b*sqrt(2) with rational a, b.
struct QField {
  mpq_class a{0};
  mpq_class b{0};

  bool is_rational() const { return b == 0; }
  /// (a + b sqrt2)(a - b sqrt2) = a^2 - 2 b^2
  mpq_class norm() const { return a * a - 2 * b * b; }
  QField conjugate() const { return {a, -b}; }
  double to_double() const { return a.get_d() + b.get_d() * 1.4142135623730951; }
};

inline QField operator+(const QField& x, const QField& y) { return {x.a + y.a, x.b + y.b}; }
inline QField operator-(const QField& x, const QField& y) { return {x.a - y.a, x.b - y.b}; }
inline QField operator-(const QField& x) { return {-x.a, -x.b}; }
inline QField operator*(const QField& x, const QField& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}
inline bool operator==(const QField& x, const QField& y) { return x.a == y.a && x.b == y.b; }

/// x * sqrt(2)/2 = b + (a/2) sqrt(2)
inline QField times_half_sqrt2(const QField& x) { return {x.b, x.a / 2}; }

/// (re_a + re_b sqrt2) + i (im_a + im_b sqrt2)
struct QFieldComplex {
  QField re;
  QField im;

  /// |z|^2 = re^2 + im^2, still in Q(sqrt2).
  QField norm_sq() const { return re * re + im * im; }
};

inline QFieldComplex operator+(const QFieldComplex& x, const QFieldComplex& y) {
  return {x.re + y.re, x.im + y.im};
}
inline QFieldComplex operator-(const QFieldComplex& x, const QFieldComplex& y) {
  return {x.re - y.re, x.im - y.im};
}
inline QFieldComplex operator*(const QFieldComplex& x, const QFieldComplex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline bool operator==(const QFieldComplex& x, const QFieldComplex& y) {
  return x.re == y.re && x.im == y.im;
}
inline QFieldComplex times_half_sqrt2(const QFieldComplex& z) {
  return {times_half_sqrt2(z.re), times_half_sqrt2(z.im)};
}

}  // namespace qwalk
