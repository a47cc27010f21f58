#pragma once

// Limit densities of X_t / t (half line) and Y_t / t (line), their CDFs, the
// finite-time approximations they suggest, and a KS convergence diagnostic.

#include <cstdint>
#include <string_view>

#include "qwalk/core.hpp"

namespace qwalk {

enum class DensityKind { LineTotal, HalfInner0, HalfInner1, HalfTotal };

std::string_view to_string(DensityKind kind);
DensityKind parse_density_kind(std::string_view text);

/// Limit density of the scaled position. Support is (-|c|, |c|) for the line
/// and [0, |c|) for the half line; the endpoint |c| itself has density 0.
class LimitDensity {
 public:
  /// Throws FormulaDomainError for degenerate coins (c = 0 or s = 0).
  LimitDensity(const Coin& coin, DensityKind kind);

  const Coin& coin() const { return coin_; }
  DensityKind kind() const { return kind_; }
  double lower() const;  // -|c| or 0
  double upper() const { return abs_c_; }

  double density_at(double y) const;
  /// Integral of the density up to x, absolute error <= 1e-10.
  double cdf_at(double x) const;
  double total_mass() const { return cdf_at(upper()); }

 private:
  // integrand after y = |c| sin(phi)
  double integrand(double phi) const;

  Coin coin_;
  DensityKind kind_;
  double abs_c_;
  double abs_s_;
};

double density_at(const LimitDensity& d, double y);
double cdf_at(const LimitDensity& d, double x);

enum class ApproxKind { Inner0, Inner1, Total };

std::string_view to_string(ApproxKind kind);
ApproxKind parse_approx_kind(std::string_view text);

/// Large-t approximation of P(X_t = x; j) or P(X_t = x); 0 outside 0 <= x < |c| t.
double approx_prob(const Coin& coin, std::int64_t t, std::int64_t x, ApproxKind kind);

struct KSReport {
  std::int64_t t = 0;
  double theta = 0.0;
  double ks = 0.0;
};

/// Sup distance between the empirical CDF of the simulated walk's X_t / t
/// (inner-state masses for the Inner kinds, Y_t / t for LineTotal) and the
/// limit CDF, taken on both sides of every jump.
KSReport ks_distance(const Coin& coin, std::int64_t t, DensityKind kind);

/// Median KS over t in [center - radius, center + radius]; smooths the
/// parity oscillation of single-time values.
double ks_window_median(const Coin& coin, std::int64_t center, DensityKind kind,
                        std::int64_t radius = 2);

}  // namespace qwalk
