#include "qwalk/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk {

using std::numbers::pi;

std::string_view to_string(DensityKind kind) {
  switch (kind) {
    case DensityKind::LineTotal: return "lineTotal";
    case DensityKind::HalfInner0: return "halfInner0";
    case DensityKind::HalfInner1: return "halfInner1";
    case DensityKind::HalfTotal: return "halfTotal";
  }
  return "halfTotal";
}

DensityKind parse_density_kind(std::string_view text) {
  if (text == "lineTotal" || text == "line") return DensityKind::LineTotal;
  if (text == "halfInner0" || text == "inner0") return DensityKind::HalfInner0;
  if (text == "halfInner1" || text == "inner1") return DensityKind::HalfInner1;
  if (text == "halfTotal" || text == "total") return DensityKind::HalfTotal;
  throw InvalidArgument("unknown density kind '" + std::string(text) + "'");
}

std::string_view to_string(ApproxKind kind) {
  switch (kind) {
    case ApproxKind::Inner0: return "inner0";
    case ApproxKind::Inner1: return "inner1";
    case ApproxKind::Total: return "total";
  }
  return "total";
}

ApproxKind parse_approx_kind(std::string_view text) {
  if (text == "inner0") return ApproxKind::Inner0;
  if (text == "inner1") return ApproxKind::Inner1;
  if (text == "total") return ApproxKind::Total;
  throw InvalidArgument("unknown approximation kind '" + std::string(text) + "'");
}

LimitDensity::LimitDensity(const Coin& coin, DensityKind kind)
    : coin_(coin), kind_(kind), abs_c_(std::abs(coin.c)), abs_s_(std::abs(coin.s)) {
  if (is_degenerate(coin)) {
    throw FormulaDomainError("limit densities need 0 < |cos theta| < 1; got theta = " +
                             format_angle(coin.angle()));
  }
}

double LimitDensity::lower() const { return kind_ == DensityKind::LineTotal ? -abs_c_ : 0.0; }

double LimitDensity::density_at(double y) const {
  if (!std::isfinite(y)) throw InvalidArgument("density argument must be finite");
  if (y >= abs_c_ || y < lower() || (kind_ == DensityKind::LineTotal && y <= lower())) return 0.0;
  // factored to keep digits near the endpoint
  const double root = std::sqrt((abs_c_ - y) * (abs_c_ + y));
  switch (kind_) {
    case DensityKind::LineTotal:
    case DensityKind::HalfInner0: return abs_s_ / (pi * (1.0 + y) * root);
    case DensityKind::HalfInner1: return abs_s_ / (pi * (1.0 - y) * root);
    case DensityKind::HalfTotal: return 2.0 * abs_s_ / (pi * (1.0 - y) * (1.0 + y) * root);
  }
  return 0.0;
}

double LimitDensity::integrand(double phi) const {
  const double v = abs_c_ * std::sin(phi);
  switch (kind_) {
    case DensityKind::LineTotal:
    case DensityKind::HalfInner0: return abs_s_ / (pi * (1.0 + v));
    case DensityKind::HalfInner1: return abs_s_ / (pi * (1.0 - v));
    case DensityKind::HalfTotal: return 2.0 * abs_s_ / (pi * (1.0 - v) * (1.0 + v));
  }
  return 0.0;
}

double LimitDensity::cdf_at(double x) const {
  if (!std::isfinite(x)) throw InvalidArgument("cdf argument must be finite");
  if (x <= lower()) return 0.0;
  const double lo = kind_ == DensityKind::LineTotal ? -pi / 2 : 0.0;
  const double hi = x >= abs_c_ ? pi / 2 : std::asin(x / abs_c_);
  // Integrate over u in [0, 1]: Boost compares its per-panel error without the
  // interval's scale against a scaled tolerance, so very short phi ranges would
  // otherwise refine to the depth limit. The integrand is bounded but peaks
  // near phi = -+pi/2 as |c| -> 1, hence the generous depth.
  const double width = hi - lo;
  if (width <= 0.0) return 0.0;
  double error = 0.0;
  double value = width * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                             [&](double u) { return integrand(lo + width * u); }, 0.0, 1.0, 20,
                             1e-13, &error);
  return std::clamp(value, 0.0, 1.0);
}

double density_at(const LimitDensity& d, double y) { return d.density_at(y); }
double cdf_at(const LimitDensity& d, double x) { return d.cdf_at(x); }

double approx_prob(const Coin& coin, std::int64_t t, std::int64_t x, ApproxKind kind) {
  if (t < 1) throw InvalidArgument("approximation needs t >= 1");
  const double c = std::abs(coin.c);
  const double s = std::abs(coin.s);
  const double td = static_cast<double>(t);
  const double xd = static_cast<double>(x);
  if (x < 0 || xd >= c * td) return 0.0;
  const double root = std::sqrt((c * td - xd) * (c * td + xd));
  switch (kind) {
    case ApproxKind::Inner0: return s * td / (pi * (td + xd) * root);
    case ApproxKind::Inner1: return s * td / (pi * (td - xd) * root);
    case ApproxKind::Total: return 2.0 * s * td * td / (pi * (td - xd) * (td + xd) * root);
  }
  return 0.0;
}

KSReport ks_distance(const Coin& coin, std::int64_t t, DensityKind kind) {
  if (t < 1) throw InvalidArgument("KS distance needs t >= 1");
  const LimitDensity density(coin, kind);
  const bool line = kind == DensityKind::LineTotal;
  const Distribution dist =
      line ? distribution(evolve_line(coin, t)) : distribution(evolve_half_line(coin, t));

  double cumulative = 0.0;
  double worst = 0.0;
  for (const auto& row : dist.rows) {
    double mass = row.p;
    if (kind == DensityKind::HalfInner0) mass = row.p0.value_or(0.0);
    if (kind == DensityKind::HalfInner1) mass = row.p1.value_or(0.0);
    const double limit = density.cdf_at(static_cast<double>(row.x) / static_cast<double>(t));
    worst = std::max(worst, std::abs(cumulative - limit));  // left of the jump
    cumulative += mass;
    worst = std::max(worst, std::abs(cumulative - limit));
  }
  return {t, coin.theta, std::clamp(worst, 0.0, 1.0)};
}

double ks_window_median(const Coin& coin, std::int64_t center, DensityKind kind,
                        std::int64_t radius) {
  if (radius < 0 || center - radius < 1) throw InvalidArgument("KS window must stay at t >= 1");
  std::vector<double> values;
  for (std::int64_t t = center - radius; t <= center + radius; ++t) {
    values.push_back(ks_distance(coin, t, kind).ks);
  }
  auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
  std::nth_element(values.begin(), mid, values.end());
  if (values.size() % 2 == 1) return *mid;
  double upper = *mid;
  double lower = *std::max_element(values.begin(), mid);
  return 0.5 * (lower + upper);
}

}  // namespace qwalk
