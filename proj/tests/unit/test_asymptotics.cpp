#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qwalk/asymptotics.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

std::vector<Coin> theta_grid() {
  std::vector<Coin> out;
  for (int k = 1; k <= 20; ++k) out.push_back(make_coin(PiFraction{k, 21}));
  return out;
}

// Antiderivatives in phi (y = a sin phi, a = |c|, b = |s|), from the standard
// tables rather than from the library's quadrature.
//   int dphi / (1 + a sin phi)      = 2/sqrt(1-a^2) atan((tan(phi/2) + a)/sqrt(1-a^2))
//   int dphi / (1 - a^2 sin^2 phi)  = atan(sqrt(1-a^2) tan phi) / sqrt(1-a^2)
double plus_antideriv(double a, double phi) {
  const double w = std::sqrt(1.0 - a * a);
  return 2.0 / w * std::atan((std::tan(phi / 2.0) + a) / w);
}

double total_antideriv(double a, double phi) {
  const double w = std::sqrt(1.0 - a * a);
  if (phi >= pi / 2) return pi / (2.0 * w);
  return std::atan(w * std::tan(phi)) / w;
}

double oracle_cdf(const Coin& coin, DensityKind kind, double x) {
  const double a = std::abs(coin.c);
  const double b = std::abs(coin.s);
  const double lower = kind == DensityKind::LineTotal ? -a : 0.0;
  if (x <= lower) return 0.0;
  const double phi = x >= a ? pi / 2 : std::asin(x / a);
  switch (kind) {
    case DensityKind::LineTotal:
      return b / pi * (plus_antideriv(a, phi) - plus_antideriv(a, -pi / 2));
    case DensityKind::HalfInner0: return b / pi * (plus_antideriv(a, phi) - plus_antideriv(a, 0.0));
    case DensityKind::HalfInner1:
      // 1/(1 - a sin phi) is the mirror phi -> -phi
      return b / pi * (plus_antideriv(a, 0.0) - plus_antideriv(a, -phi));
    case DensityKind::HalfTotal: return 2.0 * b / pi * total_antideriv(a, phi);
  }
  return 0.0;
}

const DensityKind kKinds[] = {DensityKind::LineTotal, DensityKind::HalfInner0,
                              DensityKind::HalfInner1, DensityKind::HalfTotal};

}  // namespace

TEST_CASE("density examples") {
  const Coin q = make_coin(PiFraction{1, 4});
  CHECK(density_at(LimitDensity(q, DensityKind::HalfTotal), 0.0) ==
        doctest::Approx(2.0 / pi).epsilon(1e-15));
  CHECK(density_at(LimitDensity(q, DensityKind::LineTotal), 0.0) ==
        doctest::Approx(1.0 / pi).epsilon(1e-15));
  for (const Coin& coin : theta_grid()) {
    CHECK(density_at(LimitDensity(coin, DensityKind::HalfInner0), -0.1) == 0.0);
    for (DensityKind kind : kKinds) {
      LimitDensity d(coin, kind);
      CHECK(d.density_at(d.upper()) == 0.0);
      CHECK(d.density_at(d.upper() + 0.01) == 0.0);
      CHECK(d.density_at(-1.5) == 0.0);
    }
  }
  CHECK(LimitDensity(q, DensityKind::LineTotal).lower() == doctest::Approx(-std::sqrt(0.5)));
  CHECK_THROWS_AS(LimitDensity(make_coin(PiFraction{1, 2}), DensityKind::HalfTotal),
                  FormulaDomainError);
  CHECK_THROWS_AS(LimitDensity(make_coin(0.0), DensityKind::LineTotal), FormulaDomainError);
  CHECK_THROWS_AS(density_at(LimitDensity(q, DensityKind::HalfTotal), NAN), InvalidArgument);
}

TEST_CASE("every density kind has unit mass") {
  for (const Coin& coin : theta_grid()) {
    for (DensityKind kind : {DensityKind::LineTotal, DensityKind::HalfTotal}) {
      LimitDensity d(coin, kind);
      CHECK(std::abs(d.total_mass() - 1.0) <= 1e-8);
      CHECK(d.cdf_at(10.0) == d.total_mass());
      CHECK(d.cdf_at(d.lower()) == 0.0);
    }
    double split = LimitDensity(coin, DensityKind::HalfInner0).total_mass() +
                   LimitDensity(coin, DensityKind::HalfInner1).total_mass();
    CHECK(std::abs(split - 1.0) <= 1e-8);
  }
}

TEST_CASE("cdf matches tabulated antiderivatives") {
  for (const Coin& coin : theta_grid()) {
    for (DensityKind kind : kKinds) {
      LimitDensity d(coin, kind);
      for (int i = 0; i <= 200; ++i) {
        double x = -1.0 + 2.0 * i / 200.0;
        CHECK(std::abs(d.cdf_at(x) - oracle_cdf(coin, kind, x)) <= 1e-10);
      }
    }
  }
  LimitDensity line(make_coin(PiFraction{1, 4}), DensityKind::LineTotal);
  CHECK(line.cdf_at(0.0) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("line cdf at zero against a 1e7-point Riemann sum") {
  LimitDensity line(make_coin(PiFraction{1, 4}), DensityKind::LineTotal);
  const double lo = line.lower();
  const int n = 10'000'000;
  const double h = (0.0 - lo) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += line.density_at(lo + (i + 0.5) * h);
  // midpoint rule against an inverse-sqrt endpoint converges like sqrt(h)
  CHECK(std::abs(sum * h - line.cdf_at(0.0)) <= 1e-3);
}

TEST_CASE("mirror relation to the line density") {
  for (const Coin& coin : {make_coin(PiFraction{1, 4}), make_coin(PiFraction{1, 3}), make_coin(1.0)}) {
    LimitDensity inner1(coin, DensityKind::HalfInner1);
    LimitDensity line(coin, DensityKind::LineTotal);
    for (int i = 0; i < 10'000; ++i) {
      double y = inner1.upper() * i / 10'000.0;
      REQUIRE(std::abs(inner1.density_at(y) - line.density_at(-y)) <= 1e-14);
    }
  }
}

TEST_CASE("pi/4 half-line density matches the known Hadamard form") {
  LimitDensity d(make_coin(PiFraction{1, 4}), DensityKind::HalfTotal);
  const double end = 0.95 / std::sqrt(2.0);
  double worst = 0.0;
  for (int i = 0; i < 10'000; ++i) {
    double y = end * i / 10'000.0;
    double known = 2.0 / (pi * (1.0 - y * y) * std::sqrt(1.0 - 2.0 * y * y));
    worst = std::max(worst, std::abs(d.density_at(y) - known) / known);
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("cdf is monotone") {
  for (DensityKind kind : kKinds) {
    LimitDensity d(make_coin(PiFraction{2, 7}), kind);
    double prev = -1.0;
    for (int i = 0; i <= 10'000; ++i) {
      double x = -1.0 + 2.0 * i / 10'000.0;
      double v = d.cdf_at(x);
      REQUIRE(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("approximation formulas") {
  const Coin q = make_coin(PiFraction{1, 4});
  // x = 0: 2|s| t^2 / (pi t^2 |c| t) = 2 / (500 pi) at s = c
  CHECK(approx_prob(q, 500, 0, ApproxKind::Total) ==
        doctest::Approx(2.0 / (500.0 * pi)).epsilon(1e-14));
  for (ApproxKind kind : {ApproxKind::Inner0, ApproxKind::Inner1, ApproxKind::Total}) {
    CHECK(approx_prob(q, 500, 354, kind) == 0.0);  // |c| 500 = 353.55
    CHECK(approx_prob(q, 500, 1000, kind) == 0.0);
    CHECK(approx_prob(q, 500, -1, kind) == 0.0);
    CHECK(approx_prob(q, 500, 353, kind) > 0.0);
  }
  for (const Coin& coin : theta_grid()) {
    for (std::int64_t x = 0; x < 500; ++x) {
      double split = approx_prob(coin, 500, x, ApproxKind::Inner0) +
                     approx_prob(coin, 500, x, ApproxKind::Inner1);
      CHECK(std::abs(split - approx_prob(coin, 500, x, ApproxKind::Total)) <= 1e-15);
    }
  }
  CHECK_THROWS_AS(approx_prob(q, 0, 0, ApproxKind::Total), InvalidArgument);
  CHECK(parse_approx_kind("inner1") == ApproxKind::Inner1);
  CHECK_THROWS_AS(parse_approx_kind("both"), InvalidArgument);
}

TEST_CASE("approximation tracks t times the limit density") {
  const Coin coin = make_coin(PiFraction{1, 3});
  LimitDensity d(coin, DensityKind::HalfTotal);
  for (std::int64_t x = 0; x < 250; x += 7) {
    CHECK(approx_prob(coin, 500, x, ApproxKind::Total) ==
          doctest::Approx(d.density_at(x / 500.0) / 500.0).epsilon(1e-13));
  }
}

TEST_CASE("KS distance") {
  const Coin q = make_coin(PiFraction{1, 4});
  for (std::int64_t t : {1, 2, 3, 10}) {
    for (DensityKind kind : kKinds) {
      KSReport r = ks_distance(q, t, kind);
      CHECK(r.t == t);
      CHECK(r.ks >= 0.0);
      CHECK(r.ks <= 1.0);
    }
  }
  CHECK(ks_distance(q, 1000, DensityKind::HalfTotal).ks <= 0.05);
  CHECK(ks_distance(q, 400, DensityKind::LineTotal).ks <= 0.1);
  CHECK_THROWS_AS(ks_distance(q, 0, DensityKind::HalfTotal), InvalidArgument);
  CHECK_THROWS_AS(ks_distance(make_coin(PiFraction{1, 2}), 5, DensityKind::HalfTotal),
                  FormulaDomainError);
  CHECK_THROWS_AS(ks_window_median(q, 2, DensityKind::HalfTotal, 2), InvalidArgument);
  double m = ks_window_median(q, 50, DensityKind::HalfTotal, 2);
  CHECK(m > 0.0);
}
