#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"

using namespace qwalk;
using std::numbers::pi;

TEST_CASE("half line, one step at pi/4") {
  Coin coin = make_coin(pi / 4);
  Distribution d = distribution(step_half_line(initial_half_line(coin), coin));
  REQUIRE(d.rows.size() == 2);
  // both surviving components sit in |1>
  CHECK(d.rows[0].x == 0);
  CHECK(*d.rows[0].p0 == doctest::Approx(0.0));
  CHECK(*d.rows[0].p1 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.rows[1].x == 1);
  CHECK(*d.rows[1].p0 == doctest::Approx(0.0));
  CHECK(*d.rows[1].p1 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(d.total() - 1.0) < 1e-15);
}

TEST_CASE("half line, one step at theta = 0") {
  // C = diag(1, -1): the |0> part is turned around at the boundary, the |1> part moves right
  Coin coin = make_coin(0.0);
  Distribution d = distribution(evolve_half_line(coin, 1));
  CHECK(d.prob_at(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.prob_at(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*d.find(0)->p1 == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("half-line norm is preserved over 1000 steps") {
  HalfLineState s = evolve_half_line(make_coin(1.0), 1000);
  CHECK(s.t() == 1000);
  CHECK(s.amps().size() == 1001);
  CHECK(std::abs(s.norm_sq() - 1.0) <= 1e-12);
}

TEST_CASE("line walk hand values at pi/4") {
  Coin coin = make_coin(pi / 4);
  Distribution d1 = distribution(evolve_line(coin, 1));
  CHECK(d1.prob_at(-2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d1.prob_at(-1) == doctest::Approx(0.5).epsilon(1e-15));
  // the double literal pi/4 sits ~3e-17 off the true angle, so the
  // destructive interference leaves ~1e-33 rather than exactly 0
  CHECK(d1.prob_at(0) <= 1e-30);
  CHECK(d1.prob_at(1) <= 1e-30);
  // the |0> component carries everything after one step
  CHECK(*d1.find(-2)->p0 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*d1.find(-2)->p1 == 0.0);

  Distribution d2 = distribution(evolve_line(coin, 2));
  for (int x : {-3, -2, -1, 0}) CHECK(d2.prob_at(x) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(d2.prob_at(1) <= 1e-30);
  CHECK(d2.prob_at(2) <= 1e-30);
}

TEST_CASE("line amplitudes stay real") {
  for (double theta : {pi / 4, pi / 3, 1.0}) {
    LineState s = evolve_line(make_coin(theta), 500);
    double worst = 0.0;
    for (const auto& a : s.amps()) worst = std::max({worst, std::abs(a.a0.imag()), std::abs(a.a1.imag())});
    CHECK(worst < 1e-15);
  }
}

TEST_CASE("evolve dispatches and validates") {
  Coin coin = make_coin(pi / 4);
  auto zero = std::get<HalfLineState>(evolve(WalkKind::HalfLine, coin, 0));
  CHECK(zero.t() == 0);
  CHECK(zero.at(0).a0 == initial_half_line(coin).at(0).a0);

  auto two = std::get<LineState>(evolve(WalkKind::Line, coin, 2));
  CHECK(two.t() == 2);
  CHECK(two.offset() == -3);
  CHECK(distribution(two).prob_at(-3) == doctest::Approx(0.25));

  auto long_run = std::get<HalfLineState>(evolve(WalkKind::HalfLine, make_coin(pi / 3), 500));
  CHECK(std::abs(long_run.norm_sq() - 1.0) <= 1e-12);

  CHECK_THROWS_AS(evolve(WalkKind::Line, coin, -1), InvalidArgument);
}

TEST_CASE("distribution rows cover the window") {
  Coin coin = make_coin(pi / 4);
  Distribution half = distribution(evolve_half_line(coin, 7));
  CHECK(half.rows.front().x == 0);
  CHECK(half.rows.back().x == 7);
  Distribution line = distribution(evolve_line(coin, 7));
  CHECK(line.rows.front().x == -8);
  CHECK(line.rows.back().x == 7);
  for (const auto& r : line.rows) {
    CHECK(r.p >= 0.0);
    CHECK(r.p == *r.p0 + *r.p1);
  }
  CHECK(std::abs(line.total() - 1.0) <= 1e-12);
}

TEST_CASE("degenerate coins still evolve") {
  for (double theta : {0.0, pi / 2, pi, 3 * pi / 2}) {
    Coin coin = make_coin(theta);
    CHECK(std::abs(evolve_half_line(coin, 50).norm_sq() - 1.0) <= 1e-12);
    CHECK(std::abs(evolve_line(coin, 50).norm_sq() - 1.0) <= 1e-12);
  }
}

TEST_CASE("line distribution comes in equal adjacent pairs") {
  for (double theta : {pi / 4, pi / 3, pi / 6, 1.0}) {
    Coin coin = make_coin(theta);
    LineState s = initial_line(coin);
    double worst = 0.0;
    for (int t = 1; t <= 200; ++t) {
      s = step_line(s, coin);
      Distribution d = distribution(s);
      for (int m = 0; 2 * m <= t; ++m) {
        worst = std::max(worst, std::abs(d.prob_at(t - 2 * m) - d.prob_at(t - 2 * m - 1)));
        worst = std::max(worst, std::abs(d.prob_at(-(t - 2 * m) - 1) - d.prob_at(-(t - 2 * m))));
      }
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("evolution is deterministic") {
  Coin coin = make_coin(0.9);
  HalfLineState a = evolve_half_line(coin, 300);
  HalfLineState b = evolve_half_line(coin, 300);
  for (std::size_t i = 0; i < a.amps().size(); ++i) {
    CHECK(a.amps()[i].a0 == b.amps()[i].a0);
    CHECK(a.amps()[i].a1 == b.amps()[i].a1);
  }
}
