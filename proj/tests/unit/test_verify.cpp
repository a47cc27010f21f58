#include <doctest.h>

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/verify.hpp"

using namespace qwalk;

namespace {

const Coin kQuarter = make_coin(PiFraction{1, 4});

std::vector<Coin> grid() {
  return {make_coin(PiFraction{1, 6}), kQuarter, make_coin(PiFraction{1, 3}), make_coin(1.0)};
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("suite names") {
  for (auto name : {"lemma1", "lemma2", "theorem1", "exactVsSim", "innerSplit", "limitNorm",
                    "ksConvergence", "all"}) {
    CHECK(to_string(parse_suite(name)) == name);
  }
  CHECK_THROWS_AS(parse_suite("lemma3"), InvalidArgument);
}

TEST_CASE("hand-checked reports") {
  VerificationReport r1 = run_checks(Suite::Reduction, {kQuarter}, {1});
  REQUIRE(r1.checks.size() == 1);
  CHECK(r1.checks[0].name == "theorem1");
  CHECK(r1.checks[0].max_residual <= 1e-15);
  CHECK(r1.checks[0].pass);

  VerificationReport r2 = run_checks(Suite::LineSymmetry, {kQuarter}, {2});
  REQUIRE(r2.checks.size() == 1);
  CHECK(r2.checks[0].max_residual <= 1e-15);
  CHECK(r2.checks[0].pass);

  VerificationReport r3 = run_checks(Suite::ExactVsSim, {make_coin(PiFraction{1, 2})}, {10});
  REQUIRE(r3.checks.size() == 1);
  CHECK(std::isinf(r3.checks[0].max_residual));
  CHECK_FALSE(r3.checks[0].pass);
  CHECK(r3.checks[0].note.find("domain error") != std::string::npos);
  CHECK(r3.failures() == 1);
}

TEST_CASE("reflection-only coins get domain entries for the identity suites") {
  VerificationReport r = run_checks(Suite::LineSymmetry, {make_coin(0.0)}, {1, 2, 3});
  REQUIRE(r.checks.size() == 1);
  CHECK_FALSE(r.checks[0].pass);
  // pi/2 is fine for the identities, only the closed forms exclude it
  VerificationReport ok = run_checks(Suite::Reduction, {make_coin(PiFraction{1, 2})}, range(0, 20));
  CHECK(ok.all_passed());
  CHECK(ok.checks.size() == 21);
}

TEST_CASE("residual functions catch a corrupted state") {
  const Coin coin = make_coin(PiFraction{1, 3});
  LineState line = evolve_line(coin, 12);
  HalfLineState half = evolve_half_line(coin, 12);
  CHECK(line_symmetry_residual(line, coin) <= 1e-15);
  CHECK(correspondence_residual(half, line) <= 1e-15);

  std::vector<AmplitudePair> amps;
  for (std::int64_t x = line.offset(); x <= 12; ++x) amps.push_back(line.at(x));
  amps[5].a1 += Complex(1e-6, 0.0);
  LineState bad(12, amps);
  CHECK(line_symmetry_residual(bad, coin) >= 0.9e-6);
  CHECK(correspondence_residual(half, bad) >= 0.9e-6);
  CHECK_THROWS_AS(correspondence_residual(evolve_half_line(coin, 3), line), InvalidArgument);
}

TEST_CASE("reduction residual on hand-made distributions") {
  Distribution half{WalkKind::HalfLine, 1, {{0, 0.0, 0.5, 0.5}, {1, 0.0, 0.5, 0.5}}};
  Distribution line{WalkKind::Line, 1, {{-2, 0.5, 0.0, 0.5}, {-1, 0.5, 0.0, 0.5}}};
  ReductionResidual r = reduction_residual(half, line);
  CHECK(r.inner0 == 0.0);
  CHECK(r.inner1 == 0.0);
  CHECK(r.total == 0.0);
  line.rows[0].p = 0.25;
  CHECK(reduction_residual(half, line).inner1 == doctest::Approx(0.25));
}

TEST_CASE("state suites pass on the grid for t <= 60") {
  for (Suite s : {Suite::LineSymmetry, Suite::HalfLineCorrespondence, Suite::Reduction,
                  Suite::ExactVsSim, Suite::InnerSplit}) {
    VerificationReport r = run_checks(s, grid(), range(0, 60));
    for (const auto& c : r.checks) {
      INFO(c.name, " theta=", c.theta_label, " t=", c.t, " residual=", c.max_residual, " ", c.note);
      CHECK(c.pass);
    }
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("exactVsSim tolerance schedule") {
  VerificationReport r = run_checks(Suite::ExactVsSim, {kQuarter, make_coin(1.0)}, {20, 50, 190});
  auto count = [&](std::string_view name) {
    return std::count_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == name; });
  };
  CHECK(count("exactVsSim.double") == 2);  // t = 20 only
  CHECK(count("exactVsSim.exact") == 3);   // pi/4 only
  CHECK(count("exactVsSim.dd") == 6);
  for (const auto& c : r.checks) {
    if (c.name == "exactVsSim.dd" && c.t == 190) {
      CHECK(c.skipped);  // double-double has run out of digits here
      CHECK(c.pass);
    } else {
      CHECK_FALSE(c.skipped);
    }
    CHECK(c.pass);
  }
}

TEST_CASE("limit suites") {
  VerificationReport norm = run_checks(Suite::LimitNorm, grid(), {});
  CHECK(norm.checks.size() == 12);
  CHECK(norm.all_passed());
  VerificationReport bad = run_checks(Suite::LimitNorm, {make_coin(PiFraction{1, 2})}, {});
  CHECK(bad.failures() == 1);

  VerificationReport ks = run_checks(Suite::KsConvergence, {kQuarter}, {});
  REQUIRE(ks.checks.size() == 2);
  CHECK(ks.checks[0].name == "ksConvergence.t1000");
  CHECK(ks.checks[0].max_residual <= 0.05);
  CHECK(ks.checks[1].name == "ksConvergence.trend");
  CHECK(ks.checks[1].max_residual < 0.0);
  CHECK(ks.all_passed());
}

TEST_CASE("run_checks validates times") {
  CHECK_THROWS_AS(run_checks(Suite::All, {kQuarter}, {-1}), InvalidArgument);
  CHECK(run_checks(Suite::Reduction, {kQuarter}, {}).checks.empty());
}
