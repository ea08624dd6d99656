#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ridesched/oracle.hpp"
#include "ridesched/scheduler.hpp"
#include "support.hpp"

using namespace ridesched;
using testsup::worked_example;

namespace {

Schedule schedule_from_starts(const RouteSequence& r, const std::vector<double>& t) {
  Schedule s;
  s.starts = t;
  s.waits.assign(r.size(), 0.0);
  s.waits[0] = t[0] - r.nodes[0].window_open;
  for (int i = 1; i < r.size(); ++i)
    s.waits[i] = t[i] - t[i - 1] - r.nodes[i - 1].service - r.leg_travel[i - 1];
  s.excess = excess_ride_time(r, t);
  s.verdict = {true, InfeasibilityReason::TimeWindow, -1};
  return s;
}

}  // namespace

TEST_CASE("oracle reproduces the worked example optimum") {
  RouteSequence r = worked_example();
  PreprocessedRoute pre = preprocess(r);
  OracleResult o = oracle_schedule(r, pre);
  REQUIRE(o.feasible);
  CHECK(o.excess == doctest::Approx(2.0));
  Schedule s = schedule_from_starts(r, o.starts);
  CHECK(check_schedule(r, s).empty());
}

TEST_CASE("LP1 path agrees on a non-unit-load variant") {
  RouteSequence r = worked_example();
  r.capacity = 10;
  for (Node& nd : r.nodes) {
    if (nd.kind == NodeKind::Pickup) nd.load_delta = 2;
    if (nd.kind == NodeKind::Dropoff) nd.load_delta = -2;
  }
  PreprocessedRoute pre = preprocess(r);
  OracleResult o = oracle_schedule(r, pre);
  REQUIRE(o.feasible);
  CHECK(o.excess == doctest::Approx(2.0));
}

TEST_CASE("window-crossed routes are oracle-infeasible") {
  RouteSequence r = worked_example();
  r.nodes[3].window_close = 45;
  PreprocessedRoute pre = preprocess(r);
  CHECK_FALSE(oracle_schedule(r, pre).feasible);
}

TEST_CASE("ride-impossible routes are oracle-infeasible") {
  RouteSequence r = worked_example();
  r.nodes[1].max_ride = 15;  // direct needs 20 travel + service in between
  PreprocessedRoute pre = preprocess(r);
  CHECK_FALSE(oracle_schedule(r, pre).feasible);
}

TEST_CASE("LP1 and LP2 agree on unit-load routes") {
  std::mt19937_64 rng(2468);
  int agreed = 0;
  for (int it = 0; it < 10000; ++it) {
    RouteSequence r = testsup::random_route(rng, 1 + static_cast<int>(rng() % 4));
    PreprocessedRoute pre = preprocess(r);
    if (pre.window_infeasible_at) continue;
    lp::Solution s2 = lp::solve(build_lp2(r, pre));
    lp::Solution s1 = lp::solve(build_lp1(r, pre));
    CHECK((s1.status == lp::SolveStatus::Optimal) ==
          (s2.status == lp::SolveStatus::Optimal));
    if (s1.status != lp::SolveStatus::Optimal ||
        s2.status != lp::SolveStatus::Optimal)
      continue;
    double ex2 = excess_ride_time(r, build_times(s2.values, pre));
    CHECK(s1.objective == doctest::Approx(ex2).epsilon(1e-6));
    ++agreed;
  }
  CHECK(agreed > 1000);
}

TEST_CASE("oracle starts respect the tightened bounds") {
  std::mt19937_64 rng(1357);
  int feasible = 0;
  for (int it = 0; it < 10000; ++it) {
    RouteSequence r = testsup::random_route(rng, 1 + static_cast<int>(rng() % 5));
    PreprocessedRoute pre = preprocess(r);
    OracleResult o = oracle_schedule(r, pre);
    if (!o.feasible) continue;
    ++feasible;
    for (int i = 0; i < r.size(); ++i) {
      CHECK(o.starts[i] >= pre.et[i] - 1e-6);
      CHECK(o.starts[i] <= pre.lt[i] + 1e-6);
    }
    Schedule s = schedule_from_starts(r, o.starts);
    auto v = check_schedule(r, s);
    if (!v.empty()) {
      CAPTURE(v.front().what);
      CHECK(v.empty());
    }
  }
  CHECK(feasible > 1000);
}

TEST_CASE("the scheduler never beats the oracle") {
  std::mt19937_64 rng(86420);
  int compared = 0;
  for (int it = 0; it < 10000; ++it) {
    RouteSequence r = testsup::random_route(rng, 1 + static_cast<int>(rng() % 5));
    PreprocessedRoute pre = preprocess(r);
    Schedule s = schedule_route(r, pre);
    if (!s.verdict.feasible) continue;
    OracleResult o = oracle_schedule(r, pre);
    REQUIRE(o.feasible);  // a sound heuristic schedule implies LP feasibility
    CHECK(s.excess >= o.excess - 1e-6);
    ++compared;
  }
  CHECK(compared > 1000);
}

TEST_CASE("battery oracle matches the plain oracle without stations") {
  RouteSequence r = worked_example();
  PreprocessedRoute pre = preprocess(r);
  BatteryParams p;
  p.capacity = 100;
  p.init = 100;
  p.end_ratio = 0.1;
  p.discharge_rate = 0.2;
  OracleResult plain = oracle_schedule(r, pre);
  OracleResult batt = oracle_schedule_battery(r, pre, p);
  REQUIRE(plain.feasible);
  REQUIRE(batt.feasible);
  CHECK(batt.excess == doctest::Approx(plain.excess));
}

TEST_CASE("battery oracle rejects an energy-impossible route") {
  RouteSequence r = worked_example();
  PreprocessedRoute pre = preprocess(r);
  BatteryParams p;
  p.capacity = 100;
  p.init = 5;  // total travel 50 at rate 0.2 needs 10
  p.end_ratio = 0.0;
  p.discharge_rate = 0.2;
  CHECK_FALSE(oracle_schedule_battery(r, pre, p).feasible);
}

TEST_CASE("audit classifies all five outcomes") {
  OracleResult inf;
  OracleResult ok;
  ok.feasible = true;
  ok.excess = 10.0;

  CHECK(audit(false, 0, inf).cls == AuditClass::BothInfeasible);
  CHECK(audit(false, 0, ok).cls == AuditClass::IncorrectInfeasibility);
  CHECK(audit(true, 3.0, inf).cls == AuditClass::UnsoundFeasible);
  CHECK(audit(true, 10.0, ok).cls == AuditClass::Optimal);

  AuditRecord dev = audit(true, 12.0, ok);
  CHECK(dev.cls == AuditClass::Deviating);
  CHECK(dev.deviation_pct == doctest::Approx(20.0));
  CHECK_FALSE(dev.zero_optimum);

  OracleResult zero;
  zero.feasible = true;
  zero.excess = 0.0;
  AuditRecord z = audit(true, 1.0, zero);
  CHECK(z.cls == AuditClass::Deviating);
  CHECK(z.zero_optimum);
}

TEST_CASE("audit tolerates tiny numerical differences") {
  OracleResult ok;
  ok.feasible = true;
  ok.excess = 5.0;
  CHECK(audit(true, 5.0 + 1e-9, ok).cls == AuditClass::Optimal);
  CHECK(audit(true, 5.0 - 1e-9, ok).cls == AuditClass::Optimal);
}
