#pragma once

#include <functional>

#include "ridesched/model.hpp"
#include "ridesched/preprocess.hpp"
#include "ridesched/scheduler.hpp"

namespace ridesched {

struct BatteryParams {
  double capacity = 0.0;        // Q
  double init = 0.0;            // B_init
  double end_ratio = 0.0;       // r, required fraction of Q at the destination
  double discharge_rate = 0.0;  // beta, energy per travel-time unit
  std::unordered_map<int, double> charge_rate;  // station node id -> alpha_s
};

struct BatteryPlan {
  std::vector<double> levels;                // B_i on arrival at node i
  std::unordered_map<int, double> charges;   // station node id -> E_s
  Verdict verdict;
};

// Stations become boundary nodes: destination depot of one sub-sequence and
// origin depot of the next. Concatenation reproduces the original route.
std::vector<RouteSequence> split_at_stations(const RouteSequence& route);

// Greedy sweep: recharge as much as possible, as early as possible. Charging
// time at a station displaces downstream waiting where available; the dwell
// shrinks when downstream latest-start bounds would be violated. Updates the
// schedule's waits/starts in place.
BatteryPlan plan_charging(const RouteSequence& route, Schedule& sched,
                          const BatteryParams& params, const PreprocessedRoute& pre);

// Independent validator re-deriving every battery constraint.
std::vector<Violation> check_battery_constraints(const RouteSequence& route,
                                                 const Schedule& sched,
                                                 const BatteryPlan& plan,
                                                 const BatteryParams& params);

using ScheduleFn =
    std::function<Schedule(const RouteSequence&, const PreprocessedRoute&)>;

struct EvalResult {
  Schedule schedule;
  std::optional<BatteryPlan> battery;
};

// Full pipeline for a possibly station-bearing route: split, schedule each
// sub-sequence with propagated departure times, stitch, then plan charging
// when battery parameters are given.
EvalResult evaluate_route(const RouteSequence& route,
                          const std::optional<BatteryParams>& params,
                          const ScheduleFn& scheduler);

EvalResult evaluate_route(const RouteSequence& route,
                          const std::optional<BatteryParams>& params = {},
                          const SchedulerOptions& opts = {});

}  // namespace ridesched
