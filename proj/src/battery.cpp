#include "ridesched/battery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ridesched {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<RouteSequence> split_at_stations(const RouteSequence& route) {
  std::vector<RouteSequence> subs;
  const int m = route.size();
  int begin = 0;
  for (int i = 1; i < m; ++i) {
    if (route.nodes[i].kind != NodeKind::Station && i != m - 1) continue;
    RouteSequence sub;
    sub.instance_id = route.instance_id;
    sub.vehicle_id = route.vehicle_id;
    sub.capacity = route.capacity;
    sub.nodes.assign(route.nodes.begin() + begin, route.nodes.begin() + i + 1);
    sub.leg_travel.assign(route.leg_travel.begin() + begin,
                          route.leg_travel.begin() + i);
    sub.nodes.front().kind = NodeKind::OriginDepot;
    sub.nodes.back().kind = NodeKind::DestinationDepot;
    for (const Node& nd : sub.nodes)
      if (nd.kind == NodeKind::Pickup) {
        auto it = route.direct_travel.find(nd.id);
        if (it != route.direct_travel.end()) sub.direct_travel.insert(*it);
      }
    subs.push_back(std::move(sub));
    begin = i;
  }
  return subs;
}

BatteryPlan plan_charging(const RouteSequence& route, Schedule& sched,
                          const BatteryParams& params, const PreprocessedRoute& pre) {
  BatteryPlan plan;
  const int m = route.size();
  plan.levels.assign(m, 0.0);
  plan.levels[0] = params.init;
  plan.verdict = {true, InfeasibilityReason::Battery, -1};
  bool moved = false;

  for (int i = 0; i + 1 < m; ++i) {
    double b = plan.levels[i];
    if (route.nodes[i].kind == NodeKind::Station) {
      double alpha = params.charge_rate.at(route.nodes[i].id);
      double usable = sched.waits[i + 1];
      // Extra shift allowed at i+1 assuming downstream waits absorb it
      // greedily in order; bounded by every downstream latest start.
      double shift = kInf;
      double absorbed = 0.0;
      for (int j = i + 1; j < m; ++j) {
        if (j > i + 1) absorbed += sched.waits[j];
        shift = std::min(shift, pre.lt[j] - sched.starts[j] + absorbed);
      }
      shift = std::max(0.0, shift);
      double dwell_cap = usable + shift;
      double full_cap = (params.capacity - b) / alpha;
      double charge = std::max(0.0, std::min(dwell_cap, full_cap));
      plan.charges[route.nodes[i].id] = charge;
      double extra = charge - usable;
      if (extra > kEps) {
        sched.waits[i + 1] += extra;
        double remaining = extra;
        for (int k = i + 2; k < m && remaining > kEps; ++k) {
          double red = std::min(sched.waits[k], remaining);
          sched.waits[k] -= red;
          remaining -= red;
        }
        moved = true;
      }
      b = std::min(params.capacity, b + alpha * charge);
      plan.levels[i] = b;  // level after charging
    }
    plan.levels[i + 1] = b - params.discharge_rate * route.leg_travel[i];
    if (plan.levels[i + 1] < -kEps) {
      plan.verdict = {false, InfeasibilityReason::Battery, i + 1};
      break;
    }
  }
  if (plan.verdict.feasible &&
      plan.levels[m - 1] < params.end_ratio * params.capacity - kEps)
    plan.verdict = {false, InfeasibilityReason::Battery, m - 1};

  if (moved) {
    sched.starts = build_times(sched.waits, pre);
    sched.excess = excess_ride_time(route, sched.starts);
  }
  return plan;
}

std::vector<Violation> check_battery_constraints(const RouteSequence& route,
                                                 const Schedule& sched,
                                                 const BatteryPlan& plan,
                                                 const BatteryParams& params) {
  std::vector<Violation> out;
  const int m = route.size();
  if (static_cast<int>(plan.levels.size()) != m) {
    out.push_back({"battery levels do not match route size", -1});
    return out;
  }
  if (std::fabs(plan.levels[0] - params.init) > kEps)
    out.push_back({"batt1: initial level differs from B_init", 0});
  double b = params.init;
  for (int i = 0; i + 1 < m; ++i) {
    const Node& nd = route.nodes[i];
    if (nd.kind == NodeKind::Station) {
      auto it = plan.charges.find(nd.id);
      double charge = it == plan.charges.end() ? 0.0 : it->second;
      double alpha = params.charge_rate.at(nd.id);
      if (charge < -kEps) out.push_back({"batt11: negative charging duration", i});
      if (b + alpha * charge > params.capacity + kEps)
        out.push_back({"batt6: charging beyond capacity", i});
      double dwell = sched.starts[i + 1] - route.leg_travel[i] - sched.starts[i] -
                     nd.service;
      if (charge > dwell + kEps)
        out.push_back({"batt8: charging exceeds scheduled dwell", i});
      b += alpha * charge;
      if (std::fabs(plan.levels[i] - b) > 1e-5)
        out.push_back({"batt4/batt5: station level inconsistent", i});
    } else if (std::fabs(plan.levels[i] - b) > 1e-5) {
      out.push_back({"batt2/batt3: level inconsistent with discharge sweep", i});
    }
    b -= params.discharge_rate * route.leg_travel[i];
    if (b < -kEps) out.push_back({"batt10: negative battery inventory", i + 1});
  }
  if (std::fabs(plan.levels[m - 1] - b) > 1e-5)
    out.push_back({"batt2/batt3: final level inconsistent", m - 1});
  if (b < params.end_ratio * params.capacity - kEps)
    out.push_back({"batt7: end level below required ratio", m - 1});
  return out;
}

EvalResult evaluate_route(const RouteSequence& route,
                          const std::optional<BatteryParams>& params,
                          const ScheduleFn& scheduler) {
  EvalResult res;
  const int m = route.size();
  std::vector<RouteSequence> subs = split_at_stations(route);
  std::vector<double> full_starts(m, 0.0);
  double prev_start = -kInf;
  int base = 0;
  PreprocessedRoute full_pre = preprocess(route);

  for (size_t k = 0; k < subs.size(); ++k) {
    RouteSequence sub = subs[k];
    if (k > 0)
      sub.nodes[0].window_open = std::max(sub.nodes[0].window_open, prev_start);
    PreprocessedRoute pre = preprocess(sub);
    Schedule sch = scheduler(sub, pre);
    if (!sch.verdict.feasible) {
      res.schedule.waits.assign(m, 0.0);
      res.schedule.starts = build_times(res.schedule.waits, full_pre);
      res.schedule.verdict = {false, sch.verdict.reason,
                              base + std::max(0, sch.verdict.node_index)};
      return res;
    }
    for (int i = 0; i < sub.size(); ++i) full_starts[base + i] = sch.starts[i];
    prev_start = sch.starts.back();
    base += sub.size() - 1;
  }

  Schedule full;
  full.waits.assign(m, 0.0);
  full.waits[0] = full_starts[0] - route.nodes[0].window_open;
  for (int i = 1; i < m; ++i) {
    double w = full_starts[i] - full_starts[i - 1] - route.nodes[i - 1].service -
               route.leg_travel[i - 1];
    full.waits[i] = std::max(0.0, w);
  }
  full.starts = build_times(full.waits, full_pre);
  full.excess = excess_ride_time(route, full.starts);
  full.verdict = {true, InfeasibilityReason::TimeWindow, -1};
  res.schedule = std::move(full);

  if (params)
    res.battery = plan_charging(route, res.schedule, *params, full_pre);
  return res;
}

EvalResult evaluate_route(const RouteSequence& route,
                          const std::optional<BatteryParams>& params,
                          const SchedulerOptions& opts) {
  return evaluate_route(route, params,
                        [&opts](const RouteSequence& r, const PreprocessedRoute& p) {
                          return schedule_route(r, p, opts);
                        });
}

}  // namespace ridesched
