#include "ridesched/baseline.hpp"

#include <algorithm>
#include <limits>

#include "ridesched/scheduler.hpp"

namespace ridesched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void forward_from(const RouteSequence& route, int from, std::vector<double>& t) {
  for (int i = std::max(1, from); i < route.size(); ++i) {
    double reach = t[i - 1] + route.nodes[i - 1].service + route.leg_travel[i - 1];
    t[i] = std::max(route.nodes[i].window_open, reach);
  }
}

std::vector<double> waits_of(const RouteSequence& route, const std::vector<double>& t) {
  std::vector<double> w(route.size(), 0.0);
  for (int i = 1; i < route.size(); ++i)
    w[i] = t[i] - (t[i - 1] + route.nodes[i - 1].service + route.leg_travel[i - 1]);
  return w;
}

// Forward slack at node i: min over j >= i of cumulative waiting in (i, j]
// plus the window slack at j, taking the ride-time cap at dropoffs whose
// pickup precedes i.
double forward_slack(const RouteSequence& route, const PreprocessedRoute& pre,
                     const std::vector<double>& t, const std::vector<double>& w,
                     int i) {
  double best = kInf;
  double wsum = 0.0;
  for (int j = i; j < route.size(); ++j) {
    if (j > i) wsum += w[j];
    double slack = pre.lt[j] - t[j];
    const Node& nd = route.nodes[j];
    if (nd.kind == NodeKind::Dropoff && nd.partner) {
      int p = route.index_of(*nd.partner);
      if (p >= 0 && p < i && route.nodes[p].max_ride) {
        double ride = t[j] - t[p] - route.nodes[p].service;
        slack = std::min(slack, *route.nodes[p].max_ride - ride);
      }
    }
    best = std::min(best, wsum + std::max(0.0, slack));
  }
  return best;
}

}  // namespace

Schedule eight_step(const RouteSequence& route, const PreprocessedRoute& pre) {
  const int m = route.size();
  Schedule out;
  out.waits.assign(m, 0.0);
  if (pre.window_infeasible_at) {
    out.starts = build_times(out.waits, pre);
    out.verdict = {false, InfeasibilityReason::TimeWindow, *pre.window_infeasible_at};
    return out;
  }

  // steps 1-2: earliest schedule
  std::vector<double> t(m);
  t[0] = route.nodes[0].window_open;
  forward_from(route, 1, t);
  std::vector<double> w = waits_of(route, t);

  // steps 3-5: delay the departure by the route-level slack
  double onward = 0.0;
  for (int p = 1; p < m; ++p) onward += w[p];
  double f0 = forward_slack(route, pre, t, w, 0);
  t[0] += std::min(f0, onward);
  forward_from(route, 1, t);
  w = waits_of(route, t);

  // steps 6-7: delay each pickup in order by its ride-time-aware slack
  for (int j = 1; j < m; ++j) {
    if (route.nodes[j].kind != NodeKind::Pickup) continue;
    onward = 0.0;
    for (int p = j + 1; p < m; ++p) onward += w[p];
    double fj = forward_slack(route, pre, t, w, j);
    double delay = std::min(fj, onward);
    if (delay > kEps) {
      t[j] += delay;
      forward_from(route, j + 1, t);
      w = waits_of(route, t);
    }
  }

  // step 8: full feasibility check
  for (int i = 0; i < m; ++i) {
    if (t[i] > route.nodes[i].window_close + kEps) {
      out.starts = t;
      out.waits = w;
      out.verdict = {false, InfeasibilityReason::TimeWindow, i};
      return out;
    }
  }
  for (int p = 0; p < m; ++p) {
    const Node& nd = route.nodes[p];
    if (nd.kind != NodeKind::Pickup || !nd.max_ride || !nd.partner) continue;
    int d = route.index_of(*nd.partner);
    double ride = t[d] - t[p] - nd.service;
    if (ride > *nd.max_ride + kEps) {
      out.starts = t;
      out.waits = w;
      out.verdict = {false, InfeasibilityReason::RideTime, d};
      return out;
    }
  }

  out.waits = w;
  out.waits[0] = t[0] - route.nodes[0].window_open;
  out.starts = t;
  out.excess = excess_ride_time(route, t);
  out.verdict = {true, InfeasibilityReason::TimeWindow, -1};
  return out;
}

}  // namespace ridesched
