#include "ridesched/preprocess.hpp"

#include <algorithm>

namespace ridesched {

std::vector<double> compute_earliest(const RouteSequence& route) {
  const int m = route.size();
  std::vector<double> et(m);
  et[0] = route.nodes[0].window_open;
  for (int i = 1; i < m; ++i) {
    double reach = et[i - 1] + route.nodes[i - 1].service + route.leg_travel[i - 1];
    et[i] = std::max(route.nodes[i].window_open, reach);
  }
  return et;
}

std::vector<double> compute_latest(const RouteSequence& route) {
  const int m = route.size();
  std::vector<double> lt(m);
  lt[m - 1] = route.nodes[m - 1].window_close;
  for (int i = m - 2; i >= 0; --i) {
    double back = lt[i + 1] - route.leg_travel[i] - route.nodes[i].service;
    lt[i] = std::min(route.nodes[i].window_close, back);
  }
  return lt;
}

std::vector<double> cumulative_travel_service(const RouteSequence& route) {
  const int m = route.size();
  std::vector<double> cum(m, 0.0);
  for (int i = 1; i < m; ++i)
    cum[i] = cum[i - 1] + route.leg_travel[i - 1] + route.nodes[i - 1].service;
  return cum;
}

std::vector<int> cumulative_load(const RouteSequence& route) {
  const int m = route.size();
  std::vector<int> load(m, 0);
  for (int i = 1; i < m; ++i) load[i] = load[i - 1] + route.nodes[i - 1].load_delta;
  return load;
}

Bounds compute_bounds(const RouteSequence& route, const std::vector<double>& et,
                      const std::vector<double>& lt) {
  const int m = route.size();
  Bounds b;
  b.delta.resize(m);
  b.theta.resize(m);
  std::vector<double> cum = cumulative_travel_service(route);
  for (int i = 0; i < m; ++i) {
    b.delta[i] = et[i] - et[0] - cum[i];
    b.theta[i] = lt[i] - et[0] - cum[i];
    if (!b.infeasible_at && b.delta[i] > b.theta[i] + kEps) b.infeasible_at = i;
  }
  return b;
}

PreprocessedRoute preprocess(const RouteSequence& route) {
  PreprocessedRoute pre;
  pre.et = compute_earliest(route);
  pre.lt = compute_latest(route);
  pre.cum = cumulative_travel_service(route);
  pre.load = cumulative_load(route);
  Bounds b = compute_bounds(route, pre.et, pre.lt);
  pre.delta = std::move(b.delta);
  pre.theta = std::move(b.theta);
  pre.window_infeasible_at = b.infeasible_at;
  return pre;
}

}  // namespace ridesched
