#pragma once

#include "ridesched/model.hpp"

namespace ridesched {

// Tightened start-time bounds and waiting-time bookkeeping for a route.
//   et/lt : tightened earliest/latest service start per node
//   cum   : C_i = sum_{j<i} (t_{j,j+1} + s_j)
//   delta : minimum total waiting time that must be assigned up to node i
//   theta : maximum total waiting time that may be assigned up to node i
//   load  : L_i = sum_{j<i} l_j, vehicle load on arrival at node i
struct PreprocessedRoute {
  std::vector<double> et, lt, cum, delta, theta;
  std::vector<int> load;
  std::optional<int> window_infeasible_at;  // first i with delta_i > theta_i
};

struct Bounds {
  std::vector<double> delta, theta;
  std::optional<int> infeasible_at;
};

std::vector<double> compute_earliest(const RouteSequence& route);
std::vector<double> compute_latest(const RouteSequence& route);
std::vector<double> cumulative_travel_service(const RouteSequence& route);
std::vector<int> cumulative_load(const RouteSequence& route);
Bounds compute_bounds(const RouteSequence& route, const std::vector<double>& et,
                      const std::vector<double>& lt);

PreprocessedRoute preprocess(const RouteSequence& route);

}  // namespace ridesched
