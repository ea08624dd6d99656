#include "ridesched/model.hpp"

#include <cmath>
#include <sstream>

namespace ridesched {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::OriginDepot: return "origin_depot";
    case NodeKind::Pickup: return "pickup";
    case NodeKind::Dropoff: return "dropoff";
    case NodeKind::Station: return "station";
    case NodeKind::DestinationDepot: return "destination_depot";
  }
  return "?";
}

const char* to_string(InfeasibilityReason r) {
  switch (r) {
    case InfeasibilityReason::TimeWindow: return "time_window";
    case InfeasibilityReason::RideTime: return "ride_time";
    case InfeasibilityReason::Battery: return "battery";
    case InfeasibilityReason::WaitShortage: return "wait_shortage";
  }
  return "?";
}

namespace {

void add(std::vector<Violation>& out, int index, const std::string& what) {
  out.push_back(Violation{what, index});
}

}  // namespace

std::vector<Violation> validate_structure(const RouteSequence& route) {
  std::vector<Violation> out;
  const int m = route.size();
  if (m < 2) {
    add(out, 0, "route must contain at least origin and destination depot");
    return out;
  }
  if (route.nodes.front().kind != NodeKind::OriginDepot)
    add(out, 0, "route must start with an origin depot");
  if (route.nodes.back().kind != NodeKind::DestinationDepot)
    add(out, m - 1, "route must end with a destination depot");
  if (static_cast<int>(route.leg_travel.size()) != m - 1)
    add(out, -1, "leg_travel size must be nodes-1");

  for (int i = 1; i + 1 < m; ++i) {
    NodeKind k = route.nodes[i].kind;
    if (k == NodeKind::OriginDepot || k == NodeKind::DestinationDepot)
      add(out, i, "depot node in route interior");
  }
  for (double t : route.leg_travel)
    if (t < -kEps) add(out, -1, "negative leg travel time");

  int load = 0;
  for (int i = 0; i < m; ++i) {
    const Node& nd = route.nodes[i];
    if (nd.window_open > nd.window_close + kEps)
      add(out, i, "window_open exceeds window_close");
    switch (nd.kind) {
      case NodeKind::Pickup:
        if (nd.load_delta <= 0) add(out, i, "pickup must have positive load_delta");
        break;
      case NodeKind::Dropoff:
        if (nd.load_delta >= 0) add(out, i, "dropoff must have negative load_delta");
        break;
      default:
        if (nd.load_delta != 0) add(out, i, "non-request node must have zero load_delta");
        break;
    }
    if (nd.kind == NodeKind::Station && load != 0)
      add(out, i, "station visited with requests onboard");
    load += nd.load_delta;
    if (load < 0) add(out, i, "running load below zero");
    if (load > route.capacity) add(out, i, "running load exceeds capacity");
  }
  if (load != 0) add(out, m - 1, "route does not end empty");

  for (int i = 0; i < m; ++i) {
    const Node& nd = route.nodes[i];
    if (nd.kind == NodeKind::Pickup) {
      if (!nd.partner) {
        add(out, i, "pickup without partner dropoff");
        continue;
      }
      int d = route.index_of(*nd.partner);
      if (d < 0) {
        add(out, i, "partner dropoff not in route");
        continue;
      }
      if (d <= i) add(out, d, "precedence violation: dropoff before its pickup");
      const Node& dn = route.nodes[d];
      if (dn.kind != NodeKind::Dropoff) add(out, d, "pickup partner is not a dropoff");
      if (dn.load_delta != -nd.load_delta)
        add(out, d, "dropoff load does not negate pickup load");
      auto it = route.direct_travel.find(nd.id);
      if (it == route.direct_travel.end()) {
        add(out, i, "missing direct pickup->dropoff travel time");
      } else if (d > i) {
        double legs = 0.0;
        for (int l = i; l < d && l < static_cast<int>(route.leg_travel.size()); ++l)
          legs += route.leg_travel[l];
        if (it->second > legs + kEps)
          add(out, i, "direct travel exceeds leg travel between pickup and dropoff");
      }
    } else if (nd.kind == NodeKind::Dropoff) {
      if (!nd.partner) {
        add(out, i, "dropoff without partner pickup");
        continue;
      }
      int p = route.index_of(*nd.partner);
      if (p < 0)
        add(out, i, "partner pickup not in route");
      else if (p >= i)
        add(out, i, "precedence violation: dropoff before its pickup");
    }
  }
  return out;
}

std::vector<Violation> check_schedule(const RouteSequence& route, const Schedule& sched) {
  std::vector<Violation> out;
  const int m = route.size();
  if (static_cast<int>(sched.starts.size()) != m ||
      static_cast<int>(sched.waits.size()) != m) {
    add(out, -1, "schedule vectors do not match route size");
    return out;
  }
  const double tol = 1e-5;
  for (int i = 0; i < m; ++i) {
    if (sched.waits[i] < -kEps) add(out, i, "negative waiting time");
    const Node& nd = route.nodes[i];
    if (sched.starts[i] < nd.window_open - kEps)
      add(out, i, "service starts before window opens");
    if (sched.starts[i] > nd.window_close + kEps)
      add(out, i, "service starts after window closes");
  }
  for (int i = 0; i + 1 < m; ++i) {
    double earliest_next =
        sched.starts[i] + route.nodes[i].service + route.leg_travel[i];
    if (sched.starts[i + 1] < earliest_next - kEps)
      add(out, i + 1, "insufficient spacing between consecutive starts");
  }
  for (int i = 0; i < m; ++i) {
    const Node& nd = route.nodes[i];
    if (nd.kind != NodeKind::Pickup || !nd.max_ride) continue;
    int d = route.index_of(*nd.partner);
    if (d < 0) continue;
    double ride = sched.starts[d] - sched.starts[i] - nd.service;
    if (ride > *nd.max_ride + kEps) add(out, d, "maximum ride time exceeded");
  }
  // decomposition: T_i = ET_1 + C_i + sum_{j<=i} w_j
  double cum = 0.0, wsum = 0.0;
  double et1 = route.nodes[0].window_open;
  for (int i = 0; i < m; ++i) {
    if (i > 0) cum += route.leg_travel[i - 1] + route.nodes[i - 1].service;
    wsum += sched.waits[i];
    if (std::fabs(sched.starts[i] - (et1 + cum + wsum)) > tol)
      add(out, i, "starts not reconstructible from waits");
  }
  return out;
}

}  // namespace ridesched
