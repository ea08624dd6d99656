#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ridesched {

// Absolute comparison tolerance for all time/duration comparisons.
inline constexpr double kEps = 1e-6;

enum class NodeKind { OriginDepot, Pickup, Dropoff, Station, DestinationDepot };

struct Node {
  int id = 0;
  NodeKind kind = NodeKind::Pickup;
  int load_delta = 0;          // persons; >0 pickup, <0 dropoff, 0 otherwise
  double service = 0.0;
  double window_open = 0.0;
  double window_close = 0.0;
  std::optional<double> max_ride;  // pickups only
  std::optional<int> partner;      // node id of the paired pickup/dropoff
};

// A capacity/precedence-feasible route with its travel data. Immutable after
// construction; shares freely across threads.
struct RouteSequence {
  std::string instance_id;
  int vehicle_id = 0;
  std::vector<Node> nodes;
  std::vector<double> leg_travel;                 // size nodes.size()-1
  std::unordered_map<int, double> direct_travel;  // pickup node id -> t(P,D)
  int capacity = 0;

  int size() const { return static_cast<int>(nodes.size()); }
  int index_of(int node_id) const {
    for (int i = 0; i < size(); ++i)
      if (nodes[i].id == node_id) return i;
    return -1;
  }
};

enum class InfeasibilityReason { TimeWindow, RideTime, Battery, WaitShortage };

struct Verdict {
  bool feasible = true;
  InfeasibilityReason reason = InfeasibilityReason::TimeWindow;
  int node_index = -1;  // first detection point
};

struct Schedule {
  std::vector<double> waits;   // w_i >= 0 per node
  std::vector<double> starts;  // T_i per node
  double excess = 0.0;         // total excess ride time
  Verdict verdict;
};

struct Violation {
  std::string what;
  int index = -1;
};

// Structural validation of a route: depot framing, precedence, load profile,
// zero load at stations, triangle-consistency of direct travel times.
// Violations are data, not errors.
std::vector<Violation> validate_structure(const RouteSequence& route);

// Independent re-check of a claimed-feasible schedule: leg spacing, time
// windows, maximum ride times, nonnegative waits, wait/start decomposition.
std::vector<Violation> check_schedule(const RouteSequence& route, const Schedule& sched);

const char* to_string(NodeKind k);
const char* to_string(InfeasibilityReason r);

}  // namespace ridesched
