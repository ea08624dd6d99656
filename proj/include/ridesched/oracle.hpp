#pragma once

#include "ridesched/battery.hpp"
#include "ridesched/lp.hpp"
#include "ridesched/model.hpp"
#include "ridesched/preprocess.hpp"

namespace ridesched {

// LP2: waiting-time variables, cumulative-sum bounds, ride-time rows.
lp::LinearProgram build_lp2(const RouteSequence& route, const PreprocessedRoute& pre);

// LP1: service-start variables with leg spacing, ride time, tightened windows.
lp::LinearProgram build_lp1(const RouteSequence& route, const PreprocessedRoute& pre);

// LP1 plus battery inventory, charging duration, and dwell constraints.
lp::LinearProgram build_lp1_battery(const RouteSequence& route,
                                    const PreprocessedRoute& pre,
                                    const BatteryParams& params);

struct OracleResult {
  bool feasible = false;
  double excess = 0.0;
  std::vector<double> starts;  // optimal service start times when feasible
};

// Exact reference schedule for a station-free route. Solves LP2 when all
// loads are unit (the LP2 objective then equals total excess up to a route
// constant) and LP1 otherwise.
OracleResult oracle_schedule(const RouteSequence& route, const PreprocessedRoute& pre);

// Exact reference for a full route with battery constraints.
OracleResult oracle_schedule_battery(const RouteSequence& route,
                                     const PreprocessedRoute& pre,
                                     const BatteryParams& params);

enum class AuditClass {
  BothInfeasible,
  IncorrectInfeasibility,
  Optimal,
  Deviating,
  UnsoundFeasible,
};

struct AuditRecord {
  AuditClass cls = AuditClass::BothInfeasible;
  double deviation_pct = 0.0;  // relative, heuristic vs oracle optimum
  bool zero_optimum = false;   // deviation reported against an ~zero optimum
  double heuristic_excess = 0.0;
  double oracle_excess = 0.0;
};

AuditRecord audit(bool heuristic_feasible, double heuristic_excess,
                  const OracleResult& oracle);

const char* to_string(AuditClass c);

}  // namespace ridesched
