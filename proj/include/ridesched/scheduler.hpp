#pragma once

#include "ridesched/model.hpp"
#include "ridesched/preprocess.hpp"

namespace ridesched {

struct SchedulerOptions {
  bool use_recourse = true;
};

// One pickup/dropoff pair inside a route. slack_base is the maximum total
// waiting time assignable strictly after the pickup up to the dropoff before
// the maximum ride time is hit: u_P + s_P - (C_D - C_P).
struct RequestSpan {
  int pickup = -1;
  int dropoff = -1;
  double slack_base = 0.0;
};

std::vector<RequestSpan> request_spans(const RouteSequence& route,
                                       const PreprocessedRoute& pre);

// Remaining ride-time slack when increasing the wait at node j: the minimum,
// over requests with pickup < j <= dropoff, of slack_base minus the waits
// already placed in (pickup, dropoff]. +inf when no request straddles j.
double ride_slack_at(int j, const std::vector<RequestSpan>& spans,
                     const std::vector<double>& waits);

// Smallest index in omega whose arrival load is minimal.
int argmin_load(const std::vector<int>& omega, const PreprocessedRoute& pre);

// Maximum feasible wait increment at node j while covering the shortage
// detected at the cursor node: min of ride-time slack, theta slack at j, and
// the remaining shortage. Clamped at zero.
double max_wait_increment(int j, int cursor, const std::vector<RequestSpan>& spans,
                          const std::vector<double>& waits,
                          const PreprocessedRoute& pre);

struct RecourseResult {
  bool restarted = false;
  int start_node = 0;
  std::vector<double> waits;
  InfeasibilityReason fail_reason = InfeasibilityReason::RideTime;
};

// Revisits the pickups of requests whose ride-time slack is exhausted, zeroes
// the waits placed after the earliest such pickup that can still absorb some,
// shifts waiting time onto it, and requests a restart of the main sweep just
// after it. Waiting at the pickup itself does not count against the request's
// own ride time.
RecourseResult recourse(int cursor, const std::vector<double>& waits,
                        const RouteSequence& route, const PreprocessedRoute& pre,
                        const std::vector<RequestSpan>& spans);

// T_i = ET_1 + C_i + sum_{j<=i} w_j
std::vector<double> build_times(const std::vector<double>& waits,
                                const PreprocessedRoute& pre);

double excess_ride_time(const RouteSequence& route, const std::vector<double>& starts);

// Ride-time-oriented waiting time distribution for a station-free route.
Schedule schedule_route(const RouteSequence& route, const PreprocessedRoute& pre,
                        const SchedulerOptions& opts = {});

}  // namespace ridesched
