#include "ridesched/scheduler.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ridesched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sum_prefix(const std::vector<double>& w, int i) {
  double s = 0.0;
  for (int k = 0; k <= i; ++k) s += w[k];
  return s;
}

double sum_range(const std::vector<double>& w, int a, int b) {
  double s = 0.0;
  for (int k = a; k <= b; ++k) s += w[k];
  return s;
}

double span_slack(const RequestSpan& rs, const std::vector<double>& waits) {
  double s = 0.0;
  for (int k = rs.pickup + 1; k <= rs.dropoff; ++k) s += waits[k];
  return rs.slack_base - s;
}

InfeasibilityReason classify_shortage(int cursor, const std::vector<double>& waits,
                                      const std::vector<RequestSpan>& spans) {
  for (const RequestSpan& rs : spans)
    if (rs.pickup <= cursor && span_slack(rs, waits) <= kEps)
      return InfeasibilityReason::RideTime;
  return InfeasibilityReason::WaitShortage;
}

}  // namespace

std::vector<RequestSpan> request_spans(const RouteSequence& route,
                                       const PreprocessedRoute& pre) {
  std::vector<RequestSpan> spans;
  for (int p = 0; p < route.size(); ++p) {
    const Node& nd = route.nodes[p];
    if (nd.kind != NodeKind::Pickup || !nd.max_ride || !nd.partner) continue;
    int d = route.index_of(*nd.partner);
    if (d < 0) continue;
    RequestSpan rs;
    rs.pickup = p;
    rs.dropoff = d;
    rs.slack_base = *nd.max_ride + nd.service - (pre.cum[d] - pre.cum[p]);
    spans.push_back(rs);
  }
  return spans;
}

double ride_slack_at(int j, const std::vector<RequestSpan>& spans,
                     const std::vector<double>& waits) {
  double slack = kInf;
  for (const RequestSpan& rs : spans) {
    if (rs.pickup < j && j <= rs.dropoff)
      slack = std::min(slack, rs.slack_base - sum_range(waits, rs.pickup + 1, rs.dropoff));
  }
  return slack;
}

int argmin_load(const std::vector<int>& omega, const PreprocessedRoute& pre) {
  int best = omega.front();
  for (int j : omega)
    if (pre.load[j] < pre.load[best]) best = j;
  return best;
}

double max_wait_increment(int j, int cursor, const std::vector<RequestSpan>& spans,
                          const std::vector<double>& waits,
                          const PreprocessedRoute& pre) {
  double inc = ride_slack_at(j, spans, waits);
  // a wait at j raises every prefix sum from j to the cursor, so the theta
  // bound must hold at each of them, not only at j
  double prefix = sum_prefix(waits, j);
  for (int m = j; m <= cursor; ++m) {
    if (m > j) prefix += waits[m];
    inc = std::min(inc, pre.theta[m] - prefix);
  }
  inc = std::min(inc, pre.delta[cursor] - sum_prefix(waits, cursor));
  return std::max(0.0, inc);
}

RecourseResult recourse(int cursor, const std::vector<double>& waits,
                        const RouteSequence& route, const PreprocessedRoute& pre,
                        const std::vector<RequestSpan>& spans) {
  (void)route;
  RecourseResult res;
  // pickups of requests that reached their maximum ride time; adding wait at
  // the pickup itself does not consume the request's own span
  std::vector<int> saturated;
  for (const RequestSpan& rs : spans)
    if (rs.pickup <= cursor && span_slack(rs, waits) <= kEps)
      saturated.push_back(rs.pickup);
  std::sort(saturated.begin(), saturated.end());
  saturated.erase(std::unique(saturated.begin(), saturated.end()), saturated.end());
  if (saturated.empty()) {
    res.fail_reason = InfeasibilityReason::WaitShortage;
    return res;
  }
  for (int jl : saturated) {
    std::vector<double> trial = waits;
    for (int k = jl + 1; k < static_cast<int>(trial.size()); ++k) trial[k] = 0.0;
    double inc = max_wait_increment(jl, cursor, spans, trial, pre);
    if (inc > kEps) {
      trial[jl] += inc;
      res.restarted = true;
      res.start_node = jl + 1;
      res.waits = std::move(trial);
      return res;
    }
  }
  res.fail_reason = InfeasibilityReason::RideTime;
  return res;
}

std::vector<double> build_times(const std::vector<double>& waits,
                                const PreprocessedRoute& pre) {
  std::vector<double> starts(waits.size());
  double wsum = 0.0;
  for (size_t i = 0; i < waits.size(); ++i) {
    wsum += waits[i];
    starts[i] = pre.et[0] + pre.cum[i] + wsum;
  }
  return starts;
}

double excess_ride_time(const RouteSequence& route, const std::vector<double>& starts) {
  double total = 0.0;
  for (int p = 0; p < route.size(); ++p) {
    const Node& nd = route.nodes[p];
    if (nd.kind != NodeKind::Pickup || !nd.partner) continue;
    int d = route.index_of(*nd.partner);
    if (d < 0) continue;
    total += starts[d] - starts[p] - nd.service - route.direct_travel.at(nd.id);
  }
  return total;
}

Schedule schedule_route(const RouteSequence& route, const PreprocessedRoute& pre,
                        const SchedulerOptions& opts) {
  const int m = route.size();
  Schedule out;
  out.waits.assign(m, 0.0);

  if (pre.window_infeasible_at) {
    out.verdict = {false, InfeasibilityReason::TimeWindow, *pre.window_infeasible_at};
    out.starts = build_times(out.waits, pre);
    return out;
  }

  std::vector<RequestSpan> spans = request_spans(route, pre);
  for (const RequestSpan& rs : spans) {
    // even the zero-wait schedule exceeds the maximum ride time
    if (rs.slack_base < -kEps) {
      out.verdict = {false, InfeasibilityReason::RideTime, rs.dropoff};
      out.starts = build_times(out.waits, pre);
      return out;
    }
  }
  const int n_requests = static_cast<int>(spans.size());
  std::vector<double>& w = out.waits;
  std::set<int> omega;
  int start = 0;
  int restarts = 0;

  while (true) {
    bool restarted = false;
    for (int i = start; i < m && !restarted; ++i) {
      omega.insert(i);
      while (sum_prefix(w, i) < pre.delta[i] - kEps) {
        if (omega.empty()) {
          bool may_recourse = opts.use_recourse && restarts < n_requests;
          RecourseResult rr;
          if (may_recourse) rr = recourse(i, w, route, pre, spans);
          if (!may_recourse || !rr.restarted) {
            InfeasibilityReason reason = may_recourse
                                             ? rr.fail_reason
                                             : classify_shortage(i, w, spans);
            out.verdict = {false, reason, i};
            out.starts = build_times(w, pre);
            out.excess = 0.0;
            return out;
          }
          ++restarts;
          w = std::move(rr.waits);
          start = rr.start_node;
          omega.clear();
          for (int k = 0; k < start; ++k) {
            if (pre.theta[k] - sum_prefix(w, k) > kEps &&
                ride_slack_at(k, spans, w) > kEps)
              omega.insert(k);
          }
          restarted = true;
          break;
        }
        std::vector<int> omega_vec(omega.begin(), omega.end());
        int j = argmin_load(omega_vec, pre);
        double shortage = pre.delta[i] - sum_prefix(w, i);
        double inc = max_wait_increment(j, i, spans, w, pre);
        w[j] += inc;
        if (inc < shortage - kEps) omega.erase(j);
      }
    }
    if (!restarted) break;
  }

  out.starts = build_times(w, pre);
  out.excess = excess_ride_time(route, out.starts);
  out.verdict = {true, InfeasibilityReason::TimeWindow, -1};
  return out;
}

}  // namespace ridesched
