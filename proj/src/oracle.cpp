#include "ridesched/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace ridesched {

namespace {

// ride rows: sum_{j=P+1}^{D} w_j <= u_P + s_P - (C_D - C_P)
void add_ride_rows_lp2(lp::LinearProgram& prog, const RouteSequence& route,
                       const PreprocessedRoute& pre) {
  for (int p = 0; p < route.size(); ++p) {
    const Node& nd = route.nodes[p];
    if (nd.kind != NodeKind::Pickup || !nd.max_ride || !nd.partner) continue;
    int d = route.index_of(*nd.partner);
    if (d < 0) continue;
    lp::Row& row = prog.add_row(lp::Sense::LE,
                                *nd.max_ride + nd.service - (pre.cum[d] - pre.cum[p]));
    for (int j = p + 1; j <= d; ++j) row.coeffs[j] = 1.0;
  }
}

void add_leg_and_ride_rows_lp1(lp::LinearProgram& prog, const RouteSequence& route,
                               const std::vector<int>& tvar,
                               const std::vector<int>& evar) {
  const int m = route.size();
  for (int i = 0; i + 1 < m; ++i) {
    // T_{i+1} - T_i (- E_i at stations) >= s_i + t_{i,i+1}
    lp::Row& row = prog.add_row(lp::Sense::GE,
                                route.nodes[i].service + route.leg_travel[i]);
    row.coeffs[tvar[i + 1]] = 1.0;
    row.coeffs[tvar[i]] = -1.0;
    if (!evar.empty() && evar[i] >= 0) row.coeffs[evar[i]] = -1.0;
  }
  for (int p = 0; p < m; ++p) {
    const Node& nd = route.nodes[p];
    if (nd.kind != NodeKind::Pickup || !nd.max_ride || !nd.partner) continue;
    int d = route.index_of(*nd.partner);
    if (d < 0) continue;
    lp::Row& row = prog.add_row(lp::Sense::LE, *nd.max_ride + nd.service);
    row.coeffs[tvar[d]] = 1.0;
    row.coeffs[tvar[p]] = -1.0;
  }
}

// objective sum_r (T_D - T_P) with constant -sum_r (s_P + t_{P,D})
void set_excess_objective(lp::LinearProgram& prog, const RouteSequence& route,
                          const std::vector<int>& tvar) {
  for (int p = 0; p < route.size(); ++p) {
    const Node& nd = route.nodes[p];
    if (nd.kind != NodeKind::Pickup || !nd.partner) continue;
    int d = route.index_of(*nd.partner);
    if (d < 0) continue;
    prog.objective[tvar[d]] += 1.0;
    prog.objective[tvar[p]] -= 1.0;
    prog.objective_constant -= nd.service + route.direct_travel.at(nd.id);
  }
}

bool unit_loads(const RouteSequence& route) {
  for (const Node& nd : route.nodes)
    if (std::abs(nd.load_delta) > 1) return false;
  return true;
}

}  // namespace

lp::LinearProgram build_lp2(const RouteSequence& route, const PreprocessedRoute& pre) {
  lp::LinearProgram prog;
  const int m = route.size();
  for (int i = 0; i < m; ++i)
    prog.add_var(static_cast<double>(pre.load[i]), 0.0, lp::kInf);
  for (int i = 0; i < m; ++i) {
    lp::Row& lo = prog.add_row(lp::Sense::GE, pre.delta[i]);
    for (int j = 0; j <= i; ++j) lo.coeffs[j] = 1.0;
    lp::Row& hi = prog.add_row(lp::Sense::LE, pre.theta[i]);
    for (int j = 0; j <= i; ++j) hi.coeffs[j] = 1.0;
  }
  add_ride_rows_lp2(prog, route, pre);
  return prog;
}

lp::LinearProgram build_lp1(const RouteSequence& route, const PreprocessedRoute& pre) {
  lp::LinearProgram prog;
  const int m = route.size();
  std::vector<int> tvar(m);
  for (int i = 0; i < m; ++i) tvar[i] = prog.add_var(0.0, pre.et[i], pre.lt[i]);
  add_leg_and_ride_rows_lp1(prog, route, tvar, {});
  set_excess_objective(prog, route, tvar);
  return prog;
}

lp::LinearProgram build_lp1_battery(const RouteSequence& route,
                                    const PreprocessedRoute& pre,
                                    const BatteryParams& params) {
  lp::LinearProgram prog;
  const int m = route.size();
  const double q = params.capacity;
  std::vector<int> tvar(m), bvar(m), evar(m, -1);
  for (int i = 0; i < m; ++i) tvar[i] = prog.add_var(0.0, pre.et[i], pre.lt[i]);
  for (int i = 0; i < m; ++i) {
    double lo = 0.0, hi = q;
    if (i == 0) lo = hi = params.init;                        // batt1
    if (i == m - 1) lo = std::max(lo, params.end_ratio * q);  // batt7
    bvar[i] = prog.add_var(0.0, lo, hi);
  }
  for (int i = 0; i < m; ++i)
    if (route.nodes[i].kind == NodeKind::Station)
      evar[i] = prog.add_var(0.0, 0.0, lp::kInf);  // batt11

  add_leg_and_ride_rows_lp1(prog, route, tvar, evar);

  for (int i = 0; i + 1 < m; ++i) {
    double discharge = params.discharge_rate * route.leg_travel[i];
    lp::Row& row = prog.add_row(lp::Sense::EQ, -discharge);
    row.coeffs[bvar[i + 1]] = 1.0;
    row.coeffs[bvar[i]] = -1.0;
    if (evar[i] >= 0)
      row.coeffs[evar[i]] = -params.charge_rate.at(route.nodes[i].id);
  }
  for (int i = 0; i < m; ++i) {
    if (evar[i] < 0) continue;
    lp::Row& cap = prog.add_row(lp::Sense::LE, q);  // batt6
    cap.coeffs[bvar[i]] = 1.0;
    cap.coeffs[evar[i]] = params.charge_rate.at(route.nodes[i].id);
  }
  set_excess_objective(prog, route, tvar);
  return prog;
}

OracleResult oracle_schedule(const RouteSequence& route, const PreprocessedRoute& pre) {
  OracleResult res;
  if (pre.window_infeasible_at) return res;
  if (unit_loads(route)) {
    lp::Solution sol = lp::solve(build_lp2(route, pre));
    if (sol.status != lp::SolveStatus::Optimal) return res;
    res.feasible = true;
    res.starts = build_times(sol.values, pre);
    res.excess = excess_ride_time(route, res.starts);
  } else {
    lp::Solution sol = lp::solve(build_lp1(route, pre));
    if (sol.status != lp::SolveStatus::Optimal) return res;
    res.feasible = true;
    res.starts = sol.values;
    res.excess = sol.objective;
  }
  return res;
}

OracleResult oracle_schedule_battery(const RouteSequence& route,
                                     const PreprocessedRoute& pre,
                                     const BatteryParams& params) {
  OracleResult res;
  lp::Solution sol = lp::solve(build_lp1_battery(route, pre, params));
  if (sol.status != lp::SolveStatus::Optimal) return res;
  res.feasible = true;
  res.starts.assign(sol.values.begin(), sol.values.begin() + route.size());
  res.excess = sol.objective;
  return res;
}

AuditRecord audit(bool heuristic_feasible, double heuristic_excess,
                  const OracleResult& oracle) {
  AuditRecord rec;
  rec.oracle_excess = oracle.excess;
  if (!heuristic_feasible && !oracle.feasible) {
    rec.cls = AuditClass::BothInfeasible;
    return rec;
  }
  if (!heuristic_feasible) {
    rec.cls = AuditClass::IncorrectInfeasibility;
    return rec;
  }
  if (!oracle.feasible) {
    rec.cls = AuditClass::UnsoundFeasible;
    rec.heuristic_excess = heuristic_excess;
    return rec;
  }
  rec.heuristic_excess = heuristic_excess;
  double opt = oracle.excess;
  double tol = 1e-6 * std::max(1.0, std::fabs(opt));
  if (std::fabs(heuristic_excess - opt) <= tol) {
    rec.cls = AuditClass::Optimal;
    return rec;
  }
  rec.cls = AuditClass::Deviating;
  rec.zero_optimum = opt < kEps;
  rec.deviation_pct = 100.0 * (heuristic_excess - opt) / std::max(opt, kEps);
  return rec;
}

const char* to_string(AuditClass c) {
  switch (c) {
    case AuditClass::BothInfeasible: return "both_infeasible";
    case AuditClass::IncorrectInfeasibility: return "incorrect_infeasibility";
    case AuditClass::Optimal: return "optimal";
    case AuditClass::Deviating: return "deviating";
    case AuditClass::UnsoundFeasible: return "unsound_feasible";
  }
  return "?";
}

}  // namespace ridesched
