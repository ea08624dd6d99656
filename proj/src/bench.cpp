#include "ridesched/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ridesched/baseline.hpp"
#include "ridesched/battery.hpp"

namespace ridesched {

Alg parse_alg(const std::string& name) {
  if (name == "alg1") return Alg::Alg1;
  if (name == "eight-step") return Alg::EightStep;
  if (name == "oracle") return Alg::Oracle;
  throw std::invalid_argument("unknown algorithm: " + name);
}

const char* to_string(Alg a) {
  switch (a) {
    case Alg::Alg1: return "alg1";
    case Alg::EightStep: return "eight-step";
    case Alg::Oracle: return "oracle";
  }
  return "?";
}

namespace {

struct RunResult {
  bool feasible = false;
  InfeasibilityReason reason = InfeasibilityReason::TimeWindow;
  int node_index = -1;
  double excess = 0.0;
};

RunResult run_alg(const RouteSequence& route, Alg alg,
                  const std::optional<BatteryParams>& params) {
  RunResult r;
  if (alg == Alg::Oracle) {
    PreprocessedRoute pre = preprocess(route);
    OracleResult res = params ? oracle_schedule_battery(route, pre, *params)
                              : oracle_schedule(route, pre);
    r.feasible = res.feasible;
    r.excess = res.excess;
    if (!res.feasible) r.reason = InfeasibilityReason::TimeWindow;
    return r;
  }
  ScheduleFn fn;
  if (alg == Alg::Alg1) {
    fn = [](const RouteSequence& rt, const PreprocessedRoute& pre) {
      return schedule_route(rt, pre);
    };
  } else {
    fn = [](const RouteSequence& rt, const PreprocessedRoute& pre) {
      return eight_step(rt, pre);
    };
  }
  EvalResult ev = evaluate_route(route, params, fn);
  const Verdict& v = ev.battery && !ev.battery->verdict.feasible
                         ? ev.battery->verdict
                         : ev.schedule.verdict;
  r.feasible = v.feasible;
  r.reason = v.reason;
  r.node_index = v.node_index;
  r.excess = ev.schedule.excess;
  return r;
}

double median3(double a, double b, double c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

}  // namespace

OracleResult oracle_ground_truth(const RouteSequence& route,
                                 const std::optional<BatteryParams>& params) {
  PreprocessedRoute pre = preprocess(route);
  return params ? oracle_schedule_battery(route, pre, *params)
                : oracle_schedule(route, pre);
}

RouteOutcome evaluate_one(const RouteSequence& route, Alg alg,
                          const std::optional<BatteryParams>& params,
                          const OracleResult& oracle_result, bool timing) {
  RouteOutcome out;
  RunResult r = run_alg(route, alg, params);
  out.verdict = {r.feasible, r.reason, r.node_index};
  out.excess = r.excess;
  out.audit = audit(r.feasible, r.excess, oracle_result);
  if (timing) {
    using clock = std::chrono::steady_clock;
    double reps[3];
    run_alg(route, alg, params);  // warm-up
    for (double& ms : reps) {
      auto t0 = clock::now();
      run_alg(route, alg, params);
      ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    }
    out.cpu_ms = median3(reps[0], reps[1], reps[2]);
  }
  return out;
}

BenchReport run_bench(const Instance& inst, const std::vector<CorpusRecord>& corpus,
                      const BenchOptions& opts) {
  BenchReport report;
  report.instance_name = inst.name;
  std::optional<BatteryParams> params;
  if (inst.battery) params = inst.battery_params();

  const int n = static_cast<int>(corpus.size());
  int threads = opts.threads > 0
                    ? opts.threads
                    : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max(1, n));

  struct Row {
    int size = 0;
    std::vector<RouteOutcome> by_alg;
  };
  std::vector<Row> rows(n);

  auto worker = [&](int tid) {
    for (int i = tid; i < n; i += threads) {
      RouteSequence route = route_from_record(inst, corpus[i]);
      rows[i].size = route.size();
      OracleResult truth = oracle_ground_truth(route, params);
      rows[i].by_alg.reserve(opts.algs.size());
      for (Alg a : opts.algs)
        rows[i].by_alg.push_back(
            evaluate_one(route, a, params, truth, opts.timing));
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& th : pool) th.join();
  }

  for (size_t ai = 0; ai < opts.algs.size(); ++ai) {
    AlgStats st;
    st.alg = opts.algs[ai];
    st.n_routes = n;
    double dev_sum = 0.0, cpu_sum = 0.0;
    std::vector<double> cpu;
    cpu.reserve(n);
    for (const Row& row : rows) {
      if (st.n_routes > 0) {
        if (st.size_min == 0 || row.size < st.size_min) st.size_min = row.size;
        st.size_max = std::max(st.size_max, row.size);
      }
      const RouteOutcome& oc = row.by_alg[ai];
      if (!oc.verdict.feasible) {
        ++st.n_infeasible;
        switch (oc.verdict.reason) {
          case InfeasibilityReason::TimeWindow:
          case InfeasibilityReason::WaitShortage:
            ++st.n_infeasible_tw;
            break;
          case InfeasibilityReason::RideTime: ++st.n_infeasible_rt; break;
          case InfeasibilityReason::Battery: ++st.n_infeasible_batt; break;
        }
      }
      switch (oc.audit.cls) {
        case AuditClass::IncorrectInfeasibility: ++st.n_incorrect_infeasible; break;
        case AuditClass::Deviating:
          ++st.n_deviating;
          dev_sum += oc.audit.deviation_pct;
          break;
        case AuditClass::UnsoundFeasible: ++st.n_unsound; break;
        default: break;
      }
      if (oc.audit.cls != AuditClass::BothInfeasible &&
          oc.audit.cls != AuditClass::UnsoundFeasible)
        ++st.n_oracle_feasible;
      cpu_sum += oc.cpu_ms;
      cpu.push_back(oc.cpu_ms);
    }
    st.avg_dev_pct = st.n_deviating ? dev_sum / st.n_deviating : 0.0;
    st.avg_cpu_ms = n ? cpu_sum / n : 0.0;
    if (!cpu.empty()) {
      std::nth_element(cpu.begin(), cpu.begin() + cpu.size() / 2, cpu.end());
      st.median_cpu_ms = cpu[cpu.size() / 2];
    }
    report.per_alg.push_back(st);
  }
  return report;
}

void write_report_csv(std::ostream& out, const BenchReport& report) {
  out << "name,n_routes,size_min,size_max,alg,n_infeasible,n_deviating,"
         "avg_dev_pct,avg_cpu_ms\n";
  for (const AlgStats& st : report.per_alg) {
    out << report.instance_name << ',' << st.n_routes << ',' << st.size_min
        << ',' << st.size_max << ',' << to_string(st.alg) << ','
        << st.n_infeasible << ',' << st.n_deviating << ',' << st.avg_dev_pct
        << ',' << st.avg_cpu_ms << '\n';
  }
}

std::vector<std::string> check_report(const BenchReport& report) {
  std::vector<std::string> out;
  for (const AlgStats& st : report.per_alg) {
    if (st.alg != Alg::Alg1) continue;
    if (st.n_unsound > 0)
      out.push_back("alg1 declared " + std::to_string(st.n_unsound) +
                    " oracle-infeasible route(s) feasible");
    if (st.n_oracle_feasible > 0 &&
        st.n_incorrect_infeasible > 0.0001 * st.n_oracle_feasible + kEps)
      out.push_back("alg1 incorrect-infeasibility rate above 0.01%");
    if (st.n_routes > 0 && st.n_deviating > 0.001 * st.n_routes + kEps)
      out.push_back("alg1 deviating rate above 0.1%");
    if (st.n_deviating > 0 && st.avg_dev_pct > 5.0 + kEps)
      out.push_back("alg1 mean deviation among deviating routes above 5%");
  }
  return out;
}

}  // namespace ridesched
