#pragma once

#include <iosfwd>

#include "ridesched/ingest.hpp"
#include "ridesched/oracle.hpp"

namespace ridesched {

enum class Alg { Alg1, EightStep, Oracle };

Alg parse_alg(const std::string& name);  // throws std::invalid_argument
const char* to_string(Alg a);

// Outcome of one algorithm on one route, audited against the oracle.
struct RouteOutcome {
  Verdict verdict;
  double excess = 0.0;
  double cpu_ms = 0.0;  // median of 3 timed repetitions after a warm-up
  AuditRecord audit;
};

struct AlgStats {
  Alg alg = Alg::Alg1;
  int n_routes = 0;
  int size_min = 0;
  int size_max = 0;
  int n_infeasible = 0;
  int n_infeasible_tw = 0;
  int n_infeasible_rt = 0;
  int n_infeasible_batt = 0;
  int n_incorrect_infeasible = 0;
  int n_deviating = 0;
  int n_unsound = 0;
  int n_oracle_feasible = 0;
  double avg_dev_pct = 0.0;  // mean over deviating routes, 0 when none
  double avg_cpu_ms = 0.0;
  double median_cpu_ms = 0.0;
};

struct BenchReport {
  std::string instance_name;
  std::vector<AlgStats> per_alg;
};

struct BenchOptions {
  std::vector<Alg> algs = {Alg::Alg1};
  int threads = 0;      // 0: hardware concurrency
  bool timing = true;   // false skips the repetition loop (tests)
};

// Evaluate one route with one algorithm. The oracle result must come from the
// matching route and battery parameters.
RouteOutcome evaluate_one(const RouteSequence& route, Alg alg,
                          const std::optional<BatteryParams>& params,
                          const OracleResult& oracle_result, bool timing);

OracleResult oracle_ground_truth(const RouteSequence& route,
                                 const std::optional<BatteryParams>& params);

// Runs every requested algorithm over the corpus, always computing the oracle
// ground truth. Parallel over routes; counts merged in route order.
BenchReport run_bench(const Instance& inst, const std::vector<CorpusRecord>& corpus,
                      const BenchOptions& opts);

void write_report_csv(std::ostream& out, const BenchReport& report);

// Acceptance-style thresholds on the main scheduler's columns. Empty when the
// report passes.
std::vector<std::string> check_report(const BenchReport& report);

}  // namespace ridesched
