#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ridesched/baseline.hpp"
#include "ridesched/bench.hpp"
#include "ridesched/routegen.hpp"

namespace {

using namespace ridesched;

Instance load(const std::string& path, const std::string& format) {
  InstanceFormat fmt =
      format == "eadarp" ? InstanceFormat::Eadarp : InstanceFormat::Darp;
  return derive_dropoff_windows(load_instance(path, fmt));
}

std::vector<Alg> parse_algs(const std::string& list) {
  std::vector<Alg> algs;
  std::istringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) algs.push_back(parse_alg(tok));
  if (algs.empty()) throw std::invalid_argument("empty algorithm list");
  return algs;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

int cmd_gen(const std::string& instance_path, const std::string& format,
            std::uint64_t seed, int count, int size_min, int size_max,
            double station_density, const std::string& out_path) {
  Instance inst = load(instance_path, format);
  GenConfig cfg;
  cfg.seed = seed;
  cfg.routes_per_instance = count;
  cfg.size_min = size_min;
  cfg.size_max = size_max;
  cfg.station_density = station_density;
  std::vector<CorpusRecord> corpus = generate(inst, cfg);
  if (out_path.empty()) {
    write_corpus(std::cout, corpus);
  } else {
    auto f = open_out(out_path);
    write_corpus(f, corpus);
  }
  return 0;
}

int cmd_schedule(const std::string& instance_path, const std::string& format,
                 const std::string& corpus_path, const std::string& alg_name,
                 const std::string& out_path) {
  Instance inst = load(instance_path, format);
  std::ifstream cf(corpus_path);
  if (!cf) throw std::runtime_error("cannot open corpus file: " + corpus_path);
  std::vector<CorpusRecord> corpus = read_corpus(cf);
  Alg alg = parse_alg(alg_name);
  std::optional<BatteryParams> params;
  if (inst.battery) params = inst.battery_params();

  std::ostringstream body;
  for (const CorpusRecord& rec : corpus) {
    RouteSequence route = route_from_record(inst, rec);
    OracleResult truth = oracle_ground_truth(route, params);
    RouteOutcome oc = evaluate_one(route, alg, params, truth, true);
    body << rec.instance_id << ';' << rec.vehicle_id << ';';
    if (oc.verdict.feasible)
      body << "feasible;" << oc.excess;
    else
      body << "infeasible(" << to_string(oc.verdict.reason) << "@"
           << oc.verdict.node_index << ");-";
    body << ';' << oc.cpu_ms << '\n';
  }
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    auto f = open_out(out_path);
    f << body.str();
  }
  return 0;
}

int cmd_bench(const std::string& instance_path, const std::string& format,
              const std::string& corpus_path, const std::string& alg_list,
              const std::string& out_path, int threads, bool check) {
  Instance inst = load(instance_path, format);
  std::ifstream cf(corpus_path);
  if (!cf) throw std::runtime_error("cannot open corpus file: " + corpus_path);
  std::vector<CorpusRecord> corpus = read_corpus(cf);

  BenchOptions opts;
  opts.algs = parse_algs(alg_list);
  opts.threads = threads;
  BenchReport report = run_bench(inst, corpus, opts);
  if (out_path.empty()) {
    write_report_csv(std::cout, report);
  } else {
    auto f = open_out(out_path);
    write_report_csv(f, report);
  }
  if (check) {
    std::vector<std::string> bad = check_report(report);
    for (const std::string& msg : bad) std::cerr << "check: " << msg << '\n';
    if (!bad.empty()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"route scheduling benchmark harness"};
  app.require_subcommand(1);

  std::string instance_path, format = "darp", corpus_path, alg = "alg1", out_path;
  std::uint64_t seed = 1;
  int count = 1000, size_min = 4, size_max = 20, threads = 0;
  double station_density = 0.0;
  bool check = false;

  auto* gen = app.add_subcommand("gen", "generate a route corpus");
  gen->add_option("--instance", instance_path, "instance file")->required();
  gen->add_option("--format", format)->check(CLI::IsMember({"darp", "eadarp"}));
  gen->add_option("--seed", seed);
  gen->add_option("--count", count);
  gen->add_option("--size-min", size_min);
  gen->add_option("--size-max", size_max);
  gen->add_option("--station-density", station_density);
  gen->add_option("--out", out_path);

  auto* sched = app.add_subcommand("schedule", "schedule each corpus route");
  sched->add_option("--instance", instance_path, "instance file")->required();
  sched->add_option("--format", format)->check(CLI::IsMember({"darp", "eadarp"}));
  sched->add_option("--corpus", corpus_path)->required();
  sched->add_option("--alg", alg, "alg1|eight-step|oracle");
  sched->add_option("--out", out_path);

  auto* bench = app.add_subcommand("bench", "audit algorithms against the oracle");
  bench->add_option("--instance", instance_path, "instance file")->required();
  bench->add_option("--format", format)->check(CLI::IsMember({"darp", "eadarp"}));
  bench->add_option("--corpus", corpus_path)->required();
  bench->add_option("--alg", alg, "comma-separated list");
  bench->add_option("--out", out_path);
  bench->add_option("--threads", threads);
  bench->add_flag("--check", check, "exit 1 when report thresholds are violated");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(instance_path, format, seed, count, size_min, size_max,
                     station_density, out_path);
    if (sched->parsed())
      return cmd_schedule(instance_path, format, corpus_path, alg, out_path);
    return cmd_bench(instance_path, format, corpus_path, alg, out_path, threads,
                     check);
  } catch (const ridesched::ParseError& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line_no << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
