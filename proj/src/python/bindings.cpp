#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ridesched/baseline.hpp"
#include "ridesched/bench.hpp"
#include "ridesched/routegen.hpp"

namespace py = pybind11;
using namespace ridesched;

namespace {

Instance load_py(const std::string& path, const std::string& format) {
  InstanceFormat fmt =
      format == "eadarp" ? InstanceFormat::Eadarp : InstanceFormat::Darp;
  return derive_dropoff_windows(load_instance(path, fmt));
}

Instance parse_py(const std::string& text, const std::string& format,
                  const std::string& name) {
  InstanceFormat fmt =
      format == "eadarp" ? InstanceFormat::Eadarp : InstanceFormat::Darp;
  std::istringstream in(text);
  return derive_dropoff_windows(parse_instance(in, fmt, name));
}

std::vector<CorpusRecord> generate_py(const Instance& inst, std::uint64_t seed,
                                      int count, int size_min, int size_max,
                                      double station_density) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.routes_per_instance = count;
  cfg.size_min = size_min;
  cfg.size_max = size_max;
  cfg.station_density = station_density;
  return generate(inst, cfg);
}

py::dict schedule_py(const Instance& inst, const CorpusRecord& rec,
                     const std::string& alg_name) {
  RouteSequence route = route_from_record(inst, rec);
  std::optional<BatteryParams> params;
  if (inst.battery) params = inst.battery_params();
  Alg alg = parse_alg(alg_name);
  py::dict out;
  if (alg == Alg::Oracle) {
    OracleResult res = oracle_ground_truth(route, params);
    out["feasible"] = res.feasible;
    out["excess"] = res.feasible ? py::object(py::float_(res.excess)) : py::none();
    out["starts"] = res.starts;
    return out;
  }
  ScheduleFn fn = alg == Alg::Alg1
      ? ScheduleFn([](const RouteSequence& r, const PreprocessedRoute& p) {
          return schedule_route(r, p);
        })
      : ScheduleFn([](const RouteSequence& r, const PreprocessedRoute& p) {
          return eight_step(r, p);
        });
  EvalResult ev = evaluate_route(route, params, fn);
  const Verdict& v = ev.battery && !ev.battery->verdict.feasible
                         ? ev.battery->verdict
                         : ev.schedule.verdict;
  out["feasible"] = v.feasible;
  if (v.feasible) {
    out["excess"] = ev.schedule.excess;
    out["starts"] = ev.schedule.starts;
    out["waits"] = ev.schedule.waits;
  } else {
    out["excess"] = py::none();
    out["reason"] = std::string(to_string(v.reason));
    out["node_index"] = v.node_index;
  }
  return out;
}

std::string bench_py(const Instance& inst, const std::vector<CorpusRecord>& corpus,
                     const std::vector<std::string>& algs, int threads) {
  BenchOptions opts;
  opts.algs.clear();
  for (const std::string& a : algs) opts.algs.push_back(parse_alg(a));
  opts.threads = threads;
  BenchReport report = run_bench(inst, corpus, opts);
  std::ostringstream out;
  write_report_csv(out, report);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "route scheduling engine bindings";

  py::class_<Instance>(m, "Instance")
      .def_readonly("name", &Instance::name)
      .def_readonly("vehicles", &Instance::vehicles)
      .def_readonly("requests", &Instance::requests)
      .def_readonly("capacity", &Instance::capacity)
      .def_property_readonly("has_battery",
                             [](const Instance& i) { return bool(i.battery); })
      .def("travel", &Instance::travel);

  py::class_<CorpusRecord>(m, "CorpusRecord")
      .def(py::init([](const std::string& instance_id, int vehicle_id,
                       std::vector<int> node_ids) {
             return CorpusRecord{instance_id, vehicle_id, std::move(node_ids)};
           }),
           py::arg("instance_id"), py::arg("vehicle_id"), py::arg("node_ids"))
      .def_readonly("instance_id", &CorpusRecord::instance_id)
      .def_readonly("vehicle_id", &CorpusRecord::vehicle_id)
      .def_readonly("node_ids", &CorpusRecord::node_ids);

  m.def("load_instance", &load_py, py::arg("path"), py::arg("format") = "darp");
  m.def("parse_instance", &parse_py, py::arg("text"), py::arg("format") = "darp",
        py::arg("name") = "instance");
  m.def("generate", &generate_py, py::arg("instance"), py::arg("seed") = 1,
        py::arg("count") = 100, py::arg("size_min") = 4, py::arg("size_max") = 20,
        py::arg("station_density") = 0.0);
  m.def("schedule", &schedule_py, py::arg("instance"), py::arg("record"),
        py::arg("alg") = "alg1");
  m.def("bench_csv", &bench_py, py::arg("instance"), py::arg("corpus"),
        py::arg("algs"), py::arg("threads") = 1);
  m.def("read_corpus", [](const std::string& text) {
    std::istringstream in(text);
    return read_corpus(in);
  });
  m.def("write_corpus", [](const std::vector<CorpusRecord>& records) {
    std::ostringstream out;
    write_corpus(out, records);
    return out.str();
  });
}
