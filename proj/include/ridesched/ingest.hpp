#pragma once

#include <iosfwd>
#include <stdexcept>

#include "ridesched/battery.hpp"
#include "ridesched/model.hpp"

namespace ridesched {

enum class InstanceFormat { Darp, Eadarp };

struct InstanceNodeSpec {
  double x = 0.0, y = 0.0;
  double service = 0.0;
  int load = 0;
  double open = 0.0, close = 0.0;
};

struct StationSpec {
  int id = 0;
  double x = 0.0, y = 0.0;
  double charge_rate = 0.0;  // alpha_s
};

struct BatteryBlock {
  double capacity = 0.0;      // Q
  double min_end_ratio = 0.0; // r
  double init = 0.0;          // B_init
  double discharge_rate = 0.0;  // beta
  std::vector<StationSpec> stations;
};

// A benchmark instance. Nodes are ordered: origin depot 0, pickups 1..n,
// dropoffs n+1..2n, destination depot 2n+1. Station ids follow 2n+1.
struct Instance {
  std::string name;
  int vehicles = 0;
  int requests = 0;
  double max_route_duration = 0.0;
  int capacity = 0;
  double default_max_ride = 0.0;
  std::vector<InstanceNodeSpec> nodes;  // size 2n+2
  std::optional<BatteryBlock> battery;

  double horizon() const { return max_route_duration; }
  bool is_station(int id) const;
  const StationSpec* station(int id) const;
  double travel(int id_a, int id_b) const;  // Euclidean, unrounded
  BatteryParams battery_params() const;     // requires battery block
};

struct ParseError : std::runtime_error {
  int line_no;
  ParseError(const std::string& what, int line)
      : std::runtime_error(what), line_no(line) {}
};

Instance parse_instance(std::istream& in, InstanceFormat format,
                        const std::string& name = "instance");
Instance load_instance(const std::string& path, InstanceFormat format);

// Fills pickup or dropoff windows left open at [0, horizon] from the paired
// side using service, direct travel, and maximum ride time.
Instance derive_dropoff_windows(const Instance& inst);

// One corpus line: instance_id;vehicle_id;node_id,node_id,...
struct CorpusRecord {
  std::string instance_id;
  int vehicle_id = 0;
  std::vector<int> node_ids;
};

std::vector<CorpusRecord> read_corpus(std::istream& in);
void write_corpus(std::ostream& out, const std::vector<CorpusRecord>& records);

CorpusRecord record_from_route(const RouteSequence& route);
RouteSequence route_from_record(const Instance& inst, const CorpusRecord& rec);

}  // namespace ridesched
