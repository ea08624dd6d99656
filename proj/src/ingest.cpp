#include "ridesched/ingest.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace ridesched {

bool Instance::is_station(int id) const { return station(id) != nullptr; }

const StationSpec* Instance::station(int id) const {
  if (!battery) return nullptr;
  for (const StationSpec& s : battery->stations)
    if (s.id == id) return &s;
  return nullptr;
}

double Instance::travel(int id_a, int id_b) const {
  auto coords = [this](int id) -> std::pair<double, double> {
    if (id >= 0 && id < static_cast<int>(nodes.size()))
      return {nodes[id].x, nodes[id].y};
    const StationSpec* s = station(id);
    if (!s) throw std::out_of_range("unknown node id " + std::to_string(id));
    return {s->x, s->y};
  };
  auto [ax, ay] = coords(id_a);
  auto [bx, by] = coords(id_b);
  return std::hypot(ax - bx, ay - by);
}

BatteryParams Instance::battery_params() const {
  BatteryParams p;
  if (!battery) return p;
  p.capacity = battery->capacity;
  p.init = battery->init;
  p.end_ratio = battery->min_end_ratio;
  p.discharge_rate = battery->discharge_rate;
  for (const StationSpec& s : battery->stations) p.charge_rate[s.id] = s.charge_rate;
  return p;
}

namespace {

bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    size_t pos = line.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Instance parse_instance(std::istream& in, InstanceFormat format,
                        const std::string& name) {
  Instance inst;
  inst.name = name;
  std::string line;
  int line_no = 0;

  if (!next_data_line(in, line, line_no))
    throw ParseError("empty instance file", line_no);
  {
    std::istringstream ss(line);
    if (!(ss >> inst.vehicles >> inst.requests >> inst.max_route_duration >>
          inst.capacity >> inst.default_max_ride))
      throw ParseError("malformed header line", line_no);
  }
  if (inst.requests <= 0 || inst.vehicles <= 0)
    throw ParseError("header counts must be positive", line_no);

  const int node_count = 2 * inst.requests + 2;
  inst.nodes.resize(node_count);
  for (int k = 0; k < node_count; ++k) {
    if (!next_data_line(in, line, line_no))
      throw ParseError("node count mismatch: expected " +
                           std::to_string(node_count) + " node lines",
                       line_no);
    std::istringstream ss(line);
    int id;
    InstanceNodeSpec nd;
    if (!(ss >> id >> nd.x >> nd.y >> nd.service >> nd.load >> nd.open >> nd.close))
      throw ParseError("malformed node line", line_no);
    if (id != k) throw ParseError("node id out of order", line_no);
    inst.nodes[k] = nd;
  }
  // paired pickup/dropoff loads must cancel
  for (int r = 1; r <= inst.requests; ++r) {
    if (inst.nodes[r].load <= 0)
      throw ParseError("pickup " + std::to_string(r) + " must have positive load", 0);
    if (inst.nodes[r].load != -inst.nodes[r + inst.requests].load)
      throw ParseError("request " + std::to_string(r) + " loads do not cancel", 0);
  }

  if (format == InstanceFormat::Eadarp) {
    if (!next_data_line(in, line, line_no))
      throw ParseError("missing battery block", line_no);
    BatteryBlock bb;
    {
      std::istringstream ss(line);
      if (!(ss >> bb.capacity >> bb.min_end_ratio >> bb.init >> bb.discharge_rate))
        throw ParseError("malformed battery line", line_no);
    }
    if (bb.min_end_ratio < 0.0 || bb.min_end_ratio > 1.0)
      throw ParseError("battery end ratio outside [0,1]", line_no);
    if (bb.init > bb.capacity + kEps)
      throw ParseError("initial battery exceeds capacity", line_no);
    while (next_data_line(in, line, line_no)) {
      std::istringstream ss(line);
      StationSpec st;
      if (!(ss >> st.id >> st.x >> st.y >> st.charge_rate))
        throw ParseError("malformed station line", line_no);
      if (st.id < node_count)
        throw ParseError("station id collides with request nodes", line_no);
      bb.stations.push_back(st);
    }
    inst.battery = std::move(bb);
  }
  return inst;
}

Instance load_instance(const std::string& path, InstanceFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::string name = path;
  size_t slash = name.find_last_of("/\\");
  if (slash != std::string::npos) name = name.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return parse_instance(in, format, name);
}

Instance derive_dropoff_windows(const Instance& inst) {
  Instance out = inst;
  const double h = inst.horizon();
  auto unset = [&](const InstanceNodeSpec& nd) {
    return nd.open <= kEps && nd.close >= h - kEps;
  };
  for (int r = 1; r <= inst.requests; ++r) {
    InstanceNodeSpec& p = out.nodes[r];
    InstanceNodeSpec& d = out.nodes[r + inst.requests];
    double direct = inst.travel(r, r + inst.requests);
    double u = inst.default_max_ride;
    if (unset(d) && !unset(p)) {
      d.open = p.open + p.service + direct;
      d.close = p.close + p.service + u;
    } else if (unset(p) && !unset(d)) {
      p.open = std::max(0.0, d.open - u - p.service);
      p.close = std::min(h, d.close - direct - p.service);
    }
  }
  return out;
}

std::vector<CorpusRecord> read_corpus(std::istream& in) {
  std::vector<CorpusRecord> records;
  std::string line;
  int record_no = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    ++record_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t a = line.find(';');
    size_t b = a == std::string::npos ? std::string::npos : line.find(';', a + 1);
    if (b == std::string::npos)
      throw ParseError("malformed corpus record", record_no);
    CorpusRecord rec;
    rec.instance_id = line.substr(0, a);
    try {
      rec.vehicle_id = std::stoi(line.substr(a + 1, b - a - 1));
      std::istringstream ids(line.substr(b + 1));
      std::string tok;
      while (std::getline(ids, tok, ','))
        rec.node_ids.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("malformed corpus record", record_no);
    }
    if (rec.node_ids.size() < 2)
      throw ParseError("corpus record with fewer than two nodes", record_no);
    records.push_back(std::move(rec));
  }
  return records;
}

void write_corpus(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const CorpusRecord& rec : records) {
    out << rec.instance_id << ';' << rec.vehicle_id << ';';
    for (size_t i = 0; i < rec.node_ids.size(); ++i) {
      if (i) out << ',';
      out << rec.node_ids[i];
    }
    out << '\n';
  }
}

CorpusRecord record_from_route(const RouteSequence& route) {
  CorpusRecord rec;
  rec.instance_id = route.instance_id;
  rec.vehicle_id = route.vehicle_id;
  for (const Node& nd : route.nodes) rec.node_ids.push_back(nd.id);
  return rec;
}

RouteSequence route_from_record(const Instance& inst, const CorpusRecord& rec) {
  RouteSequence route;
  route.instance_id = rec.instance_id;
  route.vehicle_id = rec.vehicle_id;
  route.capacity = inst.capacity;
  const int n = inst.requests;
  const int last = 2 * n + 1;

  for (int id : rec.node_ids) {
    Node nd;
    nd.id = id;
    if (id == 0 || id == last) {
      nd.kind = id == 0 ? NodeKind::OriginDepot : NodeKind::DestinationDepot;
      const InstanceNodeSpec& spec = inst.nodes[id];
      nd.service = spec.service;
      nd.load_delta = 0;
      nd.window_open = spec.open;
      nd.window_close = spec.close;
    } else if (id >= 1 && id <= 2 * n) {
      const InstanceNodeSpec& spec = inst.nodes[id];
      nd.service = spec.service;
      nd.load_delta = spec.load;
      nd.window_open = spec.open;
      nd.window_close = spec.close;
      if (id <= n) {
        nd.kind = NodeKind::Pickup;
        nd.partner = id + n;
        nd.max_ride = inst.default_max_ride;
      } else {
        nd.kind = NodeKind::Dropoff;
        nd.partner = id - n;
      }
    } else {
      const StationSpec* st = inst.station(id);
      if (!st) throw std::out_of_range("unknown node id in record: " + std::to_string(id));
      nd.kind = NodeKind::Station;
      nd.service = 0.0;
      nd.window_open = 0.0;
      nd.window_close = inst.nodes[last].close;
    }
    route.nodes.push_back(nd);
  }
  for (size_t i = 0; i + 1 < rec.node_ids.size(); ++i)
    route.leg_travel.push_back(inst.travel(rec.node_ids[i], rec.node_ids[i + 1]));
  for (const Node& nd : route.nodes)
    if (nd.kind == NodeKind::Pickup)
      route.direct_travel[nd.id] = inst.travel(nd.id, nd.id + n);
  return route;
}

}  // namespace ridesched
