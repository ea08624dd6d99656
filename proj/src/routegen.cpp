#include "ridesched/routegen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ridesched {

namespace {

// Explicit helpers instead of std distributions so streams are identical
// across standard libraries.
std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(next_u64(rng) % static_cast<std::uint64_t>(hi - lo + 1));
}

double uniform_real(std::mt19937_64& rng) {
  return static_cast<double>(next_u64(rng) >> 11) * (1.0 / 9007199254740992.0);
}

struct Pos {
  double x, y;
};

}  // namespace

std::vector<CorpusRecord> generate(const Instance& inst, const GenConfig& cfg) {
  const int n = inst.requests;
  const int last = 2 * n + 1;
  const bool stations_available =
      inst.battery && !inst.battery->stations.empty() && cfg.station_density > 0.0;

  std::vector<int> usable;
  for (int q = 1; q <= n; ++q)
    if (inst.nodes[q].load <= inst.capacity) usable.push_back(q);
  if (usable.empty())
    throw GenerationExhausted("no request fits vehicle capacity");

  int min_requests = std::max(1, (cfg.size_min - 2 + 1) / 2);
  if (min_requests > static_cast<int>(usable.size()) && !stations_available)
    throw GenerationExhausted("size range unreachable: instance has " +
                              std::to_string(usable.size()) + " usable requests");

  std::mt19937_64 rng(cfg.seed);
  std::vector<CorpusRecord> out;
  out.reserve(cfg.routes_per_instance);

  auto coords = [&](int id) -> Pos {
    if (id < static_cast<int>(inst.nodes.size()))
      return {inst.nodes[id].x, inst.nodes[id].y};
    const StationSpec* s = inst.station(id);
    return {s->x, s->y};
  };

  for (int r = 0; r < cfg.routes_per_instance; ++r) {
    int target = uniform_int(rng, cfg.size_min, cfg.size_max);
    int avail = static_cast<int>(usable.size());
    int want = std::clamp((target - 2) / 2, 1, avail);

    // pick `want` distinct requests (partial Fisher-Yates)
    std::vector<int> pool = usable;
    for (int i = 0; i < want; ++i)
      std::swap(pool[i], pool[uniform_int(rng, i, avail - 1)]);
    pool.resize(want);

    CorpusRecord rec;
    rec.instance_id = inst.name;
    rec.vehicle_id = r % std::max(1, inst.vehicles);
    rec.node_ids.push_back(0);

    std::vector<int> pending = pool;    // requests not yet picked up
    std::vector<int> onboard;           // requests picked up, not dropped
    int load = 0;
    Pos here = coords(0);

    auto maybe_station = [&]() {
      if (load != 0 || !stations_available) return;
      if (uniform_real(rng) >= cfg.station_density) return;
      const auto& st = inst.battery->stations;
      int pick = uniform_int(rng, 0, static_cast<int>(st.size()) - 1);
      rec.node_ids.push_back(st[pick].id);
      here = coords(st[pick].id);
    };

    while (!pending.empty() || !onboard.empty()) {
      std::vector<int> actions;  // node ids
      for (int q : pending)
        if (load + inst.nodes[q].load <= inst.capacity) actions.push_back(q);
      for (int q : onboard) actions.push_back(q + n);
      // capacity-feasible by construction: dropoffs always available
      int choice;
      if (cfg.bias == GenBias::GreedyNearest && uniform_real(rng) < 0.85) {
        choice = actions.front();
        double best = std::hypot(here.x - coords(choice).x, here.y - coords(choice).y);
        for (int a : actions) {
          double d = std::hypot(here.x - coords(a).x, here.y - coords(a).y);
          if (d < best) {
            best = d;
            choice = a;
          }
        }
      } else {
        choice = actions[uniform_int(rng, 0, static_cast<int>(actions.size()) - 1)];
      }
      rec.node_ids.push_back(choice);
      here = coords(choice);
      if (choice <= n) {
        load += inst.nodes[choice].load;
        pending.erase(std::find(pending.begin(), pending.end(), choice));
        onboard.push_back(choice);
      } else {
        load += inst.nodes[choice].load;  // dropoff load is negative
        onboard.erase(std::find(onboard.begin(), onboard.end(), choice - n));
      }
      maybe_station();
    }
    rec.node_ids.push_back(last);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace ridesched
