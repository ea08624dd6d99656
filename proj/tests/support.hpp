#pragma once

#include <functional>
#include <random>
#include <string>

#include "ridesched/ingest.hpp"
#include "ridesched/preprocess.hpp"

namespace testsup {

using namespace ridesched;

#ifndef RIDESCHED_FIXTURE_DIR
#define RIDESCHED_FIXTURE_DIR "tests/fixtures"
#endif

inline std::string fixture(const std::string& name) {
  return std::string(RIDESCHED_FIXTURE_DIR) + "/" + name;
}

inline Instance load_fixture(const std::string& name,
                             InstanceFormat fmt = InstanceFormat::Darp) {
  return derive_dropoff_windows(load_instance(fixture(name), fmt));
}

struct NodeSpec {
  NodeKind kind;
  double open, close;
  double service = 0.0;
  int load = 0;
  double max_ride = 0.0;  // pickups only, 0 means unset
};

// Builds a route from explicit node specs and leg travel times. Partner links
// pair pickups and dropoffs in nesting order of appearance.
inline RouteSequence make_route(const std::vector<NodeSpec>& specs,
                                const std::vector<double>& legs,
                                int capacity = 100) {
  RouteSequence r;
  r.instance_id = "synthetic";
  r.capacity = capacity;
  r.leg_travel = legs;
  std::vector<int> open_pickups;
  int next_station_id = 1000;
  for (size_t i = 0; i < specs.size(); ++i) {
    const NodeSpec& s = specs[i];
    Node nd;
    nd.kind = s.kind;
    nd.service = s.service;
    nd.window_open = s.open;
    nd.window_close = s.close;
    nd.load_delta = s.load;
    switch (s.kind) {
      case NodeKind::OriginDepot: nd.id = 0; break;
      case NodeKind::DestinationDepot: nd.id = 999; break;
      case NodeKind::Station: nd.id = next_station_id++; break;
      case NodeKind::Pickup:
        nd.id = static_cast<int>(i);
        if (s.max_ride > 0) nd.max_ride = s.max_ride;
        open_pickups.push_back(static_cast<int>(i));
        break;
      case NodeKind::Dropoff: {
        nd.id = 100 + open_pickups.front();
        nd.partner = open_pickups.front();
        open_pickups.erase(open_pickups.begin());
        break;
      }
    }
    r.nodes.push_back(nd);
  }
  for (Node& nd : r.nodes)
    if (nd.kind == NodeKind::Pickup) {
      for (Node& other : r.nodes)
        if (other.kind == NodeKind::Dropoff && other.partner &&
            *other.partner == nd.id)
          nd.partner = other.id;
    }
  // direct travel: shortest-path lower bound along the route legs
  for (int i = 0; i < r.size(); ++i) {
    const Node& nd = r.nodes[i];
    if (nd.kind != NodeKind::Pickup) continue;
    int d = r.index_of(*nd.partner);
    double along = 0.0;
    for (int k = i; k < d; ++k) along += r.leg_travel[k];
    for (int k = i + 1; k < d; ++k) along += r.nodes[k].service;
    r.direct_travel[nd.id] = along;
  }
  return r;
}

// The 6-node reference route: depot,P1,P2,D1,D2,depot; legs 10; services
// 0,1,1,1,1,0; wide windows except P2 opening at 40; u = 30; direct 20.
inline RouteSequence worked_example() {
  RouteSequence r = make_route(
      {
          {NodeKind::OriginDepot, 0, 1000, 0, 0, 0},
          {NodeKind::Pickup, 0, 1000, 1, 1, 30},
          {NodeKind::Pickup, 40, 1000, 1, 1, 30},
          {NodeKind::Dropoff, 0, 1000, 1, -1, 0},
          {NodeKind::Dropoff, 0, 1000, 1, -1, 0},
          {NodeKind::DestinationDepot, 0, 1000, 0, 0, 0},
      },
      {10, 10, 10, 10, 10});
  r.direct_travel[1] = 20;  // t(P1,D1)
  r.direct_travel[2] = 20;  // t(P2,D2)
  return r;
}

// Random station-free route with unit loads, plausible windows, and max ride
// times. Not guaranteed time-feasible.
inline RouteSequence random_route(std::mt19937_64& rng, int n_requests,
                                  double horizon = 500.0,
                                  double window_width = 60.0,
                                  int max_load = 1) {
  auto uni = [&](double a, double b) {
    return a + (b - a) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
  };
  std::vector<NodeSpec> specs;
  specs.push_back({NodeKind::OriginDepot, 0, horizon, 0, 0, 0});
  // random interleaving via a shuffled action list
  std::vector<int> actions;
  for (int q = 0; q < n_requests; ++q) {
    actions.push_back(q);
    actions.push_back(q + n_requests);
  }
  // repeatedly shuffle until precedence holds (fix by swapping instead)
  for (size_t i = actions.size(); i > 1; --i)
    std::swap(actions[i - 1], actions[rng() % i]);
  std::vector<int> pos(2 * n_requests, -1);
  for (size_t i = 0; i < actions.size(); ++i) pos[actions[i]] = static_cast<int>(i);
  for (int q = 0; q < n_requests; ++q)
    if (pos[q] > pos[q + n_requests]) std::swap(actions[pos[q]], actions[pos[q + n_requests]]);
  for (int a : actions) {
    if (a < n_requests) {
      double open = uni(0, horizon * 0.6);
      int load = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_load));
      specs.push_back({NodeKind::Pickup, open, std::min(horizon, open + window_width),
                       uni(1, 5), load, uni(40, 120)});
    } else {
      specs.push_back({NodeKind::Dropoff, 0, horizon, uni(1, 5), 0, 0});
    }
  }
  specs.push_back({NodeKind::DestinationDepot, 0, horizon, 0, 0, 0});
  // dropoff loads mirror their pickups; fill after pairing in make_route
  std::vector<double> legs(specs.size() - 1);
  for (double& t : legs) t = uni(1, 15);
  RouteSequence r = make_route(specs, legs);
  for (Node& nd : r.nodes)
    if (nd.kind == NodeKind::Dropoff) {
      int p = r.index_of(*nd.partner);
      nd.load_delta = -r.nodes[p].load_delta;
    }
  return r;
}

// Small route with tight ride-time caps and scattered late openings; the
// regime where greedy wait placement can exhaust a ride-time budget that a
// different placement would have preserved.
inline RouteSequence tight_route(std::mt19937_64& rng, int n_requests) {
  auto uni = [&](double a, double b) {
    return a + (b - a) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
  };
  RouteSequence r = random_route(rng, n_requests, 400.0, 400.0, 1);
  for (Node& nd : r.nodes) {
    if (nd.kind == NodeKind::Pickup) {
      int d = r.index_of(*nd.partner);
      int p = r.index_of(nd.id);
      double along = 0.0;
      for (int k = p; k < d; ++k) along += r.leg_travel[k];
      for (int k = p + 1; k < d; ++k) along += r.nodes[k].service;
      nd.max_ride = along + uni(0.0, 12.0);
      r.direct_travel[nd.id] = along;
    }
    if (nd.kind == NodeKind::Dropoff && (rng() % 3) == 0)
      nd.window_open = uni(20.0, 250.0);
    if (nd.kind == NodeKind::Pickup && (rng() % 4) == 0)
      nd.window_close = nd.window_open + uni(0.0, 30.0);
  }
  return r;
}

// Exhaustive family of 8-node routes built on the incorrect-infeasibility
// mechanism: a heavy early request A, a light long request B, and a third
// request C whose tight window pinches the wait volume before B's dropoff.
// Greedy wait placement prefers the low-load pickup of C inside B's span and
// exhausts B's ride slack; the recovery is to move that wait to B's pickup.
// The grid enumerates the window and ride-slack parameters.
inline void figure1_family(
    const std::function<void(const RouteSequence&)>& visit) {
  for (double pac : {5., 10., 15., 20., 25., 30.})
    for (double pco : {30., 45., 60., 75., 90.})
      for (double dpcc : {0., 5., 10.})
        for (double dbo : {60., 80., 100., 120., 140.})
          for (double usA : {5., 10., 20., 30., 40.})
            for (double usB : {3., 6., 10., 15., 20.}) {
              std::vector<NodeSpec> specs = {
                  {NodeKind::OriginDepot, 0, 1000, 0, 0, 0},
                  {NodeKind::Pickup, 0, pac, 0, 2, 20 + usA},
                  {NodeKind::Pickup, 0, 1000, 0, 1, 30 + usB},
                  {NodeKind::Dropoff, 0, 1000, 0, -2, 0},
                  {NodeKind::Pickup, pco, pco + dpcc, 0, 1, 200},
                  {NodeKind::Dropoff, dbo, 1000, 0, -1, 0},
                  {NodeKind::Dropoff, 0, 1000, 0, -1, 0},
                  {NodeKind::DestinationDepot, 0, 1000, 0, 0, 0},
              };
              visit(make_route(specs, std::vector<double>(7, 10.0), 3));
            }
}

}  // namespace testsup
