#pragma once

#include <cstdint>

#include "ridesched/ingest.hpp"

namespace ridesched {

enum class GenBias { Random, GreedyNearest };

struct GenConfig {
  std::uint64_t seed = 1;
  int routes_per_instance = 100;
  int size_min = 4;
  int size_max = 20;
  double station_density = 0.0;  // probability per zero-load slot, e-ADARP only
  GenBias bias = GenBias::GreedyNearest;
};

struct GenerationExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic stream of capacity/precedence-feasible routes. Routes are not
// filtered for time-window feasibility; corpora deliberately contain
// time-infeasible routes.
std::vector<CorpusRecord> generate(const Instance& inst, const GenConfig& cfg);

}  // namespace ridesched
