#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ridesched/routegen.hpp"
#include "support.hpp"

using namespace ridesched;

TEST_CASE("generation is deterministic in the seed") {
  Instance inst = testsup::load_fixture("pr01.txt");
  GenConfig cfg;
  cfg.seed = 99;
  cfg.routes_per_instance = 500;
  auto a = generate(inst, cfg);
  auto b = generate(inst, cfg);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].node_ids == b[i].node_ids);
  cfg.seed = 100;
  auto c = generate(inst, cfg);
  bool differs = false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].node_ids != c[i].node_ids) differs = true;
  CHECK(differs);
}

TEST_CASE("every generated route is structurally valid and sized") {
  Instance inst = testsup::load_fixture("pr01.txt");
  GenConfig cfg;
  cfg.seed = 7;
  cfg.routes_per_instance = 5000;
  cfg.size_min = 4;
  cfg.size_max = 40;
  auto recs = generate(inst, cfg);
  REQUIRE(recs.size() == 5000);
  for (const CorpusRecord& rec : recs) {
    CHECK(rec.node_ids.size() >= 4);
    CHECK(rec.node_ids.size() <= 42);  // target counts nodes before rounding up
    CHECK(rec.node_ids.front() == 0);
    CHECK(rec.node_ids.back() == 2 * inst.requests + 1);
    RouteSequence r = route_from_record(inst, rec);
    auto v = validate_structure(r);
    if (!v.empty()) {
      CAPTURE(v.front().what);
      CHECK(v.empty());
    }
  }
}

TEST_CASE("requests are never repeated within a route") {
  Instance inst = testsup::load_fixture("small.txt");
  GenConfig cfg;
  cfg.seed = 5;
  cfg.routes_per_instance = 2000;
  cfg.size_min = 4;
  cfg.size_max = 14;
  for (const CorpusRecord& rec : generate(inst, cfg)) {
    std::vector<int> seen;
    for (int id : rec.node_ids) {
      CHECK(std::find(seen.begin(), seen.end(), id) == seen.end());
      seen.push_back(id);
    }
  }
}

TEST_CASE("random bias still yields valid routes") {
  Instance inst = testsup::load_fixture("small.txt");
  GenConfig cfg;
  cfg.seed = 11;
  cfg.routes_per_instance = 2000;
  cfg.bias = GenBias::Random;
  for (const CorpusRecord& rec : generate(inst, cfg)) {
    RouteSequence r = route_from_record(inst, rec);
    CHECK(validate_structure(r).empty());
  }
}

TEST_CASE("station density inserts stations at zero-load slots only") {
  Instance inst = testsup::load_fixture("ea.txt", InstanceFormat::Eadarp);
  GenConfig cfg;
  cfg.seed = 13;
  cfg.routes_per_instance = 3000;
  cfg.size_min = 6;
  cfg.size_max = 18;
  cfg.station_density = 0.5;
  int with_station = 0;
  for (const CorpusRecord& rec : generate(inst, cfg)) {
    RouteSequence r = route_from_record(inst, rec);
    CHECK(validate_structure(r).empty());
    int load = 0;
    bool any = false;
    for (const Node& nd : r.nodes) {
      if (nd.kind == NodeKind::Station) {
        CHECK(load == 0);
        any = true;
      }
      load += nd.load_delta;
    }
    if (any) ++with_station;
  }
  CHECK(with_station > 1000);
}

TEST_CASE("zero station density never emits stations") {
  Instance inst = testsup::load_fixture("ea.txt", InstanceFormat::Eadarp);
  GenConfig cfg;
  cfg.seed = 17;
  cfg.routes_per_instance = 500;
  for (const CorpusRecord& rec : generate(inst, cfg))
    for (int id : rec.node_ids) CHECK_FALSE(inst.is_station(id));
}

TEST_CASE("impossible configurations are reported") {
  Instance inst = testsup::load_fixture("small.txt");
  GenConfig cfg;
  cfg.size_min = 40;  // only 6 requests exist
  cfg.size_max = 60;
  CHECK_THROWS_AS(generate(inst, cfg), GenerationExhausted);

  Instance tiny = inst;
  tiny.capacity = 0;  // nothing fits
  GenConfig cfg2;
  CHECK_THROWS_AS(generate(tiny, cfg2), GenerationExhausted);
}
