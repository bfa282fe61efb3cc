#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "garside/disk.hpp"
#include "garside/engine.hpp"
#include "garside/errors.hpp"
#include "garside/lattice.hpp"
#include "garside/oracle.hpp"
#include "json.hpp"

using namespace garside;

namespace {

const std::string kBraid3 = "v1:2,2,2;[0 1],[1 0]";
const std::string kBraid4 = "v1:2,2,2,2;[0 1 2],[2 1 0]";
const std::string kTriDiag = "v1:3,3;[0],[],[0],[]";

std::multiset<std::pair<int, int>> degree_profile(const OracleLattice& lat) {
  std::vector<std::pair<int, int>> deg(lat.elements.size(), {0, 0});
  for (const auto& [from, to] : lat.covers) {
    deg[from].second += 1;
    deg[to].first += 1;
  }
  return {deg.begin(), deg.end()};
}

// Divisor complements must stay simple at their own object.
void check_residuals_simple(Engine& eng, const IntervalLattice& lat) {
  const PositiveWord top = eng.delta(lat.base);
  for (const PositiveWord& element : lat.elements) {
    auto rest = eng.left_divides(element, top);
    REQUIRE(rest.has_value());
    CHECK(eng.left_divides(*rest, eng.delta(rest->source)).has_value());
  }
}

}  // namespace

TEST_CASE("the triangle interval has two elements") {
  Context ctx;
  Engine eng(ctx);
  IntervalLattice lat = interval(eng, kTriDiag);
  REQUIRE(lat.elements.size() == 2);
  CHECK(lat.elements[0].arcs.empty());
  CHECK(lat.elements[1].arcs == std::vector<int>{0});
  CHECK(lat.covers ==
        std::vector<std::tuple<int, int, int>>{{0, 0, 1}});
  CHECK(lat.bottom == 0);
  CHECK(lat.top == 1);

  LatticeCheck check = verify_lattice(eng, lat);
  CHECK(check.is_lattice);
  CHECK(check.matches_engine);
  CHECK(check.detail.empty());
}

TEST_CASE("the three strand interval is the weak order") {
  Context ctx;
  Engine eng(ctx);
  IntervalLattice lat = interval(eng, kBraid3);
  REQUIRE(lat.elements.size() == 6);
  std::vector<std::vector<int>> reps;
  for (const PositiveWord& e : lat.elements) reps.push_back(e.arcs);
  CHECK(reps == std::vector<std::vector<int>>{
                    {}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}});
  CHECK(lat.covers == std::vector<std::tuple<int, int, int>>{
                          {0, 0, 1},
                          {0, 1, 2},
                          {1, 1, 3},
                          {2, 0, 4},
                          {3, 0, 5},
                          {4, 1, 5}});
  CHECK(lat.bottom == 0);
  CHECK(lat.top == 5);
  CHECK(order_isomorphic(order_of(lat), weak_order(3)));

  LatticeCheck check = verify_lattice(eng, lat);
  CHECK(check.is_lattice);
  CHECK(check.matches_engine);

  IntervalLattice again = interval(eng, kBraid3);
  CHECK(again.covers == lat.covers);
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    CHECK(again.elements[i].arcs == lat.elements[i].arcs);
  }
}

TEST_CASE("the pentagon interval matches the reference tamari lattice") {
  Context ctx;
  Engine eng(ctx);
  DiskObject fan = fan_object(validate({3, 3, 3}), 0, {0, 1, 2});
  ctx.intern(fan);
  IntervalLattice lat = interval(eng, fan.key());
  CHECK(lat.elements.size() == 5);
  CHECK(lat.covers.size() == 5);
  CHECK(order_isomorphic(order_of(lat), classical_tamari(3)));

  LatticeCheck check = verify_lattice(eng, lat);
  CHECK(check.is_lattice);
  CHECK(check.matches_engine);
  check_residuals_simple(eng, lat);

  // Every base of this labelling carries the same five element lattice.
  for (const DiskObject& x : enumerate_objects(validate({3, 3, 3}))) {
    ctx.intern(x);
    IntervalLattice other = interval(eng, x.key());
    CHECK(other.elements.size() == 5);
    CHECK(order_isomorphic(order_of(other), classical_tamari(3)));
  }
}

TEST_CASE("the four strand interval is the weak order on four letters") {
  Context ctx;
  Engine eng(ctx);
  IntervalLattice lat = interval(eng, kBraid4);
  CHECK(lat.elements.size() == 24);
  CHECK(lat.covers.size() == 36);
  CHECK(order_isomorphic(order_of(lat), weak_order(4)));
  CHECK(eng.equal_positive(lat.elements[lat.top], eng.delta(kBraid4)));

  LatticeCheck check = verify_lattice(eng, lat);
  CHECK(check.is_lattice);
  CHECK(check.matches_engine);
}

TEST_CASE("square labelling bases give fourteen elements but not one shape") {
  Context ctx;
  Engine eng(ctx);
  DiskObject fan = fan_object(validate({3, 3, 3, 3}), 0, {0, 1, 2, 3});
  ctx.intern(fan);

  OracleLattice reference = classical_tamari(4);
  auto reference_profile = degree_profile(reference);

  IntervalLattice fan_lat = interval(eng, fan.key());
  CHECK(fan_lat.elements.size() == 14);
  CHECK(order_isomorphic(order_of(fan_lat), reference));

  int other_count = 0;
  for (const DiskObject& x : enumerate_objects(validate({3, 3, 3, 3}))) {
    ctx.intern(x);
    IntervalLattice lat = interval(eng, x.key());
    CHECK(lat.elements.size() == 14);
    CHECK(lat.covers.size() == 21);
    bool same = order_isomorphic(order_of(lat), reference);
    if (degree_profile(order_of(lat)) != reference_profile) {
      CHECK_FALSE(same);
    }
    if (!same) ++other_count;
  }
  CHECK(other_count == 8);
}

TEST_CASE("mixed labellings verify as lattices") {
  Context ctx;
  Engine eng(ctx);
  for (const std::vector<int>& labels :
       {std::vector<int>{2, 3}, {3, 4}, {2, 2, 3}}) {
    for (const DiskObject& x : enumerate_objects(validate(labels))) {
      ctx.intern(x);
      IntervalLattice lat = interval(eng, x.key());
      CHECK(lat.elements.size() >= 2);
      LatticeCheck check = verify_lattice(eng, lat);
      CHECK(check.is_lattice);
      CHECK(check.matches_engine);
      CHECK(check.detail.empty());
      check_residuals_simple(eng, lat);
    }
  }
}

TEST_CASE("the interval respects its node cap") {
  Context ctx;
  Engine eng(ctx);
  CHECK_THROWS_AS(interval(eng, kBraid3, 3), CapExceeded);
}

TEST_CASE("a bowtie order is rejected") {
  Context ctx;
  Engine eng(ctx);
  IntervalLattice bowtie;
  bowtie.base = kBraid3;
  bowtie.elements.assign(6, PositiveWord{kBraid3, {}});
  bowtie.covers = {{0, 0, 1}, {0, 1, 2}, {1, 0, 3}, {2, 0, 3},
                   {1, 1, 4}, {2, 1, 4}, {3, 0, 5}, {4, 0, 5}};
  bowtie.bottom = 0;
  bowtie.top = 5;

  LatticeCheck check = verify_lattice(eng, bowtie);
  CHECK_FALSE(check.is_lattice);
  CHECK_FALSE(check.matches_engine);
  CHECK(check.detail == "two elements have no unique least upper bound");
}

TEST_CASE("hasse renderings are deterministic") {
  Context ctx;
  Engine eng(ctx);
  IntervalLattice lat = interval(eng, kBraid3);

  std::string dot = render_hasse(lat, HasseFormat::kDot);
  CHECK(dot ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"e\"];\n"
        "  n1 [label=\"0\"];\n"
        "  n2 [label=\"1\"];\n"
        "  n3 [label=\"0 1\"];\n"
        "  n4 [label=\"1 0\"];\n"
        "  n5 [label=\"0 1 0\"];\n"
        "  n0 -> n1 [label=\"0\"];\n"
        "  n0 -> n2 [label=\"1\"];\n"
        "  n1 -> n3 [label=\"1\"];\n"
        "  n2 -> n4 [label=\"0\"];\n"
        "  n3 -> n5 [label=\"0\"];\n"
        "  n4 -> n5 [label=\"1\"];\n"
        "}\n");
  CHECK(render_hasse(lat, HasseFormat::kDot) == dot);

  nlohmann::json doc =
      nlohmann::json::parse(render_hasse(lat, HasseFormat::kJson));
  CHECK(doc["elements"].size() == 6);
  CHECK(doc["covers"].size() == 6);
  CHECK(doc["bottom"] == 0);
  CHECK(doc["top"] == 5);
  CHECK(doc["elements"][0] == nlohmann::json::array());
  CHECK(doc["elements"][5] == nlohmann::json({0, 1, 0}));
  CHECK(doc["covers"][0] == nlohmann::json({0, 0, 1}));

  std::string path = "hasse_roundtrip_test.dot";
  hasse_export(lat, HasseFormat::kDot, path);
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == dot);
  std::remove(path.c_str());

  CHECK_THROWS_AS(
      hasse_export(lat, HasseFormat::kDot, "/no_such_dir_xyz/out.dot"),
      UsageError);
}

TEST_CASE("tamari transports the interval to the objects") {
  Context ctx;
  Engine eng(ctx);
  DiskObject fan = fan_object(validate({3, 3, 3}), 0, {0, 1, 2});
  ctx.intern(fan);

  TamariOrder order = tamari(eng, fan.key());
  CHECK(order.base == fan.key());
  CHECK(order.objects.size() == 5);
  CHECK(order.covers.size() == 5);
  CHECK(order.objects[order.bottom] == fan.key());
  CHECK(order_isomorphic(order_of(order), classical_tamari(3)));

  std::set<std::string> objects(order.objects.begin(), order.objects.end());
  CHECK(objects.size() == 5);
  for (const DiskObject& x : enumerate_objects(validate({3, 3, 3}))) {
    CHECK(objects.count(x.key()) == 1);
  }

  TamariOrder tiny = tamari(eng, kTriDiag);
  CHECK(tiny.objects.size() == 2);

  CHECK_THROWS_AS(tamari(eng, kBraid3), UsageError);
}

TEST_CASE("threaded interval runs render identically to sequential ones") {
  Context ctx;
  Engine eng(ctx);
  for (const std::string& base :
       {kBraid4, std::string("v1:2,2,3;[0 1],[1 0],[]")}) {
    IntervalLattice alone = interval(eng, base, 10000, 1);
    for (int threads : {2, 3, 7}) {
      Context ctx2;
      Engine eng2(ctx2);
      IntervalLattice together = interval(eng2, base, 10000, threads);
      CHECK(render_hasse(together, HasseFormat::kDot) ==
            render_hasse(alone, HasseFormat::kDot));
      CHECK(render_hasse(together, HasseFormat::kJson) ==
            render_hasse(alone, HasseFormat::kJson));
      CHECK(together.base == alone.base);
      CHECK(together.bottom == alone.bottom);
      CHECK(together.top == alone.top);
    }
  }

  Context ctx3;
  Engine eng3(ctx3);
  CHECK_THROWS_AS(interval(eng3, kBraid3, 3, 4), CapExceeded);
}

TEST_CASE("the tamari order renders with object keys as labels") {
  Context ctx;
  Engine eng(ctx);
  TamariOrder tiny = tamari(eng, kTriDiag);

  std::string dot = render_hasse(tiny, HasseFormat::kDot);
  CHECK(dot.rfind("digraph hasse {", 0) == 0);
  for (const std::string& key : tiny.objects) {
    CHECK(dot.find("[label=\"" + key + "\"]") != std::string::npos);
  }

  nlohmann::json doc = nlohmann::json::parse(render_hasse(tiny, HasseFormat::kJson));
  CHECK(doc["elements"].size() == 2);
  CHECK(doc["covers"].size() == 1);
  CHECK(doc["elements"][doc["bottom"].get<int>()].get<std::string>() ==
        tiny.objects[tiny.bottom]);

  const char* path = "tamari_roundtrip_test.dot";
  hasse_export(tiny, HasseFormat::kDot, path);
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == dot);
  std::remove(path);
}
