#include "doctest.h"

#include "arcdist/leveling.hpp"

using namespace arcdist;

namespace {

std::pair<ArcWord, ArcWord> random_pair(const TriangulationPtr& t, SplitMix64& rng) {
  const int g = t->genus();
  auto v = random_arc(t, rng.next(), 8 * g + static_cast<int>(rng.below(24 * g)));
  auto w = random_arc(t, rng.next(), 8 * g + static_cast<int>(rng.below(24 * g)));
  return {v, w};
}

}  // namespace

TEST_CASE("validate_sequence") {
  auto t = build_standard_triangulation(1);
  auto a = edge_arc(t, 4);
  CHECK(validate_sequence({t, {a}}).empty());
  CHECK(validate_sequence(path_between(edge_arc(t, 5), a)).empty());

  SplitMix64 rng(21);
  bool seen = false;
  while (!seen) {
    auto [v, w] = random_pair(t, rng);
    if (intersection(v, w) != 2) continue;
    seen = true;
    auto bad = validate_sequence({t, {v, w}});
    REQUIRE(bad.size() == 1);
    CHECK(bad.front().index == 1);
  }

  auto other = edge_arc(build_standard_triangulation(2), 10);
  CHECK_FALSE(validate_sequence({t, {a, other}}).empty());
}

TEST_CASE("one level: both arcs on F, no tubes") {
  auto t = build_standard_triangulation(1);
  auto L = arcs_to_leveling({t, {edge_arc(t, 4), edge_arc(t, 5)}});
  CHECK(L.n == 1);
  CHECK(L.tubes.empty());
  CHECK(L.levels.size() == 1);
  CHECK(L.cycle.size() == 2);
  CHECK(L.surface_genus() == 1);
  CHECK(validate_level_position(L).empty());
  auto back = leveling_to_arc_sequence(L);
  CHECK(back.length() == 1);
  CHECK(intersection(back.arcs[0], back.arcs[1]) == 0);
}

TEST_CASE("singleton sequence has no level position") {
  auto t = build_standard_triangulation(1);
  CHECK_THROWS_AS(arcs_to_leveling({t, {edge_arc(t, 4)}}), Error);
}

TEST_CASE("round trip and level laws on surgery paths") {
  int checked = 0;
  for (int g : {1, 2}) {
    auto t = build_standard_triangulation(g);
    SplitMix64 rng(300 + g);
    int deep = 0;
    while (checked < 60 * g) {
      auto [v, w] = random_pair(t, rng);
      if (v == w) continue;
      auto s = path_between(v, w);
      auto L = arcs_to_leveling(s);
      const int n = s.length();
      CHECK(L.n == n);
      CHECK(static_cast<int>(L.tubes.size()) == n - 1);
      CHECK(L.surface_genus() == g * n);
      CHECK(validate_level_position(L).empty());
      auto back = leveling_to_arc_sequence(L);
      REQUIRE(back.arcs.size() == s.arcs.size());
      for (std::size_t j = 0; j < s.arcs.size(); ++j) CHECK(back.arcs[j] == s.arcs[j]);
      deep += n >= 3;
      ++checked;
    }
    MESSAGE("genus " << g << ": paths with at least 3 levels: " << deep);
  }
  CHECK(checked >= 100);
}

TEST_CASE("damaged level positions are rejected") {
  auto t = build_standard_triangulation(1);
  SplitMix64 rng(5);
  std::optional<LevelPosition> found;
  while (!found) {
    auto [v, w] = random_pair(t, rng);
    auto s = path_between(v, w);
    if (s.length() >= 3) found = arcs_to_leveling(s);
  }
  const LevelPosition good = *found;
  REQUIRE(validate_level_position(good).empty());

  auto bad = good;
  bad.tubes.pop_back();
  CHECK_FALSE(validate_level_position(bad).empty());
  CHECK_THROWS_AS(leveling_to_arc_sequence(bad), Error);

  bad = good;
  std::swap(bad.cycle[0], bad.cycle[2]);
  CHECK_FALSE(validate_level_position(bad).empty());

  bad = good;
  bad.levels[1].strands.pop_back();
  CHECK_FALSE(validate_level_position(bad).empty());

  bad = good;
  bad.tubes[0].core = bad.level_arcs[1];  // generally crosses s_0
  if (intersection(bad.level_arcs[0], bad.level_arcs[1]) > 0) CHECK_FALSE(validate_level_position(bad).empty());

  bad = good;
  std::swap(bad.tubes[0].alpha, bad.tubes[0].beta);
  CHECK_FALSE(validate_level_position(bad).empty());
}

TEST_CASE("level number report") {
  auto t = build_standard_triangulation(1);
  auto a = edge_arc(t, 4), b = edge_arc(t, 5);
  auto zero = level_number_report({{a}, {a}});
  CHECK(zero.trivial_knot);
  CHECK_FALSE(zero.certificate);
  CHECK(zero.upper == 0);

  auto one = level_number_report({{a}, {b}});
  CHECK_FALSE(one.trivial_knot);
  REQUIRE(one.certificate);
  CHECK(one.certificate->n == 1);
  CHECK(one.lower == 1);
  CHECK(one.upper == 1);

  SplitMix64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto [v, w] = random_pair(t, rng);
    auto r = level_number_report({{v}, {w}});
    if (r.upper == 0) continue;
    REQUIRE(r.certificate);
    CHECK(r.certificate->n == r.upper);
    CHECK(validate_level_position(*r.certificate).empty());
    CHECK(r.certificate->level_arcs[0] == v);
    CHECK(r.certificate->level_arcs[1] == w);
  }
}

TEST_CASE("proposition bound") {
  auto t = build_standard_triangulation(1);
  CHECK(proposition_bound(edge_arc(t, 4), edge_arc(t, 5)) == 1);
  for (int g : {1, 2}) {
    auto tg = build_standard_triangulation(g);
    SplitMix64 rng(60 + g);
    for (int trial = 0; trial < 150; ++trial) {
      auto [v, w] = random_pair(tg, rng);
      const int meet = intersection(v, w) + 2;  // the two endpoints included
      const int bound = proposition_bound(v, w);
      CHECK(bound == meet - 1);
      CHECK(classify(v, w).upper <= bound);
    }
  }
}
