#include "doctest.h"

#include <algorithm>

#include "arcdist/arc.hpp"
#include "arcdist/surface.hpp"

using namespace arcdist;

namespace {

bool has_violation(const std::vector<Violation>& vs, const std::string& kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("standard triangulation counts for genus 1..4") {
  for (int g = 1; g <= 4; ++g) {
    CAPTURE(g);
    auto table = standard_table(g);
    CHECK(validate(table).empty());
    Triangulation t(table);
    CHECK(t.num_vertices() == 2);
    CHECK(t.num_edges() == 6 * g);
    CHECK(t.num_triangles() == 4 * g);
    CHECK(t.num_vertices() - t.num_edges() + t.num_triangles() == 2 - 2 * g);
  }
}

TEST_CASE("genus 1 table is the documented one") {
  auto table = standard_table(1);
  std::vector<std::array<int, 3>> expected{{1, 5, -4}, {2, 6, -5}, {-3, 4, -6}, {3, -1, -2}};
  CHECK(table.triangles == expected);
  Triangulation t(table);
  CHECK(t.p1p2_edges() == std::vector<int>{4, 5, 6});
}

TEST_CASE("genus 0 is rejected") {
  CHECK_THROWS_AS(standard_table(0), Error);
}

TEST_CASE("validator reports an edge used once") {
  auto table = standard_table(1);
  table.triangles[3][0] = 2;  // label 3 now appears once, label 2 three times
  auto vs = validate(table);
  CHECK(has_violation(vs, "edge degree"));
}

TEST_CASE("validator reports same-direction gluing") {
  auto table = standard_table(1);
  table.triangles[3][1] = 1;
  CHECK(has_violation(validate(table), "orientation"));
}

TEST_CASE("validator detects a vertex-merging regluing") {
  // Swap which sides two edges glue to until the corner classes merge into one.
  const auto base = standard_table(1);
  bool found = false;
  for (int x = 0; x < 12 && !found; ++x)
    for (int y = x + 1; y < 12 && !found; ++y) {
      auto table = base;
      std::swap(table.triangles[x / 3][x % 3], table.triangles[y / 3][y % 3]);
      auto vs = validate(table);
      if (has_violation(vs, "vertex count") && !has_violation(vs, "edge degree") &&
          !has_violation(vs, "orientation")) {
        found = true;
        CHECK(has_violation(vs, "euler"));
      }
    }
  CHECK(found);
}

TEST_CASE("constructor rejects invalid tables") {
  auto table = standard_table(1);
  table.triangles.pop_back();
  CHECK_THROWS_AS(Triangulation{table}, Error);
}

TEST_CASE("flip is an exact involution and preserves counts") {
  auto t = build_standard_triangulation(1);
  for (int e : t->flippable_edges()) {
    CAPTURE(e);
    auto once = flip(*t, e);
    CHECK(validate(once->table()).empty());
    CHECK(once->num_edges() == t->num_edges());
    CHECK(once->genus() == 1);
    auto twice = flip(*once, e);
    CHECK(*twice == *t);
    CHECK(isomorphic(*twice, *t));
  }
}

TEST_CASE("unflippable edge is an error") {
  // Walk until some edge has both sides on one triangle.
  auto t = build_standard_triangulation(1);
  SplitMix64 rng(7);
  bool seen = false;
  for (int step = 0; step < 400 && !seen; ++step) {
    for (int e = 1; e <= t->num_edges(); ++e)
      if (!t->flippable(e)) {
        CHECK_THROWS_AS(flip(*t, e), Error);
        seen = true;
      }
    auto options = t->flippable_edges();
    t = flip(*t, options[rng.below(options.size())]);
  }
  CHECK(seen);
}

TEST_CASE("random flip walks on genus 2 keep every triangulation valid") {
  auto t = build_standard_triangulation(2);
  SplitMix64 rng(2024);
  for (int step = 0; step < 50; ++step) {
    auto options = t->flippable_edges();
    REQUIRE(!options.empty());
    int e = options[rng.below(options.size())];
    auto next = flip(*t, e);
    CHECK(validate(next->table()).empty());
    CHECK(next->genus() == 2);
    CHECK(isomorphic(*flip(*next, e), *t));
    t = next;
  }
}

TEST_CASE("isomorphism ignores relabeling") {
  auto t = build_standard_triangulation(2);
  auto table = t->table();
  // Rotate every triangle and reverse edge 3's orientation.
  for (auto& tri : table.triangles) {
    std::rotate(tri.begin(), tri.begin() + 1, tri.end());
    for (int& l : tri)
      if (std::abs(l) == 3) l = -l;
  }
  std::swap(table.triangles[0], table.triangles[5]);
  table.p1_anchor = Corner{5, 2};
  Triangulation relabeled(table);
  CHECK(isomorphic(relabeled, *t));
}
