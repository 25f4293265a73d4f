#include "doctest.h"

#include "arcdist/surgery.hpp"

using namespace arcdist;

namespace {

struct Pair {
  ArcWord v, w;
};

// Seeded pairs whose walks scale with genus so most of them cross.
std::vector<Pair> random_pairs(const TriangulationPtr& t, std::uint64_t seed, int count) {
  SplitMix64 rng(seed);
  const int g = t->genus();
  std::vector<Pair> out;
  while (static_cast<int>(out.size()) < count) {
    auto v = random_arc(t, rng.next(), 8 * g + static_cast<int>(rng.below(24 * g)));
    auto w = random_arc(t, rng.next(), 8 * g + static_cast<int>(rng.below(24 * g)));
    out.push_back({v, w});
  }
  return out;
}

std::vector<Pair> crossing_pairs(const TriangulationPtr& t, std::uint64_t seed, int count) {
  SplitMix64 rng(seed);
  std::vector<Pair> out;
  while (static_cast<int>(out.size()) < count)
    for (auto& p : random_pairs(t, rng.next(), 16))
      if (static_cast<int>(out.size()) < count && intersection(p.v, p.w) > 0) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("overlay of disjoint arcs") {
  for (int g : {1, 2}) {
    auto t = build_standard_triangulation(g);
    auto e = t->p1p2_edges();
    auto o = build_overlay(edge_arc(t, e[0]), edge_arc(t, e[1]));
    CHECK(o.crossings.empty());
    CHECK(o.num_vertices() == 2);
    CHECK(o.num_edges() == 2);
    CHECK(o.euler() == 2 - 2 * g);
    int chi = 0;
    for (const auto& f : o.faces) chi += f.euler;
    CHECK(chi == 2 - 2 * g);
  }
}

TEST_CASE("overlay matches the intersection number and the Euler characteristic") {
  for (int g : {1, 2}) {
    auto t = build_standard_triangulation(g);
    for (const auto& [v, w] : random_pairs(t, 31 + g, 300)) {
      auto o = build_overlay(v, w);
      CHECK(static_cast<int>(o.crossings.size()) == intersection(v, w));
      CHECK(o.euler() == 2 - 2 * g);
      for (std::size_t k = 0; k < o.crossings.size(); ++k) CHECK(o.crossings[k].along_v == static_cast<int>(k));
    }
  }
}

TEST_CASE("an arc routed through a face misses both arcs") {
  auto t = build_standard_triangulation(2);
  int routed = 0;
  for (const auto& [v, w] : random_pairs(t, 12, 100)) {
    auto o = build_overlay(v, w);
    for (int f : o.faces_meeting_both()) {
      auto u = route_through_face(o, f);
      CHECK(embedded(u));
      CHECK(intersection(u, v) == 0);
      CHECK(intersection(u, w) == 0);
      ++routed;
    }
    for (std::size_t f = 0; f < o.faces.size(); ++f)
      if (!o.faces[f].p1 || !o.faces[f].p2) CHECK_THROWS_AS(route_through_face(o, static_cast<int>(f)), Error);
  }
  CHECK(routed > 0);
}

TEST_CASE("surgery needs a crossing") {
  auto t = build_standard_triangulation(1);
  CHECK_THROWS_AS(surgery_step(edge_arc(t, 4), edge_arc(t, 5)), Error);
}

TEST_CASE("surgery postconditions on random crossing pairs") {
  for (int g : {1, 2}) {
    auto t = build_standard_triangulation(g);
    int single = 0;
    for (const auto& [v, w] : crossing_pairs(t, 900 + g, 300)) {
      auto s = surgery_step(v, w);
      const int k = intersection(v, w);
      CHECK(s.before == k);
      CHECK(intersection(w, s.result) == 0);
      CHECK(intersection(s.result, v) == s.after);
      CHECK(s.after <= k - 1);
      CHECK(embedded(s.result));
      if (k == 1) {
        ++single;
        CHECK(s.after == 0);
      }
    }
    MESSAGE("genus " << g << ": pairs with one crossing: " << single);
  }
}

TEST_CASE("path_between") {
  auto t = build_standard_triangulation(1);
  auto a = edge_arc(t, 4), b = edge_arc(t, 5);
  CHECK(path_between(a, a).length() == 0);
  auto p = path_between(a, b);
  CHECK(p.length() == 1);
  CHECK(p.arcs.front() == b);
  CHECK(p.arcs.back() == a);

  for (int g : {1, 2}) {
    auto tg = build_standard_triangulation(g);
    for (const auto& [v, w] : random_pairs(tg, 77 + g, 300)) {
      const int k = intersection(v, w);
      auto path = path_between(v, w);
      CHECK(path.arcs.front() == w);
      CHECK(path.arcs.back() == v);
      CHECK(path.length() <= k + 1);
      int prev = k + 1;
      for (std::size_t j = 0; j < path.arcs.size(); ++j) {
        if (j > 0) CHECK(intersection(path.arcs[j - 1], path.arcs[j]) == 0);
        const int left = intersection(v, path.arcs[j]);
        if (prev > 0) CHECK(left < prev);
        prev = left;
      }
    }
  }
}

TEST_CASE("surgery is deterministic") {
  auto t = build_standard_triangulation(2);
  for (const auto& [v, w] : crossing_pairs(t, 5, 20)) {
    auto a = path_between(v, w);
    auto b = path_between(v, w);
    REQUIRE(a.arcs.size() == b.arcs.size());
    for (std::size_t j = 0; j < a.arcs.size(); ++j) CHECK(a.arcs[j] == b.arcs[j]);
  }
}
