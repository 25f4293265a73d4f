#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "arcdist/arc.hpp"

using namespace arcdist;

namespace {

// Inserts `count` random spurs (cross a side of the current triangle and
// straight back) into a raw word. Returns the positions used, as a log.
RawArc insert_spurs(const Triangulation& t, RawArc raw, SplitMix64& rng, int count) {
  for (int n = 0; n < count; ++n) {
    const std::size_t at = rng.below(raw.exits.size() + 1);
    const int tri = at == 0 ? raw.start.tri : t.twin(raw.exits[at - 1]).tri;
    const Side s{tri, static_cast<int>(rng.below(3))};
    raw.exits.insert(raw.exits.begin() + static_cast<long>(at), {s, t.twin(s)});
  }
  return raw;
}

std::vector<int> random_walk(const TriangulationPtr& base, SplitMix64& rng, int steps) {
  std::vector<int> flips;
  auto t = base;
  for (int i = 0; i < steps; ++i) {
    auto options = t->flippable_edges();
    int e = options[rng.below(options.size())];
    flips.push_back(e);
    t = flip(*t, e);
  }
  return flips;
}

}  // namespace

TEST_CASE("edges read as arcs are tight and embedded") {
  auto t = build_standard_triangulation(1);
  for (int e : t->p1p2_edges()) {
    auto a = edge_arc(t, e);
    CHECK(a.is_edge());
    CHECK(a.edge() == e);
    CHECK(self_intersection(a) == 0);
    CHECK(intersection(a, a) == 0);
    CHECK(tighten(t, a.raw()) == a);
  }
  auto e4 = edge_arc(t, 4), e5 = edge_arc(t, 5);
  CHECK(intersection(e4, e5) == 0);
  CHECK(intersection_by_flips(e4, e5) == 0);
  CHECK_THROWS_AS(edge_arc(t, 1), Error);
}

TEST_CASE("tighten rejects inconsistent words") {
  auto t = build_standard_triangulation(1);
  RawArc raw{Corner{0, 0}, {Side{2, 0}}, Corner{0, 2}};
  CHECK_THROWS_AS(tighten(t, raw), Error);
  RawArc wrong_end{Corner{0, 0}, {}, Corner{0, 1}};  // both corners at P1
  CHECK_THROWS_AS(tighten(t, wrong_end), Error);
}

TEST_CASE("spur insertion round trips through tighten") {
  for (int g : {1, 2}) {
    auto t = build_standard_triangulation(g);
    SplitMix64 rng(100 + g);
    for (int trial = 0; trial < 500; ++trial) {
      auto a = random_arc(t, rng.next(), 1 + static_cast<int>(rng.below(12)));
      auto noisy = insert_spurs(*t, a.raw(), rng, 1 + static_cast<int>(rng.below(4)));
      auto back = tighten(t, noisy);
      REQUIRE(back == a);
      CHECK(tighten(t, back.raw()) == back);
    }
  }
}

TEST_CASE("corner bigons rotate around the endpoint") {
  auto t = build_standard_triangulation(1);
  // Start at P1 in triangle 0, run into side 0 (adjacent to corner 0) and
  // on to the P2 corner: this is edge 4 read the long way round the corner.
  auto a = edge_arc(t, 5);
  RawArc raw{Corner{0, 0}, {Side{0, 0}}, Corner{}};
  Side o = t->twin(Side{0, 0});
  // In the neighbour, end at whichever corner is P2, if any.
  for (int k = 0; k < 3; ++k)
    if (t->vertex(Corner{o.tri, k}) == Vertex::P2) raw.end = Corner{o.tri, k};
  if (t->vertex(raw.end) == Vertex::P2) {
    auto b = tighten(t, raw);
    CHECK(b.length() <= 1);
    CHECK(embedded(b));
  }
  CHECK(a.length() == 0);
}

TEST_CASE("random_arc is deterministic, embedded and tight") {
  for (int g : {1, 2}) {
    auto t = build_standard_triangulation(g);
    CHECK(random_arc(t, 5, 0).is_edge());
    CHECK(random_arc(t, 99, 17) == random_arc(t, 99, 17));
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      auto a = random_arc(t, seed, static_cast<int>(seed % 25));
      REQUIRE(self_intersection(a) == 0);
      CHECK(tighten(t, a.raw()) == a);
    }
  }
}

TEST_CASE("transport round trip along random flip walks") {
  for (int g : {1, 2}) {
    auto t = build_standard_triangulation(g);
    SplitMix64 rng(7 + g);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_arc(t, rng.next(), static_cast<int>(rng.below(15)));
      auto flips = random_walk(t, rng, 1 + static_cast<int>(rng.below(20)));
      auto path = FlipPath::walk(t, flips);
      auto there = transport_along(a, path);
      CHECK(embedded(there));
      REQUIRE(transport_back(there, path) == a);
    }
  }
}

TEST_CASE("transport leaves arcs away from the quadrilateral alone") {
  auto t = build_standard_triangulation(2);
  for (int e : t->p1p2_edges()) {
    auto a = edge_arc(t, e);
    for (int f : t->flippable_edges()) {
      if (f == e) continue;
      auto d = flip_data(*t, f);
      auto s = t->side_of(e);
      auto o = t->twin(s);
      if (s.tri == d.low || s.tri == d.high || o.tri == d.low || o.tri == d.high) continue;
      auto moved = transport(a, f);
      CHECK(moved.raw() == a.raw());
    }
  }
}

TEST_CASE("straighten_to_edge") {
  auto t = build_standard_triangulation(1);
  SUBCASE("edges need no flips") {
    auto s = straighten_to_edge(edge_arc(t, 6));
    CHECK(s.path.flips.empty());
    CHECK(s.edge == 6);
  }
  SUBCASE("every one-crossing arc on genus 1") {
    int seen = 0;
    for (const auto& a : enumerate_arcs(t, 1)) {
      if (a.length() != 1) continue;
      ++seen;
      auto s = straighten_to_edge(a);
      CHECK(s.path.flips.size() >= 1);
      CHECK(s.arc.is_edge());
      CHECK(transport_along(a, s.path) == edge_arc(s.path.finish(), s.edge));
    }
    CHECK(seen > 0);
  }
  SUBCASE("random arcs terminate as edges") {
    for (int g : {1, 2}) {
      auto tg = build_standard_triangulation(g);
      for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto a = random_arc(tg, seed * 31 + 3, 30);
        auto s = straighten_to_edge(a);
        CHECK(s.arc.is_edge());
      }
    }
  }
}

TEST_CASE("self intersection of a doubled loop is positive") {
  // Follow a closed loop of crossings around P2 twice before ending: the word
  // is normal but cannot be embedded.
  auto t = build_standard_triangulation(1);
  auto arcs = enumerate_arcs(t, 6);
  std::set<std::vector<int>> embedded_keys;
  for (const auto& a : arcs) embedded_keys.insert(a.key());
  // Brute force over normal words of length <= 6: at least one is not embedded,
  // and each such word has positive self-intersection.
  int non_embedded = 0;
  RawArc raw;
  std::function<void(int, int)> extend = [&](int tri, int entry) {
    const int opp = prev3(entry);
    if (t->vertex(Corner{tri, opp}) == Vertex::P2) {
      raw.end = Corner{tri, opp};
      auto a = tighten(t, raw);
      if (!embedded_keys.count(a.key())) {
        ++non_embedded;
        CHECK(self_intersection(a) > 0);
      }
    }
    if (raw.exits.size() >= 6) return;
    for (int side : {prev3(entry), next3(entry)}) {
      raw.exits.push_back(Side{tri, side});
      Side o = t->twin(Side{tri, side});
      extend(o.tri, o.pos);
      raw.exits.pop_back();
    }
  };
  for (int tri = 0; tri < t->num_triangles(); ++tri)
    for (int k = 0; k < 3; ++k)
      if (t->vertex(Corner{tri, k}) == Vertex::P1) {
        raw.start = Corner{tri, k};
        raw.exits = {Side{tri, next3(k)}};
        Side o = t->twin(Side{tri, next3(k)});
        extend(o.tri, o.pos);
      }
  CHECK(non_embedded > 0);

  // Doubling: splice a second copy of a loop (a stretch that leaves and
  // re-crosses the same side in the same direction). Some doublings are
  // spirals and stay embedded, others are not; either way the count must not
  // depend on the triangulation it is read in.
  SplitMix64 rng(5);
  int doubled = 0, crossing = 0;
  for (const auto& a : arcs) {
    const auto& ex = a.crossings();
    for (std::size_t i = 0; i + 1 < ex.size(); ++i)
      for (std::size_t j = i + 1; j < ex.size(); ++j) {
        if (ex[i] != ex[j]) continue;
        RawArc r = a.raw();
        r.exits.insert(r.exits.begin() + static_cast<long>(j), ex.begin() + static_cast<long>(i),
                       ex.begin() + static_cast<long>(j));
        auto d = tighten(t, r);
        const int k = self_intersection(d);
        crossing += k > 0;
        ++doubled;
        auto path = FlipPath::walk(t, random_walk(t, rng, 8));
        CHECK(self_intersection(transport_along(d, path)) == k);
      }
  }
  CHECK(doubled > 0);
  MESSAGE("doubled loops: " << doubled << ", self-crossing: " << crossing);
}

TEST_CASE("intersection: ordering count agrees with the flip oracle") {
  for (int g : {1, 2}) {
    auto t = build_standard_triangulation(g);
    SplitMix64 rng(4242 + g);
    int positive = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto v = random_arc(t, rng.next(), 8 * g + static_cast<int>(rng.below(24 * g)));
      auto w = random_arc(t, rng.next(), 8 * g + static_cast<int>(rng.below(24 * g)));
      int a = intersection(v, w);
      int b = intersection_by_flips(v, w);
      CAPTURE(trial);
      REQUIRE(a == b);
      CHECK(intersection(w, v) == a);
      CHECK(intersection(v, v) == 0);
      positive += a > 0;
    }
    MESSAGE("genus " << g << ": " << positive << " of 300 pairs intersect");
    CHECK(positive > 100);
  }
}

TEST_CASE("intersection is independent of the triangulation") {
  auto t = build_standard_triangulation(2);
  SplitMix64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = random_arc(t, rng.next(), static_cast<int>(rng.below(12)));
    auto w = random_arc(t, rng.next(), static_cast<int>(rng.below(12)));
    auto path = FlipPath::walk(t, random_walk(t, rng, 1 + static_cast<int>(rng.below(10))));
    CHECK(intersection(v, w) == intersection(transport_along(v, path), transport_along(w, path)));
  }
}

TEST_CASE("intersection requires a common base") {
  auto a = edge_arc(build_standard_triangulation(1), 4);
  auto b = edge_arc(build_standard_triangulation(2), 10);
  CHECK_THROWS_AS(intersection(a, b), Error);
}

TEST_CASE("enumerate_arcs") {
  auto t = build_standard_triangulation(1);
  auto zero = enumerate_arcs(t, 0);
  REQUIRE(zero.size() == 3);
  for (const auto& a : zero) CHECK(a.is_edge());

  auto four = enumerate_arcs(t, 4);
  std::set<std::vector<int>> keys;
  for (const auto& a : four) {
    CHECK(keys.insert(a.key()).second);
    CHECK(tighten(t, a.raw()) == a);
  }

  // Independent count: every locally consistent word of length <= 4 with any
  // turns (spurs and corner bigons included), tightened and filtered.
  std::set<std::vector<int>> brute;
  RawArc raw;
  std::function<void(int)> grow = [&](int tri) {
    for (int k = 0; k < 3; ++k) {
      if (t->vertex(Corner{tri, k}) != Vertex::P2) continue;
      raw.end = Corner{tri, k};
      if (raw.exits.empty() && raw.start.tri == tri && raw.start.pos == k) continue;
      auto a = tighten(t, raw);
      if (a.length() <= 4 && embedded(a)) brute.insert(a.key());
    }
    if (raw.exits.size() >= 4) return;
    for (int s = 0; s < 3; ++s) {
      raw.exits.push_back(Side{tri, s});
      grow(t->twin(Side{tri, s}).tri);
      raw.exits.pop_back();
    }
  };
  for (int tri = 0; tri < t->num_triangles(); ++tri)
    for (int k = 0; k < 3; ++k)
      if (t->vertex(Corner{tri, k}) == Vertex::P1) {
        raw.start = Corner{tri, k};
        raw.exits.clear();
        grow(tri);
      }
  CHECK(brute == keys);
  MESSAGE("genus-1 arcs with <= 4 crossings: " << keys.size());
}

TEST_CASE("loop homology on the torus") {
  auto t = build_standard_triangulation(1);
  auto a = edge_arc(t, 4), b = edge_arc(t, 5);
  // Edges 4 and 5 run from the two ends of edge 1 to P2: the loop is edge 1.
  CHECK(loop_intersection(a, b, 1) == 0);
  CHECK(std::abs(loop_intersection(a, b, 2)) == 1);
  CHECK(loop_intersection(a, a, 1) == 0);
  CHECK(loop_intersection(a, a, 2) == 0);
  CHECK_THROWS_AS(loop_intersection(a, b, 4), Error);

  SplitMix64 rng(55);
  int primitive = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto u = random_arc(t, rng.next(), static_cast<int>(rng.below(20)));
    auto v = random_arc(t, rng.next(), static_cast<int>(rng.below(20)));
    auto w = random_arc(t, rng.next(), static_cast<int>(rng.below(20)));
    for (int e : {1, 2}) {
      CHECK(loop_intersection(u, v, e) == -loop_intersection(v, u, e));
      CHECK(loop_intersection(u, v, e) + loop_intersection(v, w, e) == loop_intersection(u, w, e));
    }
    if (u == v || intersection(u, v) != 0) continue;
    // Distinct disjoint arcs close up to an essential simple loop.
    CHECK(std::gcd(loop_intersection(u, v, 1), loop_intersection(u, v, 2)) == 1);
    ++primitive;
  }
  MESSAGE("disjoint pairs checked for primitive classes: " << primitive);
  CHECK(primitive > 20);
}

TEST_CASE("strand layout") {
  auto t = build_standard_triangulation(2);
  SplitMix64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_arc(t, rng.next(), 10 + static_cast<int>(rng.below(30)));
    auto pts = strand_layout({a});
    REQUIRE(pts.size() == 1);
    REQUIRE(static_cast<int>(pts[0].size()) == a.length());
    std::map<std::pair<int, double>, int> seen;
    for (int k = 0; k < a.length(); ++k) {
      CHECK(pts[0][k] > 0.0);
      CHECK(pts[0][k] < 1.0);
      CHECK(++seen[{t->edge(a.crossings()[k]), pts[0][k]}] == 1);
    }
  }
}
