#include "strands.hpp"

#include <algorithm>

namespace arcdist::detail {

std::vector<Visit> visits(const Triangulation& t, const RawArc& raw) {
  std::vector<Visit> out;
  out.reserve(raw.exits.size() + 1);
  int tri = raw.start.tri;
  int in = kCorner + raw.start.pos;
  for (const Side& s : raw.exits) {
    out.push_back({tri, in, s.pos});
    Side o = t.twin(s);
    tri = o.tri;
    in = o.pos;
  }
  out.push_back({tri, in, kCorner + raw.end.pos});
  return out;
}

namespace {

// Turn taken by a strand entering through side `entry`: 0 hugs the entry
// side's start corner, 2 its end corner, 1 runs into the opposite corner.
int turn(int entry, int exit) {
  if (!is_corner(exit)) return exit == prev3(entry) ? 0 : 2;
  return 1;
}

}  // namespace

StrandOrder::StrandOrder(const Triangulation& t, std::vector<const RawArc*> arcs)
    : tri_(t), arcs_(std::move(arcs)) {
  const int E = t.num_edges();
  along_.assign(E + 1, {});
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    visits_.push_back(visits(t, *arcs_[a]));
    const auto& ex = arcs_[a]->exits;
    for (std::size_t i = 0; i < ex.size(); ++i)
      along_[t.edge(ex[i])].push_back({static_cast<int>(a), static_cast<int>(i)});
  }
  rank_.resize(arcs_.size());
  for (std::size_t a = 0; a < arcs_.size(); ++a) rank_[a].assign(arcs_[a]->exits.size(), 0);
  for (int e = 1; e <= E; ++e) {
    auto& list = along_[e];
    std::stable_sort(list.begin(), list.end(), [&](const auto& x, const auto& y) {
      return compare(x.first, x.second, y.first, y.second, e) < 0;
    });
    for (std::size_t r = 0; r < list.size(); ++r) rank_[list[r].first][list[r].second] = static_cast<int>(r);
  }
}

bool StrandOrder::forward_into_plus(int arc, int strand, int edge) const {
  // Going forward the arc enters the + side's triangle iff it exits through the - side.
  return arcs_[arc]->exits[strand] != tri_.side_of(edge, true);
}

int StrandOrder::walk(int arc_a, int ia, bool fwd_a, int arc_b, int ib, bool fwd_b) const {
  const auto& va = visits_[arc_a];
  const auto& vb = visits_[arc_b];
  int pa = fwd_a ? ia + 1 : ia;
  int pb = fwd_b ? ib + 1 : ib;
  while (true) {
    const Visit& x = va[pa];
    const Visit& y = vb[pb];
    int xin = fwd_a ? x.in : x.out, xout = fwd_a ? x.out : x.in;
    int yin = fwd_b ? y.in : y.out, yout = fwd_b ? y.out : y.in;
    int tx = turn(xin, xout);
    int ty = turn(yin, yout);
    if (tx != ty) return tx < ty ? -1 : 1;
    if (tx == 1) return 0;
    pa += fwd_a ? 1 : -1;
    pb += fwd_b ? 1 : -1;
  }
}

int StrandOrder::compare(int arc_a, int ia, int arc_b, int ib, int edge) const {
  if (arc_a == arc_b && ia == ib) return 0;
  const bool a_plus = forward_into_plus(arc_a, ia, edge);
  const bool b_plus = forward_into_plus(arc_b, ib, edge);
  // Lexicographic: first by the walk into the + triangle, then by the walk
  // into the - triangle (read along the reversed side). A fixed direction
  // keeps this a total order; it is only used to lay out strands, never to
  // count crossings between arcs.
  int r = walk(arc_a, ia, a_plus, arc_b, ib, b_plus);
  if (r != 0) return r;
  r = -walk(arc_a, ia, !a_plus, arc_b, ib, !b_plus);
  if (r != 0) return r;
  if (arc_a != arc_b) return arc_a < arc_b ? -1 : 1;
  return ia < ib ? -1 : 1;
}

int StrandOrder::position(Side s, int arc, int strand) const {
  int e = tri_.edge(s);
  int r = rank_[arc][strand];
  return tri_.signed_label(s) > 0 ? r : static_cast<int>(along_[e].size()) - 1 - r;
}

bool StrandOrder::first_turns_differ(int arc_a, int ia, bool fwd_a, int arc_b, int ib, bool fwd_b) const {
  const Visit& x = visits_[arc_a][fwd_a ? ia + 1 : ia];
  const Visit& y = visits_[arc_b][fwd_b ? ib + 1 : ib];
  const int tx = fwd_a ? turn(x.in, x.out) : turn(x.out, x.in);
  const int ty = fwd_b ? turn(y.in, y.out) : turn(y.out, y.in);
  return tx != ty;
}

int StrandOrder::crossings(int a, int b) const {
  int count = 0;

  // Two strands on a common edge travel together in both directions until
  // they separate. If they separate on opposite sides at the two ends the
  // run forces exactly one crossing; it is counted once, at the run's first
  // edge along the strand of arc a.
  for (const auto& list : along_) {
    for (const auto& [xa, xi] : list) {
      if (xa != a) continue;
      for (const auto& [ya, yi] : list) {
        if (ya != b || (a == b && yi <= xi)) continue;
        const int e = tri_.edge(arcs_[xa]->exits[xi]);
        const bool xp = forward_into_plus(xa, xi, e);
        const bool yp = forward_into_plus(ya, yi, e);
        const int plus = walk(xa, xi, xp, ya, yi, yp);
        const int minus = -walk(xa, xi, !xp, ya, yi, !yp);
        if (plus == 0 || minus == 0 || plus == minus) continue;
        // Behind x: x walks backward, so y walks into the same triangle.
        if (first_turns_differ(xa, xi, false, ya, yi, yp != xp)) ++count;
      }
    }
  }

  // Segments in one triangle that share no side or corner cross iff their
  // endpoints interleave around the boundary.
  auto code = [](int loc) { return is_corner(loc) ? 2 * (loc - kCorner) : 2 * loc + 1; };
  struct Chord {
    int lo, hi, p, q;
  };
  std::vector<std::vector<Chord>> va(tri_.num_triangles()), vb(tri_.num_triangles());
  auto collect = [&](int arc, std::vector<std::vector<Chord>>& out) {
    for (const Visit& v : visits_[arc]) {
      const int p = code(v.in), q = code(v.out);
      out[v.tri].push_back({std::min(p, q), std::max(p, q), p, q});
    }
  };
  collect(a, va);
  if (b != a) collect(b, vb);
  const auto& other = b == a ? va : vb;
  for (std::size_t t = 0; t < va.size(); ++t)
    for (std::size_t i = 0; i < va[t].size(); ++i)
      for (std::size_t j = (b == a ? i + 1 : 0); j < other[t].size(); ++j) {
        const Chord& x = va[t][i];
        const Chord& y = other[t][j];
        if (x.lo == y.lo || x.lo == y.hi || x.hi == y.lo || x.hi == y.hi) continue;
        const bool lo_in = x.lo < y.lo && y.lo < x.hi;
        const bool hi_in = x.lo < y.hi && y.hi < x.hi;
        count += lo_in != hi_in;
      }
  return count;
}

}  // namespace arcdist::detail
