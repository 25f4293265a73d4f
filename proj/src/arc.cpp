#include "arcdist/arc.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "strands.hpp"

namespace arcdist {

using detail::is_corner;
using detail::kCorner;
using detail::Visit;

void check_consistent(const Triangulation& t, const RawArc& raw) {
  auto bad = [](const std::string& why) { throw Error(Error::Code::invalid_input, "inconsistent arc word: " + why); };
  const int F = t.num_triangles();
  auto corner_ok = [F](Corner c) { return c.tri >= 0 && c.tri < F && c.pos >= 0 && c.pos < 3; };
  if (!corner_ok(raw.start) || !corner_ok(raw.end)) bad("corner out of range");
  if (t.vertex(raw.start) != Vertex::P1) bad("start corner is not at P1");
  if (t.vertex(raw.end) != Vertex::P2) bad("end corner is not at P2");
  int tri = raw.start.tri;
  for (std::size_t i = 0; i < raw.exits.size(); ++i) {
    const Side& s = raw.exits[i];
    if (s.tri < 0 || s.tri >= F || s.pos < 0 || s.pos > 2) bad("side out of range");
    if (s.tri != tri) bad("crossing " + std::to_string(i) + " does not leave the current triangle");
    tri = t.twin(s).tri;
  }
  if (raw.end.tri != tri) bad("end corner is not in the last triangle entered");
}

int ArcWord::edge() const {
  if (!is_edge()) return 0;
  const Corner s = word_.start, e = word_.end;
  return base_->edge(Side{s.tri, e.pos == next3(s.pos) ? s.pos : e.pos});
}

int ArcWord::crossings_of(int edge) const {
  int n = 0;
  for (const Side& s : word_.exits) n += base_->edge(s) == edge;
  return n;
}

std::vector<int> ArcWord::key() const {
  std::vector<int> k;
  k.reserve(2 * word_.exits.size() + 4);
  k.push_back(static_cast<int>(word_.exits.size()));
  k.push_back(word_.start.tri);
  k.push_back(word_.start.pos);
  for (const Side& s : word_.exits) {
    k.push_back(s.tri);
    k.push_back(s.pos);
  }
  k.push_back(word_.end.tri);
  k.push_back(word_.end.pos);
  return k;
}

bool same_base(const ArcWord& a, const ArcWord& b) {
  return a.base() == b.base() || *a.base() == *b.base();
}

void require_same_base(const ArcWord& a, const ArcWord& b) {
  if (!same_base(a, b))
    throw Error(Error::Code::base_mismatch,
                "arcs live on different triangulations (" + a.base()->id() + " vs " + b.base()->id() + ")");
}

bool ArcWord::operator==(const ArcWord& other) const {
  return word_ == other.word_ && same_base(*this, other);
}

ArcWord tighten(TriangulationPtr base, RawArc raw) {
  const Triangulation& t = *base;
  check_consistent(t, raw);

  // Free reduction of spurs.
  std::vector<Side> stack;
  stack.reserve(raw.exits.size());
  for (const Side& s : raw.exits) {
    if (!stack.empty() && t.twin(stack.back()) == s)
      stack.pop_back();
    else
      stack.push_back(s);
  }

  // Corner bigons: the first segment must run to the side opposite its corner.
  std::size_t head = 0;
  Corner start = raw.start;
  while (head < stack.size()) {
    const Side s = stack[head];
    if (s.pos == next3(start.pos)) break;
    const Side o = t.twin(s);
    start = s.pos == start.pos ? Corner{o.tri, next3(o.pos)} : Corner{o.tri, o.pos};
    ++head;
  }
  std::size_t tail = stack.size();
  Corner end = raw.end;
  while (tail > head) {
    const Side s = stack[tail - 1];
    const Side o = t.twin(s);  // entry side of the final triangle
    if (end.pos == prev3(o.pos)) break;
    end = end.pos == o.pos ? Corner{s.tri, next3(s.pos)} : Corner{s.tri, s.pos};
    --tail;
  }
  RawArc out{start, std::vector<Side>(stack.begin() + head, stack.begin() + tail), end};

  if (out.exits.empty()) {
    // Zero crossings: the arc is the side joining the two corners. Record it
    // on the triangle carrying the edge's + side.
    if (start.tri != end.tri || start.pos == end.pos)
      throw Error(Error::Code::internal, "degenerate arc after tightening");
    const int side = end.pos == next3(start.pos) ? start.pos : end.pos;
    const Side plus = t.side_of(t.edge(Side{start.tri, side}), true);
    Corner a{plus.tri, plus.pos}, b{plus.tri, next3(plus.pos)};
    if (t.vertex(a) != Vertex::P1) std::swap(a, b);
    out.start = a;
    out.end = b;
  }
  return ArcWord(std::move(base), std::move(out));
}

ArcWord edge_arc(TriangulationPtr base, int edge) {
  const Side s = base->side_of(edge, true);
  Corner a{s.tri, s.pos}, b{s.tri, next3(s.pos)};
  if (base->vertex(a) == base->vertex(b))
    throw Error(Error::Code::invalid_input, "edge " + std::to_string(edge) + " does not join P1 and P2");
  if (base->vertex(a) != Vertex::P1) std::swap(a, b);
  return tighten(std::move(base), RawArc{a, {}, b});
}

namespace {

// Quadrilateral bookkeeping for a flip. Points a, b, c, d and outer sides
// s1..s4 follow the layout in surface.cpp.
enum Point { A, B, C, D };
enum QuadSide { E, S1, S2, S3, S4 };

struct QuadLoc {
  int slot;  // 0 = low triangle, 1 = high triangle
  int loc;   // side 0..2 or kCorner + corner
};

struct FlipFrame {
  FlipData d;
  // Old layout: what sits at each position of low/high.
  int old_point[2][3];
  int old_side[2][3];
  // New layout.
  int new_point[2][3];
  int new_side[2][3];

  explicit FlipFrame(const FlipData& data) : d(data) {
    auto put = [](int arr[3], int j, int x0, int x1, int x2) {
      arr[j] = x0;
      arr[next3(j)] = x1;
      arr[prev3(j)] = x2;
    };
    put(old_point[0], d.low_pos, A, B, C);
    put(old_point[1], d.high_pos, B, A, D);
    put(old_side[0], d.low_pos, E, S1, S2);
    put(old_side[1], d.high_pos, E, S3, S4);
    if (d.low_had_plus) {
      put(new_point[0], d.low_pos, D, C, A);
      put(new_point[1], d.high_pos, C, D, B);
      put(new_side[0], d.low_pos, E, S2, S3);
      put(new_side[1], d.high_pos, E, S4, S1);
    } else {
      put(new_point[0], d.low_pos, C, D, B);
      put(new_point[1], d.high_pos, D, C, A);
      put(new_side[0], d.low_pos, E, S4, S1);
      put(new_side[1], d.high_pos, E, S2, S3);
    }
  }

  int slot_of(int tri) const { return tri == d.low ? 0 : tri == d.high ? 1 : -1; }
  int tri_of(int slot) const { return slot == 0 ? d.low : d.high; }
  int e_pos(int slot) const { return slot == 0 ? d.low_pos : d.high_pos; }

  // Old location -> symbolic (is_corner, id).
  std::pair<bool, int> symbol(int slot, int loc) const {
    if (is_corner(loc)) return {true, old_point[slot][loc - kCorner]};
    return {false, old_side[slot][loc]};
  }
  // All new locations of a symbol.
  std::vector<QuadLoc> place(std::pair<bool, int> sym) const {
    std::vector<QuadLoc> out;
    for (int slot = 0; slot < 2; ++slot)
      for (int k = 0; k < 3; ++k) {
        if (sym.first && new_point[slot][k] == sym.second) out.push_back({slot, kCorner + k});
        if (!sym.first && new_side[slot][k] == sym.second) out.push_back({slot, k});
      }
    return out;
  }
};

}  // namespace

ArcWord transport(const ArcWord& a, int edge) { return transport(a, edge, flip(a.triangulation(), edge)); }

ArcWord transport(const ArcWord& a, int edge, TriangulationPtr flipped) {
  const Triangulation& t = a.triangulation();
  const FlipFrame f(flip_data(t, edge));
  const std::vector<Visit> old = detail::visits(t, a.raw());

  std::vector<Visit> fresh;
  fresh.reserve(old.size() + 2);
  std::size_t i = 0;
  while (i < old.size()) {
    const int slot = f.slot_of(old[i].tri);
    if (slot < 0) {
      fresh.push_back(old[i]);
      ++i;
      continue;
    }
    // Maximal passage through the quadrilateral, chained by crossings of `edge`.
    std::size_t j = i;
    while (!is_corner(old[j].out) && f.symbol(f.slot_of(old[j].tri), old[j].out).second == E &&
           !f.symbol(f.slot_of(old[j].tri), old[j].out).first)
      ++j;
    const auto entry = f.symbol(f.slot_of(old[i].tri), old[i].in);
    const auto exit = f.symbol(f.slot_of(old[j].tri), old[j].out);
    const auto ins = f.place(entry);
    const auto outs = f.place(exit);
    bool done = false;
    for (const QuadLoc& x : ins) {
      for (const QuadLoc& y : outs)
        if (x.slot == y.slot) {
          fresh.push_back({f.tri_of(x.slot), x.loc, y.loc});
          done = true;
          break;
        }
      if (done) break;
    }
    if (!done) {
      const QuadLoc x = ins.front();
      const QuadLoc y = outs.front();
      fresh.push_back({f.tri_of(x.slot), x.loc, f.e_pos(x.slot)});
      fresh.push_back({f.tri_of(y.slot), f.e_pos(y.slot), y.loc});
    }
    i = j + 1;
  }

  RawArc raw;
  raw.start = Corner{fresh.front().tri, fresh.front().in - kCorner};
  raw.end = Corner{fresh.back().tri, fresh.back().out - kCorner};
  for (std::size_t k = 0; k + 1 < fresh.size(); ++k) raw.exits.push_back(Side{fresh[k].tri, fresh[k].out});
  return tighten(std::move(flipped), std::move(raw));
}

FlipPath FlipPath::walk(TriangulationPtr start, std::span<const int> flips) {
  FlipPath p;
  p.bases.push_back(std::move(start));
  for (int e : flips) {
    p.bases.push_back(flip(*p.bases.back(), e));
    p.flips.push_back(e);
  }
  return p;
}

ArcWord transport_along(const ArcWord& a, const FlipPath& path) {
  ArcWord cur = a;
  for (std::size_t i = 0; i < path.flips.size(); ++i) cur = transport(cur, path.flips[i], path.bases[i + 1]);
  return cur;
}

ArcWord transport_back(const ArcWord& a, const FlipPath& path) {
  ArcWord cur = a;
  for (std::size_t i = path.flips.size(); i-- > 0;) cur = transport(cur, path.flips[i], path.bases[i]);
  return cur;
}

int self_intersection(const ArcWord& a) {
  detail::StrandOrder order(a.triangulation(), {&a.raw()});
  return order.crossings(0, 0);
}

int intersection(const ArcWord& v, const ArcWord& w) {
  require_same_base(v, w);
  detail::StrandOrder order(v.triangulation(), {&v.raw(), &w.raw()});
  return order.crossings(0, 1);
}

Straightening straighten_to_edge(const ArcWord& v) {
  FlipPath path;
  path.bases.push_back(v.base());
  ArcWord cur = v;
  const int E = v.triangulation().num_edges();
  const int cap = 64 + 16 * (v.length() + E);
  int last = 0;
  for (int iter = 0; !cur.is_edge(); ++iter) {
    if (iter >= cap)
      throw Error(Error::Code::internal, "straighten_to_edge exceeded its iteration cap with " +
                                             std::to_string(cur.length()) + " crossings left");
    std::set<int> crossed;
    for (const Side& s : cur.crossings()) crossed.insert(cur.triangulation().edge(s));
    int best_edge = 0;
    std::optional<ArcWord> best;
    TriangulationPtr best_base;
    // Prefer the shortest result; undoing the previous flip only as a last resort.
    auto score = [last](const ArcWord& a, int e) { return std::pair{a.length(), e == last}; };
    for (int e : crossed) {
      if (!cur.triangulation().flippable(e)) continue;
      TriangulationPtr nb = flip(cur.triangulation(), e);
      ArcWord moved = transport(cur, e, nb);
      if (!best || score(moved, e) < score(*best, best_edge)) {
        best = moved;
        best_edge = e;
        best_base = nb;
      }
    }
    if (!best)
      throw Error(Error::Code::internal, "straighten_to_edge found no flippable crossed edge");
    cur = *best;
    last = best_edge;
    path.flips.push_back(best_edge);
    path.bases.push_back(best_base);
  }
  const int e = cur.edge();
  return Straightening{std::move(path), e, std::move(cur)};
}

int intersection_by_flips(const ArcWord& v, const ArcWord& w) {
  require_same_base(v, w);
  const Straightening s = straighten_to_edge(v);
  const ArcWord moved = transport_along(w, s.path);
  return moved.crossings_of(s.edge);
}

std::vector<std::vector<double>> strand_layout(const std::vector<ArcWord>& arcs) {
  if (arcs.empty()) return {};
  std::vector<const RawArc*> raws;
  for (const auto& a : arcs) {
    require_same_base(arcs.front(), a);
    raws.push_back(&a.raw());
  }
  const Triangulation& t = arcs.front().triangulation();
  detail::StrandOrder order(t, raws);
  std::vector<std::vector<double>> out(arcs.size());
  for (std::size_t j = 0; j < arcs.size(); ++j)
    for (int k = 0; k < arcs[j].length(); ++k) {
      const int e = t.edge(arcs[j].crossings()[k]);
      const double m = static_cast<double>(order.along(e).size());
      out[j].push_back((order.rank(static_cast<int>(j), k) + 1) / (m + 1));
    }
  return out;
}

int loop_intersection(const ArcWord& v, const ArcWord& w, int edge) {
  require_same_base(v, w);
  const Triangulation& t = v.triangulation();
  const Side s = t.side_of(edge, true);
  if (t.vertex({s.tri, s.pos}) != Vertex::P1 || t.vertex({s.tri, next3(s.pos)}) != Vertex::P1)
    throw Error(Error::Code::precondition, "edge " + std::to_string(edge) + " is not a loop at P1");
  auto sign = [&](Side x) { return t.signed_label(x) > 0 ? 1 : -1; };
  int total = 0;
  for (const Side& x : v.crossings())
    if (t.edge(x) == edge) total += sign(x);
  for (const Side& x : w.crossings())
    if (t.edge(x) == edge) total -= sign(x);
  // Turn around P1 from w's start to v's start, crossing one side per step.
  Corner c = w.start_corner();
  for (int steps = 0; c != v.start_corner(); ++steps) {
    if (steps > 3 * t.num_triangles()) throw Error(Error::Code::internal, "turn around P1 did not close");
    const Side x{c.tri, c.pos};
    if (t.edge(x) == edge) total += sign(x);
    const Side y = t.twin(x);
    c = {y.tri, next3(y.pos)};
  }
  return total;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ArcWord random_arc(TriangulationPtr base, std::uint64_t seed, int steps) {
  if (steps < 0) throw Error(Error::Code::invalid_input, "steps must be non-negative");
  SplitMix64 rng(seed);
  std::vector<int> flips;
  FlipPath path;
  path.bases.push_back(base);
  auto step = [&] {
    const auto options = path.finish()->flippable_edges();
    const int e = options[rng.below(options.size())];
    path.flips.push_back(e);
    path.bases.push_back(flip(*path.finish(), e));
  };
  for (int i = 0; i < steps; ++i) step();
  for (int retry = 0; path.finish()->p1p2_edges().empty(); ++retry) {
    if (retry > 1000) throw Error(Error::Code::internal, "random_arc: no P1-P2 edge reachable");
    step();
  }
  const auto candidates = path.finish()->p1p2_edges();
  const int e = candidates[rng.below(candidates.size())];
  return transport_back(edge_arc(path.finish(), e), path);
}

std::vector<ArcWord> enumerate_arcs(TriangulationPtr base, int max_len) {
  const Triangulation& t = *base;
  std::map<std::vector<int>, ArcWord> found;
  auto keep = [&](ArcWord a) {
    if (a.length() > max_len || !embedded(a)) return;
    auto k = a.key();
    found.emplace(std::move(k), std::move(a));
  };
  for (int e : t.p1p2_edges()) keep(edge_arc(base, e));

  RawArc raw;
  // Depth-first over normal words; only the opposite side may follow a corner,
  // and each later step turns left, right, or stops at the opposite corner.
  auto extend = [&](auto&& self, int tri, int entry) -> void {
    const int opposite = prev3(entry);
    if (t.vertex(Corner{tri, opposite}) == Vertex::P2) {
      raw.end = Corner{tri, opposite};
      keep(tighten(base, raw));
    }
    if (static_cast<int>(raw.exits.size()) >= max_len) return;
    for (int side : {prev3(entry), next3(entry)}) {
      raw.exits.push_back(Side{tri, side});
      const Side o = t.twin(Side{tri, side});
      self(self, o.tri, o.pos);
      raw.exits.pop_back();
    }
  };
  if (max_len >= 1) {
    for (int tri = 0; tri < t.num_triangles(); ++tri)
      for (int k = 0; k < 3; ++k) {
        if (t.vertex(Corner{tri, k}) != Vertex::P1) continue;
        raw.start = Corner{tri, k};
        raw.exits.assign(1, Side{tri, next3(k)});
        const Side o = t.twin(Side{tri, next3(k)});
        extend(extend, o.tri, o.pos);
      }
  }
  std::vector<ArcWord> out;
  out.reserve(found.size());
  for (auto& [k, a] : found) out.push_back(std::move(a));
  return out;
}

}  // namespace arcdist
