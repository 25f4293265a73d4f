#include "arcdist/overlay.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "strands.hpp"

namespace arcdist {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int Overlay::euler() const {
  int chi = num_vertices() - num_edges();
  for (const auto& f : faces) chi += f.euler;
  return chi;
}

std::vector<int> Overlay::faces_meeting_both() const {
  std::vector<int> out;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (faces[f].p1 && faces[f].p2) out.push_back(static_cast<int>(f));
  return out;
}

Overlay build_overlay(const ArcWord& v, const ArcWord& w) {
  require_same_base(v, w);
  if (!embedded(v) || !embedded(w)) throw Error(Error::Code::precondition, "build_overlay needs embedded arcs");

  Straightening frame = straighten_to_edge(v);
  ArcWord wf = transport_along(w, frame.path);
  Overlay o{v, w, std::move(frame), std::move(wf), {}, {}, {}, {}};
  const Triangulation& t = o.w_frame.triangulation();
  const int e = o.frame.edge;
  detail::StrandOrder order(t, {&o.w_frame.raw()});

  // Crossings are w's strands on e.
  {
    const Side plus = t.side_of(e, true);
    const bool p2_first = t.vertex(Corner{plus.tri, plus.pos}) == Vertex::P2;
    const auto& list = order.along(e);
    const int n = static_cast<int>(list.size());
    std::vector<int> exits;
    for (const auto& [arc, strand] : list) exits.push_back(strand);
    std::vector<int> sorted = exits;
    std::sort(sorted.begin(), sorted.end());
    for (int r = 0; r < n; ++r) {
      const int aw = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), exits[r]) - sorted.begin());
      o.crossings.push_back({p2_first ? r : n - 1 - r, aw, exits[r]});
    }
    std::sort(o.crossings.begin(), o.crossings.end(),
              [](const auto& a, const auto& b) { return a.along_v < b.along_v; });
  }

  // Cut each triangle along w's segments. Boundary points run corner 0, the
  // strands on side 0, corner 1, ...; interval i joins point i to point i+1.
  const int F = t.num_triangles();
  std::vector<std::array<int, 3>> offset(F), count(F);
  std::vector<std::vector<int>> piece_of(F);
  for (int tri = 0; tri < F; ++tri) {
    int at = 0;
    for (int j = 0; j < 3; ++j) {
      offset[tri][j] = at;
      count[tri][j] = static_cast<int>(order.along(t.edge(Side{tri, j})).size());
      at += 1 + count[tri][j];
    }
    std::vector<int> partner(at, -1);
    piece_of[tri].assign(at, -1);
    const auto& vis = order.arc_visits(0);
    for (std::size_t k = 0; k < vis.size(); ++k) {
      if (vis[k].tri != tri) continue;
      auto point = [&](int loc, int strand) {
        if (detail::is_corner(loc)) return offset[tri][loc - detail::kCorner];
        return offset[tri][loc] + 1 + order.position(Side{tri, loc}, 0, strand);
      };
      const int p = point(vis[k].in, static_cast<int>(k) - 1);
      const int q = point(vis[k].out, static_cast<int>(k));
      partner[p] = q;
      partner[q] = p;
    }
    for (int start = 0; start < at; ++start) {
      if (piece_of[tri][start] >= 0) continue;
      const int id = static_cast<int>(o.pieces.size());
      OverlayPiece piece{tri, -1, {}};
      int cur = start;
      do {
        if (piece_of[tri][cur] >= 0) throw Error(Error::Code::internal, "overlay: segments of w cross");
        piece_of[tri][cur] = id;
        for (int pt : {cur, (cur + 1) % at})
          for (int j = 0; j < 3; ++j)
            if (pt == offset[tri][j] && std::find(piece.corners.begin(), piece.corners.end(), j) == piece.corners.end())
              piece.corners.push_back(j);
        int next = (cur + 1) % at;
        if (partner[next] >= 0) next = partner[next];
        cur = next;
      } while (cur != start);
      std::sort(piece.corners.begin(), piece.corners.end());
      o.pieces.push_back(std::move(piece));
    }
  }

  // Glue pieces across every side except those of e.
  UnionFind uf(static_cast<int>(o.pieces.size()));
  for (int tri = 0; tri < F; ++tri)
    for (int j = 0; j < 3; ++j) {
      const Side s{tri, j};
      if (t.edge(s) == e) continue;
      const Side o2 = t.twin(s);
      if (std::pair{o2.tri, o2.pos} < std::pair{tri, j}) continue;
      const int n = count[tri][j];
      for (int r = 0; r <= n; ++r) {
        const int a = piece_of[tri][offset[tri][j] + r];
        const int b = piece_of[o2.tri][offset[o2.tri][o2.pos] + n - r];
        o.glue.push_back({a, b, s});
        uf.unite(a, b);
      }
    }

  std::vector<int> face_id(o.pieces.size(), -1);
  for (std::size_t p = 0; p < o.pieces.size(); ++p) {
    const int root = uf.find(static_cast<int>(p));
    if (face_id[root] < 0) {
      face_id[root] = static_cast<int>(o.faces.size());
      o.faces.emplace_back();
    }
    auto& piece = o.pieces[p];
    piece.face = face_id[root];
    auto& face = o.faces[piece.face];
    face.pieces += 1;
    face.euler += 1;
    for (int c : piece.corners) {
      if (t.vertex(Corner{piece.tri, c}) == Vertex::P1) face.p1 = true;
      else face.p2 = true;
    }
  }
  for (const auto& g : o.glue) o.faces[o.pieces[g.a].face].euler -= 1;

  if (o.euler() != 2 - 2 * t.genus())
    throw Error(Error::Code::internal, "overlay Euler characteristic " + std::to_string(o.euler()) +
                                           " differs from the surface's");
  return o;
}

ArcWord route_through_face(const Overlay& o, int face) {
  if (face < 0 || face >= static_cast<int>(o.faces.size()))
    throw Error(Error::Code::invalid_input, "no such overlay face");
  if (!o.faces[face].p1 || !o.faces[face].p2)
    throw Error(Error::Code::precondition, "face does not meet both marked points");
  const Triangulation& t = o.w_frame.triangulation();
  const int P = static_cast<int>(o.pieces.size());

  std::vector<std::vector<std::pair<int, Side>>> adj(P);
  for (const auto& g : o.glue) {
    adj[g.a].push_back({g.b, g.side});
    adj[g.b].push_back({g.a, t.twin(g.side)});
  }
  auto corner_at = [&](int piece, Vertex x) {
    for (int c : o.pieces[piece].corners)
      if (t.vertex(Corner{o.pieces[piece].tri, c}) == x) return c;
    return -1;
  };

  // Breadth-first from every piece at P1, in index order, to the first piece at P2.
  std::vector<int> from(P, -2);
  std::vector<Side> via(P, Side{-1, -1});
  std::queue<int> queue;
  for (int p = 0; p < P; ++p)
    if (o.pieces[p].face == face && corner_at(p, Vertex::P1) >= 0) {
      from[p] = -1;
      queue.push(p);
    }
  int goal = -1;
  while (!queue.empty() && goal < 0) {
    const int p = queue.front();
    queue.pop();
    if (corner_at(p, Vertex::P2) >= 0) {
      goal = p;
      break;
    }
    for (const auto& [q, side] : adj[p])
      if (from[q] == -2) {
        from[q] = p;
        via[q] = side;
        queue.push(q);
      }
  }
  if (goal < 0) throw Error(Error::Code::internal, "face marked as meeting both points has no route");

  RawArc raw;
  int first = goal;
  for (int p = goal; from[p] >= 0; p = from[p]) {
    raw.exits.push_back(via[p]);
    first = from[p];
  }
  std::reverse(raw.exits.begin(), raw.exits.end());
  raw.start = Corner{o.pieces[first].tri, corner_at(first, Vertex::P1)};
  raw.end = Corner{o.pieces[goal].tri, corner_at(goal, Vertex::P2)};
  return transport_back(tighten(o.w_frame.base(), raw), o.frame.path);
}

}  // namespace arcdist
