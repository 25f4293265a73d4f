#include "arcdist/surface.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <numeric>
#include <sstream>

namespace arcdist {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string table_id(const TriangulationTable& t) {
  // FNV-1a over genus and the signed side labels.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::int64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>((x >> (8 * i)) & 0xff);
      h *= 1099511628211ULL;
    }
  };
  mix(t.genus);
  for (const auto& tri : t.triangles)
    for (int l : tri) mix(l);
  return "tri-" + hex64(h);
}

}  // namespace

std::vector<Violation> validate(const TriangulationTable& table) {
  std::vector<Violation> out;
  const int F = static_cast<int>(table.triangles.size());
  if (table.genus < 0) out.push_back({"genus", "negative genus"});
  if (F == 0) {
    out.push_back({"empty", "no triangles"});
    return out;
  }
  if (F % 2 != 0) out.push_back({"edge degree", "odd number of triangles cannot pair all sides"});
  const int E = (3 * F) / 2;

  // Occurrences per label: (tri, pos, sign).
  std::vector<std::vector<std::array<int, 3>>> occ(E + 1);
  bool labels_ok = true;
  for (int t = 0; t < F; ++t) {
    for (int k = 0; k < 3; ++k) {
      int l = table.triangles[t][k];
      if (l == 0 || std::abs(l) > E) {
        std::ostringstream msg;
        msg << "label " << l << " at triangle " << t << " side " << k << " outside 1.." << E;
        out.push_back({"label range", msg.str()});
        labels_ok = false;
        continue;
      }
      occ[std::abs(l)].push_back({t, k, l > 0 ? 1 : -1});
    }
  }
  bool degree_ok = labels_ok;
  for (int l = 1; l <= E; ++l) {
    if (occ[l].size() != 2) {
      std::ostringstream msg;
      msg << "edge " << l << " occurs " << occ[l].size() << " times";
      out.push_back({"edge degree", msg.str()});
      degree_ok = false;
    } else if (occ[l][0][2] == occ[l][1][2]) {
      std::ostringstream msg;
      msg << "edge " << l << " glued with matching directions";
      out.push_back({"orientation", msg.str()});
    }
  }
  if (!degree_ok) return out;

  UnionFind corners(3 * F);
  UnionFind faces(F);
  for (int l = 1; l <= E; ++l) {
    auto [t0, k0, s0] = occ[l][0];
    auto [t1, k1, s1] = occ[l][1];
    faces.unite(t0, t1);
    if (s0 != s1) {
      corners.unite(3 * t0 + k0, 3 * t1 + next3(k1));
      corners.unite(3 * t0 + next3(k0), 3 * t1 + k1);
    } else {
      corners.unite(3 * t0 + k0, 3 * t1 + k1);
      corners.unite(3 * t0 + next3(k0), 3 * t1 + next3(k1));
    }
  }
  int components = 0;
  for (int t = 0; t < F; ++t) components += faces.find(t) == t;
  if (components != 1) out.push_back({"connectivity", std::to_string(components) + " components"});

  int V = 0;
  for (int c = 0; c < 3 * F; ++c) V += corners.find(c) == c;
  if (V != 2) out.push_back({"vertex count", std::to_string(V) + " vertex classes, expected 2"});
  if (V - E + F != 2 - 2 * table.genus) {
    std::ostringstream msg;
    msg << "V - E + F = " << V - E + F << ", expected " << 2 - 2 * table.genus;
    out.push_back({"euler", msg.str()});
  }
  const Corner a = table.p1_anchor;
  if (a.tri < 0 || a.tri >= F || a.pos < 0 || a.pos > 2)
    out.push_back({"anchor", "p1 anchor corner out of range"});
  return out;
}

Triangulation::Triangulation(TriangulationTable table) : table_(std::move(table)) {
  auto violations = validate(table_);
  if (!violations.empty()) {
    std::string msg = "invalid triangulation:";
    for (const auto& v : violations) msg += " [" + v.kind + ": " + v.detail + "]";
    throw Error(Error::Code::invalid_input, msg);
  }
  const int F = num_triangles();
  const int E = num_edges();
  edge_sides_.assign(E + 1, {});
  for (int t = 0; t < F; ++t)
    for (int k = 0; k < 3; ++k) {
      int l = table_.triangles[t][k];
      edge_sides_[std::abs(l)][l > 0 ? 0 : 1] = Side{t, k};
    }
  twin_.assign(F, {});
  for (int l = 1; l <= E; ++l) {
    auto [p, m] = edge_sides_[l];
    twin_[p.tri][p.pos] = m;
    twin_[m.tri][m.pos] = p;
  }
  UnionFind corners(3 * F);
  for (int t = 0; t < F; ++t)
    for (int k = 0; k < 3; ++k) {
      Side o = twin_[t][k];
      corners.unite(3 * t + k, 3 * o.tri + next3(o.pos));
    }
  const int p1 = corners.find(3 * table_.p1_anchor.tri + table_.p1_anchor.pos);
  vertex_.assign(F, {});
  bool anchored = false;
  for (int t = 0; t < F; ++t)
    for (int k = 0; k < 3; ++k) {
      bool is_p1 = corners.find(3 * t + k) == p1;
      vertex_[t][k] = is_p1 ? Vertex::P1 : Vertex::P2;
      // Normalize the anchor to the first P1 corner so equal surfaces have equal tables.
      if (is_p1 && !anchored) {
        table_.p1_anchor = Corner{t, k};
        anchored = true;
      }
    }
  id_ = table_id(table_);
}

Side Triangulation::side_of(int edge, bool positive) const {
  if (edge < 1 || edge > num_edges())
    throw Error(Error::Code::invalid_input, "edge label " + std::to_string(edge) + " out of range");
  return edge_sides_[edge][positive ? 0 : 1];
}

bool Triangulation::flippable(int edge) const {
  return side_of(edge, true).tri != side_of(edge, false).tri;
}

std::vector<int> Triangulation::flippable_edges() const {
  std::vector<int> out;
  for (int e = 1; e <= num_edges(); ++e)
    if (flippable(e)) out.push_back(e);
  return out;
}

std::vector<int> Triangulation::p1p2_edges() const {
  std::vector<int> out;
  for (int e = 1; e <= num_edges(); ++e) {
    Side s = side_of(e);
    if (vertex(Corner{s.tri, s.pos}) != vertex(Corner{s.tri, next3(s.pos)})) out.push_back(e);
  }
  return out;
}

TriangulationTable standard_table(int genus) {
  if (genus < 1)
    throw Error(Error::Code::invalid_input, "standard triangulation requires genus >= 1");
  const int n = 4 * genus;  // polygon sides
  auto polygon_label = [](int i) {
    int k = i / 4;
    switch (i % 4) {
      case 0: return 2 * k + 1;
      case 1: return 2 * k + 2;
      case 2: return -(2 * k + 1);
      default: return -(2 * k + 2);
    }
  };
  auto diagonal = [genus](int i) { return 2 * genus + (i - 1); };  // v0 -> v_i, i = 2..n-2
  const int spoke_x = 6 * genus - 2, spoke_y = 6 * genus - 1, spoke_z = 6 * genus;

  TriangulationTable t;
  t.genus = genus;
  // Fan triangle i has corners (v0, v_i, v_{i+1}).
  auto fan = [&](int i) -> std::array<int, 3> {
    int s0 = i == 1 ? polygon_label(0) : diagonal(i);
    int s1 = polygon_label(i);
    int s2 = i + 1 == n - 1 ? polygon_label(n - 1) : -diagonal(i + 1);
    return {s0, s1, s2};
  };
  auto first = fan(1);
  // P2 sits inside fan triangle 1; corners x = v0, y = v1, z = v2.
  t.triangles.push_back({first[0], spoke_y, -spoke_x});
  t.triangles.push_back({first[1], spoke_z, -spoke_y});
  t.triangles.push_back({first[2], spoke_x, -spoke_z});
  for (int i = 2; i <= n - 2; ++i) t.triangles.push_back(fan(i));
  t.p1_anchor = Corner{0, 0};
  return t;
}

TriangulationPtr build_standard_triangulation(int genus) {
  return std::make_shared<const Triangulation>(standard_table(genus));
}

FlipData flip_data(const Triangulation& t, int edge) {
  Side p = t.side_of(edge, true);
  Side m = t.side_of(edge, false);
  if (p.tri == m.tri)
    throw Error(Error::Code::precondition,
                "edge " + std::to_string(edge) + " is not flippable: both sides lie on triangle " +
                    std::to_string(p.tri));
  FlipData d;
  d.edge = edge;
  const Side lo = p.tri < m.tri ? p : m;
  const Side hi = p.tri < m.tri ? m : p;
  d.low = lo.tri;
  d.high = hi.tri;
  d.low_pos = lo.pos;
  d.high_pos = hi.pos;
  d.low_had_plus = lo == p;
  return d;
}

TriangulationPtr flip(const Triangulation& t, int edge) {
  const FlipData d = flip_data(t, edge);
  TriangulationTable table = t.table();
  const auto& L = t.table().triangles[d.low];
  const auto& H = t.table().triangles[d.high];
  const int jl = d.low_pos, jh = d.high_pos;
  const int s1 = L[next3(jl)], s2 = L[prev3(jl)];
  const int s3 = H[next3(jh)], s4 = H[prev3(jh)];
  std::array<int, 3> newL{}, newH{};
  if (d.low_had_plus) {
    // low <- (d, c, a), high <- (c, d, b)
    newL[jl] = -edge, newL[next3(jl)] = s2, newL[prev3(jl)] = s3;
    newH[jh] = edge, newH[next3(jh)] = s4, newH[prev3(jh)] = s1;
  } else {
    // low <- (c, d, b), high <- (d, c, a)
    newL[jl] = edge, newL[next3(jl)] = s4, newL[prev3(jl)] = s1;
    newH[jh] = -edge, newH[next3(jh)] = s2, newH[prev3(jh)] = s3;
  }
  table.triangles[d.low] = newL;
  table.triangles[d.high] = newH;
  // Keep P1 anchored on a triangle the flip did not touch, if there is one.
  Corner anchor{-1, 0};
  for (int i = 0; i < t.num_triangles() && anchor.tri < 0; ++i) {
    if (i == d.low || i == d.high) continue;
    for (int k = 0; k < 3; ++k)
      if (t.vertex(Corner{i, k}) == Vertex::P1) {
        anchor = Corner{i, k};
        break;
      }
  }
  if (anchor.tri < 0) {
    // Every P1 corner is in the quadrilateral; positions of a, b, c, d are known.
    const Vertex a = t.vertex(Corner{d.low, jl}), b = t.vertex(Corner{d.low, next3(jl)});
    const Vertex c = t.vertex(Corner{d.low, prev3(jl)}), dd = t.vertex(Corner{d.high, prev3(jh)});
    const std::array<Vertex, 3> low_pts =
        d.low_had_plus ? std::array<Vertex, 3>{dd, c, a} : std::array<Vertex, 3>{c, dd, b};
    for (int k = 0; k < 3; ++k)
      if (low_pts[k] == Vertex::P1) anchor = Corner{d.low, (jl + k) % 3};
    if (anchor.tri < 0) {
      const std::array<Vertex, 3> high_pts =
          d.low_had_plus ? std::array<Vertex, 3>{c, dd, b} : std::array<Vertex, 3>{dd, c, a};
      for (int k = 0; k < 3; ++k)
        if (high_pts[k] == Vertex::P1) anchor = Corner{d.high, (jh + k) % 3};
    }
  }
  table.p1_anchor = anchor;
  return std::make_shared<const Triangulation>(std::move(table));
}

std::vector<int> canonical_code(const Triangulation& t) {
  const int F = t.num_triangles();
  std::vector<int> best;
  for (int start = 0; start < F; ++start) {
    for (int rot = 0; rot < 3; ++rot) {
      std::vector<int> order_rot(F, -1);
      std::vector<int> order;
      std::deque<int> queue;
      order_rot[start] = rot;
      queue.push_back(start);
      order.push_back(start);
      while (!queue.empty()) {
        int tri = queue.front();
        queue.pop_front();
        for (int k = 0; k < 3; ++k) {
          Side o = t.twin(Side{tri, (order_rot[tri] + k) % 3});
          if (order_rot[o.tri] < 0) {
            order_rot[o.tri] = o.pos;
            order.push_back(o.tri);
            queue.push_back(o.tri);
          }
        }
      }
      std::vector<int> edge_id(t.num_edges() + 1, 0);
      std::vector<int> edge_sign(t.num_edges() + 1, 0);
      int next_id = 1;
      std::vector<int> code{t.genus()};
      for (int tri : order) {
        for (int k = 0; k < 3; ++k) {
          Side s{tri, (order_rot[tri] + k) % 3};
          int l = t.signed_label(s);
          int e = std::abs(l);
          if (edge_id[e] == 0) {
            edge_id[e] = next_id++;
            edge_sign[e] = l > 0 ? 1 : -1;
          }
          code.push_back(edge_id[e] * (l > 0 ? 1 : -1) * edge_sign[e]);
          code.push_back(static_cast<int>(t.vertex(Corner{s.tri, s.pos})));
        }
      }
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
  return a.num_triangles() == b.num_triangles() && canonical_code(a) == canonical_code(b);
}

}  // namespace arcdist
