#include "arcdist/distance.hpp"

#include <algorithm>

namespace arcdist {

namespace {

bool word_less(const ArcWord& a, const ArcWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.key() < b.key();
}

}  // namespace

SearchResult bounded_search(const ArcWord& v, const ArcWord& w, SearchLimits limits) {
  if (limits.max_len < 0) throw Error(Error::Code::invalid_input, "search limits must be non-negative");
  return bounded_search(v, w, limits, enumerate_arcs(v.base(), limits.max_len));
}

SearchResult bounded_search(const ArcWord& v, const ArcWord& w, SearchLimits limits,
                            const std::vector<ArcWord>& pool) {
  require_same_base(v, w);
  if (limits.max_len < 0 || limits.max_depth < 0)
    throw Error(Error::Code::invalid_input, "search limits must be non-negative");
  for (const auto& a : pool) require_same_base(a, v);
  SearchResult out;
  out.limits = limits;

  std::vector<ArcWord> verts = pool;
  for (const ArcWord* a : {&v, &w})
    if (std::find(verts.begin(), verts.end(), *a) == verts.end()) verts.push_back(*a);
  std::sort(verts.begin(), verts.end(), word_less);
  out.vertices = static_cast<int>(verts.size());
  const auto index = [&](const ArcWord& a) {
    return static_cast<int>(std::find(verts.begin(), verts.end(), a) - verts.begin());
  };
  const int src = index(w), dst = index(v);
  const int N = out.vertices;

  // Layers of distance from v; then walk down from w taking the least
  // neighbour one layer closer, which gives the lexicographically least path.
  std::vector<int> dist(N, -1);
  dist[dst] = 0;
  std::vector<int> frontier{dst};
  for (int d = 1; d <= limits.max_depth && dist[src] < 0 && !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int u : frontier)
      for (int x = 0; x < N; ++x)
        if (dist[x] < 0 && intersection(verts[u], verts[x]) == 0) {
          dist[x] = d;
          next.push_back(x);
        }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  if (dist[src] < 0) return out;

  ArcSequence path{v.base(), {verts[src]}};
  for (int cur = src; cur != dst;) {
    int step = -1;
    for (int x = 0; x < N && step < 0; ++x)
      if (dist[x] == dist[cur] - 1 && intersection(verts[cur], verts[x]) == 0) step = x;
    if (step < 0) throw Error(Error::Code::internal, "bounded_search lost its way back");
    path.arcs.push_back(verts[step]);
    cur = step;
  }
  out.path = std::move(path);
  return out;
}

DistanceCertificate classify(const ArcWord& v, const ArcWord& w, std::optional<SearchLimits> search) {
  require_same_base(v, w);
  if (!embedded(v) || !embedded(w)) throw Error(Error::Code::precondition, "classify needs embedded arcs");
  DistanceCertificate c{v, w, 0, 0, 0, std::nullopt, ArcSequence{v.base(), {}}, "definition", search};
  if (v == w) {
    c.path.arcs = {v};
    return c;
  }
  c.crossings = intersection(v, w);
  if (c.crossings == 0) {
    c.lower = c.upper = 1;
    c.path.arcs = {w, v};
    return c;
  }

  const Overlay o = build_overlay(v, w);
  const auto faces = o.faces_meeting_both();
  if (!faces.empty()) {
    ArcWord u = route_through_face(o, faces.front());
    if (intersection(u, v) != 0 || intersection(u, w) != 0)
      throw Error(Error::Code::internal, "routed witness is not disjoint from both arcs");
    c.lower = c.upper = 2;
    c.witness = u;
    c.path.arcs = {w, u, v};
    c.path_source = "witness";
    return c;
  }

  c.lower = 3;
  c.path = path_between(v, w);
  c.upper = c.path.length();
  c.path_source = "surgery";
  if (search) {
    SearchResult r = bounded_search(v, w, *search);
    if (r.path && r.path->length() < c.upper) {
      if (r.path->length() < c.lower)
        throw Error(Error::Code::internal, "search found a path shorter than the face criterion allows");
      c.path = *r.path;
      c.upper = c.path.length();
      c.path_source = "search";
    }
  }
  return c;
}

std::vector<std::string> verify(const DistanceCertificate& c) {
  std::vector<std::string> bad;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  if (!same_base(c.v, c.w)) return {"v and w have different bases"};
  for (const auto& a : c.path.arcs)
    if (!same_base(a, c.v)) return {"path arc over a different base"};
  if (c.witness && !same_base(*c.witness, c.v)) return {"witness over a different base"};
  check(embedded(c.v) && embedded(c.w), "v or w is not embedded");

  const int i = intersection(c.v, c.w);
  check(c.crossings == i, "recorded crossing count " + std::to_string(c.crossings) + " but i(v,w) = " +
                              std::to_string(i));

  if (c.path.arcs.empty()) {
    bad.push_back("empty path");
  } else {
    check(c.path.arcs.front() == c.w, "path does not start at w");
    check(c.path.arcs.back() == c.v, "path does not end at v");
    check(c.path.length() == c.upper, "path length " + std::to_string(c.path.length()) + " differs from upper " +
                                          std::to_string(c.upper));
    for (std::size_t j = 1; j < c.path.arcs.size(); ++j)
      check(intersection(c.path.arcs[j - 1], c.path.arcs[j]) == 0,
            "path arcs " + std::to_string(j - 1) + " and " + std::to_string(j) + " cross");
  }

  check(c.upper >= c.lower, "upper below lower");
  switch (c.lower) {
    case 0:
      check(c.v == c.w, "distance 0 claimed for different arcs");
      break;
    case 1:
      check(!(c.v == c.w), "distance 1 claimed for equal arcs");
      break;
    case 2:
      check(i > 0, "distance 2 claimed for disjoint arcs");
      break;
    case 3:
      check(i > 0, "lower bound 3 claimed for disjoint arcs");
      if (i > 0) check(build_overlay(c.v, c.w).faces_meeting_both().empty(), "lower bound 3 claimed but some face meets both points");
      break;
    default:
      bad.push_back("unsupported lower bound " + std::to_string(c.lower));
  }
  if (c.exact() && c.lower == 2) {
    check(c.witness.has_value(), "distance 2 without a witness");
    if (c.witness)
      check(intersection(*c.witness, c.v) == 0 && intersection(*c.witness, c.w) == 0, "witness crosses v or w");
  }
  return bad;
}

PairSetResult pair_set_distance(const ShadowPairInput& input, std::optional<SearchLimits> search) {
  if (input.v_side.empty() || input.w_side.empty())
    throw Error(Error::Code::invalid_input, "shadow lists must be non-empty");
  std::optional<PairSetResult> best;
  for (std::size_t a = 0; a < input.v_side.size(); ++a)
    for (std::size_t b = 0; b < input.w_side.size(); ++b) {
      DistanceCertificate c = classify(input.v_side[a], input.w_side[b], search);
      if (!best || std::pair{c.upper, c.lower} < std::pair{best->best.upper, best->best.lower})
        best = PairSetResult{std::move(c), static_cast<int>(a), static_cast<int>(b)};
    }
  return *best;
}

}  // namespace arcdist
