#include "arcdist/leveling.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace arcdist {

namespace {

Stub stub_at_p(const ArcWord& a) {
  if (a.is_edge()) return {a.start_corner(), std::nullopt};
  return {a.start_corner(), a.crossings().front()};
}

Stub stub_at_q(const ArcWord& a) {
  if (a.is_edge()) return {a.end_corner(), std::nullopt};
  return {a.end_corner(), a.triangulation().twin(a.crossings().back())};
}

// Strands each level must carry, in the order of the construction.
std::vector<Strand> expected_level(int n, int level) {
  using K = StrandKind;
  if (n == 1) return {{K::arc, 0, 1}, {K::arc, 1, 1}};
  if (level == 1) return {{K::arc, 0, 1}, {K::alpha, 1, 1}, {K::beta, 1, 1}};
  if (level == n) return {{K::arc, n, n}, {K::alpha, n - 1, n}, {K::beta, n - 1, n}};
  return {{K::alpha, level - 1, level}, {K::alpha, level, level}, {K::beta, level - 1, level}, {K::beta, level, level}};
}

// Endpoint of a segment: (point, index, level) where point 0 is p, 1 is q,
// 2 is p_j and 3 is q_j.
using Point = std::tuple<int, int, int>;

std::pair<Point, Point> ends(const Strand& s) {
  switch (s.kind) {
    case StrandKind::arc:
      return {{0, 0, s.level}, {1, 0, s.level}};
    case StrandKind::alpha:
      return {{0, 0, s.level}, {2, s.index, s.level}};
    case StrandKind::beta:
      return {{1, 0, s.level}, {3, s.index, s.level}};
    case StrandKind::p_vertical:
      return {{2, s.index, s.index}, {2, s.index, s.index + 1}};
    case StrandKind::q_vertical:
      return {{3, s.index, s.index}, {3, s.index, s.index + 1}};
  }
  return {};
}

bool less_strand(const Strand& a, const Strand& b) {
  return std::tuple{static_cast<int>(a.kind), a.index, a.level} < std::tuple{static_cast<int>(b.kind), b.index, b.level};
}

// Connected components of a set of segments glued at shared endpoints.
int components(const std::vector<Strand>& segs) {
  std::vector<int> parent(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<Point, int> seen;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto [a, b] = ends(segs[i]);
    for (const Point& pt : {a, b}) {
      auto [it, fresh] = seen.emplace(pt, static_cast<int>(i));
      if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
    }
  }
  int count = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) count += find(static_cast<int>(i)) == static_cast<int>(i);
  return count;
}

}  // namespace

std::string strand_name(const Strand& s) {
  const std::string j = std::to_string(s.index);
  const std::string at = "@" + std::to_string(s.level);
  switch (s.kind) {
    case StrandKind::arc:
      return "s_" + j + at;
    case StrandKind::alpha:
      return "alpha_" + j + at;
    case StrandKind::beta:
      return "beta_" + j + at;
    case StrandKind::p_vertical:
      return "p_" + j;
    case StrandKind::q_vertical:
      return "q_" + j;
  }
  return "?";
}

std::vector<SequenceViolation> validate_sequence(const ArcSequence& s) {
  std::vector<SequenceViolation> out;
  if (!s.base) return {{0, "missing base triangulation"}};
  for (std::size_t j = 0; j < s.arcs.size(); ++j)
    if (!(s.arcs[j].triangulation() == *s.base)) out.push_back({static_cast<int>(j), "arc over a different base"});
  if (!out.empty()) return out;
  for (std::size_t j = 0; j < s.arcs.size(); ++j)
    if (!embedded(s.arcs[j])) out.push_back({static_cast<int>(j), "arc is not embedded"});
  for (std::size_t j = 1; j < s.arcs.size(); ++j) {
    const int k = intersection(s.arcs[j - 1], s.arcs[j]);
    if (k != 0)
      out.push_back({static_cast<int>(j), "arcs " + std::to_string(j - 1) + " and " + std::to_string(j) + " cross " +
                                              std::to_string(k) + " times"});
  }
  return out;
}

int LevelPosition::surface_genus() const {
  // n copies of F, two discs removed per tube, annuli glued in.
  const int g = base->genus();
  const int chi = static_cast<int>(levels.size()) * (2 - 2 * g) - 2 * static_cast<int>(tubes.size());
  return (2 - chi) / 2;
}

std::vector<std::string> validate_level_position(const LevelPosition& L) {
  std::vector<std::string> bad;
  if (!L.base) return {"missing base triangulation"};
  if (L.n < 1) return {"need at least one level"};
  if (L.level_arcs.size() != 2) return {"need the arcs of the first and last level"};
  for (const auto& a : L.level_arcs)
    if (!(a.triangulation() == *L.base)) return {"level arc over a different base"};
  for (const auto& t : L.tubes)
    if (!(t.core.triangulation() == *L.base)) return {"tube core over a different base"};

  if (static_cast<int>(L.levels.size()) != L.n) bad.push_back("level count differs from n");
  if (static_cast<int>(L.tubes.size()) != L.n - 1) bad.push_back("tube count differs from n - 1");
  if (!bad.empty()) return bad;

  for (int l = 1; l <= L.n; ++l) {
    const Level& level = L.levels[l - 1];
    if (level.index != l) bad.push_back("level " + std::to_string(l) + " has index " + std::to_string(level.index));
    auto have = level.strands, want = expected_level(L.n, l);
    std::sort(have.begin(), have.end(), less_strand);
    std::sort(want.begin(), want.end(), less_strand);
    if (have != want) bad.push_back("level " + std::to_string(l) + " carries the wrong strands");
    const int pieces = components(level.strands);
    const int expect = (l == 1 || l == L.n) ? 1 : 2;
    if (pieces != expect)
      bad.push_back("level " + std::to_string(l) + " has " + std::to_string(pieces) + " arcs of the knot, expected " +
                    std::to_string(expect));
  }

  std::vector<const ArcWord*> chain{&L.level_arcs[0]};
  for (int j = 1; j <= L.n - 1; ++j) {
    const Tube& t = L.tubes[j - 1];
    if (t.index != j) bad.push_back("tube " + std::to_string(j) + " has index " + std::to_string(t.index));
    if (!(t.alpha == stub_at_p(t.core))) bad.push_back("tube " + std::to_string(j) + ": alpha stub is not the core's end at p");
    if (!(t.beta == stub_at_q(t.core))) bad.push_back("tube " + std::to_string(j) + ": beta stub is not the core's end at q");
    chain.push_back(&t.core);
  }
  chain.push_back(&L.level_arcs[1]);
  for (std::size_t j = 0; j < chain.size(); ++j)
    if (!embedded(*chain[j])) bad.push_back("arc " + std::to_string(j) + " is not embedded");
  for (std::size_t j = 1; j < chain.size(); ++j)
    if (intersection(*chain[j - 1], *chain[j]) != 0)
      bad.push_back("arcs " + std::to_string(j - 1) + " and " + std::to_string(j) + " cross");

  // The knot: all segments, glued at their endpoints, form one closed cycle.
  std::vector<Strand> all;
  for (const auto& level : L.levels) all.insert(all.end(), level.strands.begin(), level.strands.end());
  for (int j = 1; j <= L.n - 1; ++j) {
    all.push_back({StrandKind::p_vertical, j, j});
    all.push_back({StrandKind::q_vertical, j, j});
  }
  std::map<Point, int> degree;
  for (const auto& s : all) {
    auto [a, b] = ends(s);
    ++degree[a];
    ++degree[b];
  }
  for (const auto& [pt, d] : degree)
    if (d != 2) {
      bad.push_back("a knot endpoint meets " + std::to_string(d) + " segments");
      break;
    }
  if (components(all) != 1) bad.push_back("segments do not form a single closed curve");

  if (L.cycle.size() != all.size()) {
    bad.push_back("cycle lists " + std::to_string(L.cycle.size()) + " segments, expected " + std::to_string(all.size()));
  } else {
    auto sorted_cycle = L.cycle;
    std::sort(sorted_cycle.begin(), sorted_cycle.end(), less_strand);
    std::sort(all.begin(), all.end(), less_strand);
    if (sorted_cycle != all) bad.push_back("cycle does not list each segment once");
    for (std::size_t k = 0; k < L.cycle.size(); ++k) {
      auto [a1, b1] = ends(L.cycle[k]);
      auto [a2, b2] = ends(L.cycle[(k + 1) % L.cycle.size()]);
      if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) {
        bad.push_back("cycle breaks after " + strand_name(L.cycle[k]));
        break;
      }
    }
  }

  if (L.surface_genus() != L.base->genus() * L.n)
    bad.push_back("tubed surface has genus " + std::to_string(L.surface_genus()));
  return bad;
}

LevelPosition arcs_to_leveling(const ArcSequence& s) {
  auto problems = validate_sequence(s);
  if (!problems.empty())
    throw Error(Error::Code::invalid_input, "invalid arc sequence at " + std::to_string(problems.front().index) + ": " +
                                                problems.front().what);
  const int n = s.length();
  if (n < 1) throw Error(Error::Code::invalid_input, "a level position needs at least two arcs");

  using K = StrandKind;
  LevelPosition L;
  L.base = s.base;
  L.n = n;
  L.level_arcs = {s.arcs.front(), s.arcs.back()};
  for (int l = 1; l <= n; ++l) L.levels.push_back({l, expected_level(n, l)});
  for (int j = 1; j <= n - 1; ++j) L.tubes.push_back({j, s.arcs[j], stub_at_p(s.arcs[j]), stub_at_q(s.arcs[j])});

  // Along s_0 from p to q, up the q side, back along s_n and down the p side.
  if (n == 1) {
    L.cycle = {{K::arc, 0, 1}, {K::arc, 1, 1}};
  } else {
    L.cycle.push_back({K::arc, 0, 1});
    for (int j = 1; j <= n - 1; ++j) {
      L.cycle.push_back({K::beta, j, j});
      L.cycle.push_back({K::q_vertical, j, j});
      L.cycle.push_back({K::beta, j, j + 1});
    }
    L.cycle.push_back({K::arc, n, n});
    for (int j = n - 1; j >= 1; --j) {
      L.cycle.push_back({K::alpha, j, j + 1});
      L.cycle.push_back({K::p_vertical, j, j});
      L.cycle.push_back({K::alpha, j, j});
    }
  }

  auto bad = validate_level_position(L);
  if (!bad.empty()) throw Error(Error::Code::internal, "constructed level position is invalid: " + bad.front());
  return L;
}

ArcSequence leveling_to_arc_sequence(const LevelPosition& L) {
  auto bad = validate_level_position(L);
  if (!bad.empty()) throw Error(Error::Code::invalid_input, "invalid level position: " + bad.front());
  ArcSequence s{L.base, {L.level_arcs[0]}};
  for (const auto& t : L.tubes) s.arcs.push_back(t.core);
  s.arcs.push_back(L.level_arcs[1]);
  if (!validate_sequence(s).empty()) throw Error(Error::Code::internal, "level position gave an invalid sequence");
  return s;
}

LevelReport level_number_report(const ShadowPairInput& input, std::optional<SearchLimits> search) {
  LevelReport r{pair_set_distance(input, search), std::nullopt, 0, 0, false, {}};
  const DistanceCertificate& c = r.distance.best;
  r.lower = c.lower;
  r.upper = c.upper;
  if (c.upper == 0) {
    r.trivial_knot = true;
    r.notes.push_back("equal shadows: arc distance 0, which only the trivial knot has; no level position is defined");
  } else {
    // The path runs from the W-side shadow to the V-side one; the leveling
    // starts at the V side.
    ArcSequence seq = c.path;
    std::reverse(seq.arcs.begin(), seq.arcs.end());
    r.certificate = arcs_to_leveling(seq);
    r.notes.push_back("level number equals arc distance for a nontrivial knot");
    if (!c.exact())
      r.notes.push_back("distance is only bounded; the level position gives the upper bound");
  }
  r.notes.push_back("minimum taken over the supplied shadow lists only; an upper bound for the knot unless the lists are complete");
  return r;
}

int proposition_bound(const ArcWord& v, const ArcWord& w) {
  const int bound = intersection(v, w) + 1;
  if (path_between(v, w).length() > bound)
    throw Error(Error::Code::internal, "surgery path longer than i(v,w) + 1");
  return bound;
}

}  // namespace arcdist
