#pragma once

// Internal: realization of several normal arcs on one triangulation, with the
// order of their strands along every edge.

#include <utility>
#include <vector>

#include "arcdist/arc.hpp"

namespace arcdist::detail {

/// Location inside a triangle: 0..2 is a side, 3..5 is corner (loc - 3).
constexpr int kCorner = 3;
inline bool is_corner(int loc) { return loc >= kCorner; }

struct Visit {
  int tri;
  int in;
  int out;
};

std::vector<Visit> visits(const Triangulation& t, const RawArc& raw);

class StrandOrder {
 public:
  StrandOrder(const Triangulation& t, std::vector<const RawArc*> arcs);

  /// (arc, crossing index) pairs crossing `edge`, listed along its + side.
  const std::vector<std::pair<int, int>>& along(int edge) const { return along_[edge]; }
  /// Index of the strand along side `s`, counted from the side's start corner.
  int position(Side s, int arc, int strand) const;

  /// Minimal number of crossings between arcs a and b, ignoring shared
  /// endpoints (a == b counts self-crossings).
  int crossings(int a, int b) const;

  const std::vector<Visit>& arc_visits(int arc) const { return visits_[arc]; }
  int rank(int arc, int strand) const { return rank_[arc][strand]; }

 private:
  int compare(int arc_a, int ia, int arc_b, int ib, int edge) const;
  int walk(int arc_a, int ia, bool fwd_a, int arc_b, int ib, bool fwd_b) const;
  bool first_turns_differ(int arc_a, int ia, bool fwd_a, int arc_b, int ib, bool fwd_b) const;
  bool forward_into_plus(int arc, int strand, int edge) const;

  const Triangulation& tri_;
  std::vector<const RawArc*> arcs_;
  std::vector<std::vector<Visit>> visits_;
  std::vector<std::vector<std::pair<int, int>>> along_;
  std::vector<std::vector<int>> rank_;
};

}  // namespace arcdist::detail
