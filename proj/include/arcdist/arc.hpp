#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arcdist/surface.hpp"

namespace arcdist {

/// An unreduced path from a P1 corner to a P2 corner: it leaves the start
/// triangle through exits[0], enters the neighbour, leaves through exits[1],
/// and so on, ending at `end` in the last triangle entered.
struct RawArc {
  Corner start;
  std::vector<Side> exits;
  Corner end;

  bool operator==(const RawArc&) const = default;
};

/// Throws Error(invalid_input) unless consecutive pieces share a triangle and
/// the endpoints sit at P1 and P2.
void check_consistent(const Triangulation& t, const RawArc& raw);

/// Isotopy class of an embedded arc from P1 to P2, stored as its reduced
/// (normal) crossing word over a fixed triangulation. Two ArcWords over equal
/// triangulations are isotopic exactly when they compare equal.
class ArcWord {
 public:
  const TriangulationPtr& base() const noexcept { return base_; }
  const Triangulation& triangulation() const noexcept { return *base_; }
  Corner start_corner() const noexcept { return word_.start; }
  Corner end_corner() const noexcept { return word_.end; }
  const std::vector<Side>& crossings() const noexcept { return word_.exits; }
  int length() const noexcept { return static_cast<int>(word_.exits.size()); }
  bool is_edge() const noexcept { return word_.exits.empty(); }
  /// Edge label when is_edge(); 0 otherwise.
  int edge() const;
  const RawArc& raw() const noexcept { return word_; }
  /// Number of crossings with the given edge label.
  int crossings_of(int edge) const;

  /// Compact key usable for ordering and hashing; base not included.
  std::vector<int> key() const;

  bool operator==(const ArcWord& other) const;

 private:
  friend ArcWord tighten(TriangulationPtr, RawArc);
  ArcWord(TriangulationPtr base, RawArc word) : base_(std::move(base)), word_(std::move(word)) {}

  TriangulationPtr base_;
  RawArc word_;
};

/// Path in the arc complex: arcs over one base, meant to be pairwise disjoint
/// when consecutive. Checked by validate_sequence, not on construction.
struct ArcSequence {
  TriangulationPtr base;
  std::vector<ArcWord> arcs;

  /// Number of steps (arcs.size() - 1).
  int length() const { return static_cast<int>(arcs.size()) - 1; }
};

bool same_base(const ArcWord& a, const ArcWord& b);
void require_same_base(const ArcWord& a, const ArcWord& b);

/// Removes spurs (crossing an edge and immediately back) and corner bigons
/// (a first or last segment running into a side adjacent to its endpoint)
/// until none remain. The result is the canonical word of the isotopy class.
ArcWord tighten(TriangulationPtr base, RawArc raw);

/// The arc running along a triangulation edge joining P1 and P2.
ArcWord edge_arc(TriangulationPtr base, int edge);

/// Rewrites `a` across the flip of `edge`. `flipped` must equal flip(base, edge);
/// pass it when already built so several arcs share one base object.
ArcWord transport(const ArcWord& a, int edge);
ArcWord transport(const ArcWord& a, int edge, TriangulationPtr flipped);

/// Sequence of triangulations reached by flipping `flips` in order from `start`.
struct FlipPath {
  std::vector<int> flips;
  std::vector<TriangulationPtr> bases;  ///< bases.size() == flips.size() + 1

  static FlipPath walk(TriangulationPtr start, std::span<const int> flips);
  const TriangulationPtr& start() const { return bases.front(); }
  const TriangulationPtr& finish() const { return bases.back(); }
};

ArcWord transport_along(const ArcWord& a, const FlipPath& path);
/// Transports an arc over path.finish() back to path.start().
ArcWord transport_back(const ArcWord& a, const FlipPath& path);

/// Minimal number of transverse self-crossings; 0 iff the word is embedded.
int self_intersection(const ArcWord& a);
inline bool embedded(const ArcWord& a) { return self_intersection(a) == 0; }

/// Minimal number of interior crossings between representatives. Counted
/// combinatorially: parallel runs of strands that swap sides, plus segments
/// that cross inside a triangle.
int intersection(const ArcWord& v, const ArcWord& w);

struct Straightening {
  FlipPath path;
  int edge = 0;         ///< label of the edge v becomes in path.finish()
  ArcWord arc;          ///< transported v, equal to edge_arc(path.finish(), edge)
};

/// Flips edges crossed by v until v is a triangulation edge. Greedy on the
/// total crossing count; throws Error(internal) if the iteration cap is hit.
Straightening straighten_to_edge(const ArcWord& v);

/// Intersection through the flip route: straighten v, transport w along the
/// same flips and count its crossings with v's edge. Independent of the
/// strand ordering used by intersection().
int intersection_by_flips(const ArcWord& v, const ArcWord& w);

/// Drawing data for arcs over one base: crossing k of arcs[j] sits on the +
/// side of its edge at fraction result[j][k] from that side's start corner.
/// An embedded arc, or a family of pairwise disjoint arcs, draws without
/// crossings when consecutive points are joined by chords.
std::vector<std::vector<double>> strand_layout(const std::vector<ArcWord>& arcs);

/// Algebraic intersection of the closed loop "v, then w backwards" with
/// `edge`, which must join P1 to itself. The loop is closed near P1 by
/// turning from w's start corner to v's start corner; the sense of turning
/// does not matter. Signs: + when leaving a triangle through a side whose
/// label is positive.
int loop_intersection(const ArcWord& v, const ArcWord& w, int edge);

/// Deterministic 64-bit generator; identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

/// Random walk of `steps` flips, pick a P1-P2 edge at the end and carry it
/// back to `base`. Always embedded and reduced.
ArcWord random_arc(TriangulationPtr base, std::uint64_t seed, int steps);

/// All embedded canonical arcs with at most max_len crossings, ordered by
/// length then key.
std::vector<ArcWord> enumerate_arcs(TriangulationPtr base, int max_len);

}  // namespace arcdist
