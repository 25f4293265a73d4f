#pragma once

// Level positions of a (g,1)-knot and their arc sequences.
//
// A sequence s_0, ..., s_n of arcs (consecutive ones disjoint) gives a knot on
// n parallel copies F_1..F_n of the surface joined by n-1 tubes T_j around the
// middle of s_j. Near the marked points p = P1 and q = P2 each s_j contributes
// stubs alpha_j (at p) and beta_j (at q); the tube T_j carries the vertical
// strands over their outer ends p_j and q_j.

#include <optional>
#include <string>
#include <vector>

#include "arcdist/distance.hpp"

namespace arcdist {

struct SequenceViolation {
  int index;  ///< position of the later arc of the offending pair (0 for base problems)
  std::string what;
};

/// Consecutive disjointness and a common base. Empty means valid.
std::vector<SequenceViolation> validate_sequence(const ArcSequence& s);

enum class StrandKind { arc, alpha, beta, p_vertical, q_vertical };

/// One segment of the knot. `level` is the copy F_level it lies on; vertical
/// strands use the lower level of their tube (tube j joins levels j and j+1).
struct Strand {
  StrandKind kind;
  int index;
  int level;

  bool operator==(const Strand&) const = default;
};

std::string strand_name(const Strand& s);

/// End segment of a tube core inside the neighbourhood of a marked point: the
/// corner it leaves from and the first side it crosses (none for an edge).
struct Stub {
  Corner corner;
  std::optional<Side> side;

  bool operator==(const Stub&) const = default;
};

struct Tube {
  int index;  ///< j, joining levels j and j+1
  ArcWord core;
  Stub alpha;  ///< at p
  Stub beta;   ///< at q
};

struct Level {
  int index;
  std::vector<Strand> strands;
};

struct LevelPosition {
  TriangulationPtr base;
  int n = 0;
  std::vector<ArcWord> level_arcs;  ///< s_0 on level 1 and s_n on level n
  std::vector<Level> levels;
  std::vector<Tube> tubes;
  std::vector<Strand> cycle;  ///< the knot, as a closed sequence of segments

  /// Genus of the tubed surface G, from its Euler characteristic.
  int surface_genus() const;
};

/// Every violated invariant: level contents, tube count, strand cycle,
/// genus of G and disjointness of the arcs involved.
std::vector<std::string> validate_level_position(const LevelPosition& L);

/// Requires a valid sequence with at least two arcs.
LevelPosition arcs_to_leveling(const ArcSequence& s);
/// (s_0, tube cores in order, s_n); requires a valid level position.
ArcSequence leveling_to_arc_sequence(const LevelPosition& L);

struct LevelReport {
  PairSetResult distance;
  std::optional<LevelPosition> certificate;  ///< absent for distance 0
  int lower = 0;
  int upper = 0;
  bool trivial_knot = false;
  std::vector<std::string> notes;
};

/// Arc distance over the shadow lists restated as a level number, with a
/// level position built from the realizing path.
LevelReport level_number_report(const ShadowPairInput& input, std::optional<SearchLimits> search = std::nullopt);

/// i(v, w) + 1. Shadows meeting in m points (the two endpoints included)
/// give a level position with at most m - 1 levels; checked against
/// path_between.
int proposition_bound(const ArcWord& v, const ArcWord& w);

}  // namespace arcdist
