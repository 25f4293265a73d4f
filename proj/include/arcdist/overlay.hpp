#pragma once

// Overlay of two arcs in minimal position.
//
// The pair is realized after flipping v onto a triangulation edge e; w is
// carried along the same flips. Every crossing of v and w is then a strand of
// w on e, and the complement of v and w is cut out of the triangles by w's
// segments, with e left unglued.

#include <vector>

#include "arcdist/arc.hpp"

namespace arcdist {

struct OverlayCrossing {
  int along_v;  ///< 0 is the crossing nearest P2 on v
  int along_w;  ///< 0 is the crossing nearest P1 on w
  int w_exit;   ///< index of the matching exit in the transported word of w
};

/// Piece of a triangle of the frame cut off by w's segments.
struct OverlayPiece {
  int tri;
  int face;
  std::vector<int> corners;  ///< corner positions of `tri` on the piece boundary
};

struct OverlayGlue {
  int a, b;   ///< pieces
  Side side;  ///< side of pieces[a].tri crossed to reach pieces[b]
};

struct OverlayFace {
  int euler = 0;
  int pieces = 0;
  bool p1 = false;
  bool p2 = false;
};

struct Overlay {
  ArcWord v;
  ArcWord w;
  Straightening frame;  ///< flips taking v's base to the frame; frame.arc is v there
  ArcWord w_frame;      ///< w transported into the frame

  std::vector<OverlayCrossing> crossings;  ///< sorted by along_v
  std::vector<OverlayPiece> pieces;
  std::vector<OverlayGlue> glue;
  std::vector<OverlayFace> faces;

  int num_vertices() const { return 2 + static_cast<int>(crossings.size()); }
  int num_edges() const { return 2 + 2 * static_cast<int>(crossings.size()); }
  /// V - E + sum of face Euler characteristics.
  int euler() const;
  /// Faces whose closure contains both marked points.
  std::vector<int> faces_meeting_both() const;
};

/// Precondition: same base, both embedded.
Overlay build_overlay(const ArcWord& v, const ArcWord& w);

/// An arc from P1 to P2 drawn inside `face`, read back over v's base. Throws
/// Error(precondition) when the face misses one of the marked points.
ArcWord route_through_face(const Overlay& o, int face);

}  // namespace arcdist
