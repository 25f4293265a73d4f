#pragma once

#include "arcdist/overlay.hpp"

namespace arcdist {

/// How the new arc leaves w at the surgery point p: `near` turns toward P2
/// before crossing v, `far` crosses v first.
enum class Resolution { near, far };

struct SurgeryTrace {
  ArcWord v;
  ArcWord w;
  int crossing;  ///< p, counted along w from P1
  Resolution resolution;
  ArcWord result;  ///< w'
  int before;      ///< i(w, v)
  int after;       ///< i(w', v)
};

/// Cuts w at the crossing p nearest P2 on v and follows v from p to P2. The
/// result w' satisfies i(w, w') = 0 and i(w', v) < i(w, v); both are checked,
/// and the other resolution is tried if the first fails.
/// Throws Error(precondition) when v and w are disjoint.
SurgeryTrace surgery_step(const ArcWord& v, const ArcWord& w);

/// w = u_0, u_1, ..., u_m = v with consecutive arcs disjoint and
/// m <= i(v, w) + 1. Every step is re-verified before returning.
ArcSequence path_between(const ArcWord& v, const ArcWord& w);

}  // namespace arcdist
