#include "arcdist/surgery.hpp"

namespace arcdist {

namespace {

int p2_corner_of(const Triangulation& t, Side s) {
  return t.vertex(Corner{s.tri, s.pos}) == Vertex::P2 ? s.pos : next3(s.pos);
}

}  // namespace

SurgeryTrace surgery_step(const ArcWord& v, const ArcWord& w) {
  require_same_base(v, w);
  const int before = intersection(w, v);
  if (before == 0) throw Error(Error::Code::precondition, "surgery needs arcs that cross");

  const Overlay o = build_overlay(v, w);
  const OverlayCrossing& p = o.crossings.front();
  const Triangulation& t = o.w_frame.triangulation();
  const auto& exits = o.w_frame.crossings();
  const Side at = exits[p.w_exit];

  for (Resolution r : {Resolution::near, Resolution::far}) {
    RawArc raw;
    raw.start = o.w_frame.start_corner();
    if (r == Resolution::near) {
      raw.exits.assign(exits.begin(), exits.begin() + p.w_exit);
      raw.end = Corner{at.tri, p2_corner_of(t, at)};
    } else {
      raw.exits.assign(exits.begin(), exits.begin() + p.w_exit + 1);
      const Side across = t.twin(at);
      raw.end = Corner{across.tri, p2_corner_of(t, across)};
    }
    ArcWord result = transport_back(tighten(o.w_frame.base(), raw), o.frame.path);
    if (!embedded(result) || intersection(w, result) != 0) continue;
    const int after = intersection(result, v);
    if (after >= before) continue;
    return SurgeryTrace{v, w, p.along_w, r, std::move(result), before, after};
  }
  throw Error(Error::Code::internal, "neither resolution of the surgery satisfies its postconditions");
}

ArcSequence path_between(const ArcWord& v, const ArcWord& w) {
  require_same_base(v, w);
  ArcSequence path{w.base(), {w}};
  ArcWord cur = w;
  int left = intersection(v, cur);
  while (left > 0) {
    SurgeryTrace step = surgery_step(v, cur);
    if (step.after >= left) throw Error(Error::Code::internal, "surgery did not descend");
    cur = step.result;
    left = step.after;
    path.arcs.push_back(cur);
  }
  if (!(cur == v)) path.arcs.push_back(v);
  for (std::size_t j = 1; j < path.arcs.size(); ++j)
    if (intersection(path.arcs[j - 1], path.arcs[j]) != 0)
      throw Error(Error::Code::internal, "path step " + std::to_string(j) + " is not disjoint");
  return path;
}

}  // namespace arcdist
