// Exports shadow pairs on the standard genus-1 triangulation together with
// the drawing data tools/identify_knots.py needs to rebuild the knot in R^3.
//
//   arcdist_candidates MAX_LEN OUT.json
//
// Every ordered pair of distinct enumerated arcs is listed when it is disjoint
// (a torus-knot candidate, with its loop class) or classified exact(2).

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "arcdist/io.hpp"

using namespace arcdist;

namespace {

json geometry(const ArcWord& a, const std::vector<double>& fractions) {
  json crossings = json::array();
  for (int k = 0; k < a.length(); ++k) {
    const Side s = a.crossings()[k];
    const Side in = a.triangulation().twin(s);
    crossings.push_back({{"side", {s.tri, s.pos}},
                         {"entry", {in.tri, in.pos}},
                         {"plus", a.triangulation().signed_label(s) > 0},
                         {"t", fractions[k]}});
  }
  return {{"start", {a.start_corner().tri, a.start_corner().pos}},
          {"crossings", crossings},
          {"end", {a.end_corner().tri, a.end_corner().pos}}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: arcdist_candidates MAX_LEN OUT.json\n";
    return 2;
  }
  const int max_len = std::atoi(argv[1]);
  auto t = build_standard_triangulation(1);
  const auto pool = enumerate_arcs(t, max_len);
  json out{{"triangulation", to_json(*t)}, {"pairs", json::array()}};
  for (const auto& v : pool)
    for (const auto& w : pool) {
      if (v == w) continue;
      const int i = intersection(v, w);
      json rec{{"v", to_json(v)}, {"w", to_json(w)}, {"crossings", i}};
      if (i == 0) {
        rec["class"] = {loop_intersection(v, w, 1), loop_intersection(v, w, 2)};
      } else {
        auto c = classify(v, w);
        if (!(c.exact() && c.lower == 2)) continue;
        rec["distance"] = 2;
      }
      rec["v_geometry"] = geometry(v, strand_layout({v})[0]);
      rec["w_geometry"] = geometry(w, strand_layout({w})[0]);
      out["pairs"].push_back(std::move(rec));
    }
  std::ofstream(argv[2]) << out.dump(1) << "\n";
  std::cerr << pool.size() << " arcs, " << out["pairs"].size() << " pairs\n";
  return 0;
}
