#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcdist/surgery.hpp"

namespace arcdist {

struct SearchLimits {
  int max_len = 0;    ///< crossing length of arcs the search may visit
  int max_depth = 0;  ///< longest path considered
};

struct SearchResult {
  std::optional<ArcSequence> path;  ///< lexicographically least shortest path w -> v
  int vertices = 0;                 ///< size of the restricted vertex set
  SearchLimits limits;
};

/// Breadth-first search in the arc complex restricted to enumerate_arcs(max_len)
/// plus v and w. Sound but only complete relative to the limits.
SearchResult bounded_search(const ArcWord& v, const ArcWord& w, SearchLimits limits);
/// Same, with enumerate_arcs(base, limits.max_len) supplied by the caller.
SearchResult bounded_search(const ArcWord& v, const ArcWord& w, SearchLimits limits,
                            const std::vector<ArcWord>& pool);

/// Exact for distances 0, 1 and 2; otherwise lower = 3 and upper from the
/// best path found. All evidence can be re-checked by verify().
struct DistanceCertificate {
  ArcWord v;
  ArcWord w;
  int lower = 0;
  int upper = 0;
  int crossings = 0;              ///< i(v, w)
  std::optional<ArcWord> witness;  ///< disjoint from both, for distance 2
  ArcSequence path;               ///< w ... v realizing `upper`
  std::string path_source;        ///< "definition", "witness", "surgery" or "search"
  std::optional<SearchLimits> search;

  bool exact() const { return lower == upper; }
};

DistanceCertificate classify(const ArcWord& v, const ArcWord& w,
                             std::optional<SearchLimits> search = std::nullopt);

/// Everything wrong with the certificate, recomputed from its arcs alone.
std::vector<std::string> verify(const DistanceCertificate& c);

struct ShadowPairInput {
  std::vector<ArcWord> v_side;
  std::vector<ArcWord> w_side;
};

struct PairSetResult {
  DistanceCertificate best;
  int v_index = 0;
  int w_index = 0;
};

/// Minimum over all listed pairs, ordered by upper bound, then lower bound,
/// then list position. Over finite lists this bounds the knot invariant from
/// above only. Throws Error(invalid_input) on an empty list.
PairSetResult pair_set_distance(const ShadowPairInput& input,
                                std::optional<SearchLimits> search = std::nullopt);

}  // namespace arcdist
