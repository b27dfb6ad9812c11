#pragma once

#include <optional>
#include <vector>

namespace berge {

/// Bipartite graph as adjacency lists from left vertices to right vertices.
struct BipartiteGraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::vector<int>> adj;  // one list per left vertex
};

struct MatchingResult {
  std::vector<int> match_left;   // matched right index, or -1
  std::vector<int> match_right;  // matched left index, or -1
  int size = 0;
};

/// Hopcroft-Karp maximum matching. Deterministic for a fixed input
/// ordering: left vertices are scanned in index order and neighbours in
/// adjacency-list order.
MatchingResult max_matching(const BipartiteGraph& g);

/// A set of left vertices whose neighbourhood is strictly smaller than the
/// set itself, certifying that no matching saturates the left side.
struct LeftViolator {
  std::vector<int> lefts;  // ascending
  int neighbourhood_size = 0;
};

/// Extracts a violator from a maximum matching that leaves some left vertex
/// unsaturated: the left vertices reachable by alternating paths from the
/// first such vertex. Their joint neighbourhood has size |lefts| - 1.
/// Returns nullopt when the matching saturates every left vertex.
std::optional<LeftViolator> hall_violator(const BipartiteGraph& g,
                                          const MatchingResult& m);

}  // namespace berge
