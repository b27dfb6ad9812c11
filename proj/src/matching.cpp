#include "berge/matching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace berge {

namespace {

void validate(const BipartiteGraph& g) {
  if (g.left_count < 0 || g.right_count < 0 ||
      g.adj.size() != static_cast<std::size_t>(g.left_count)) {
    throw std::invalid_argument("BipartiteGraph: inconsistent sizes");
  }
  for (const auto& row : g.adj) {
    for (int v : row) {
      if (v < 0 || v >= g.right_count) {
        throw std::invalid_argument("BipartiteGraph: right index out of range");
      }
    }
  }
}

struct HopcroftKarp {
  const BipartiteGraph& g;
  std::vector<int> match_left, match_right, dist;

  explicit HopcroftKarp(const BipartiteGraph& graph)
      : g(graph),
        match_left(graph.left_count, -1),
        match_right(graph.right_count, -1),
        dist(graph.left_count, -1) {}

  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < g.left_count; ++u) {
      if (match_left[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = -1;
      }
    }
    bool free_right_reachable = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u]) {
        int w = match_right[v];
        if (w == -1) {
          free_right_reachable = true;
        } else if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return free_right_reachable;
  }

  bool dfs(int u) {
    for (int v : g.adj[u]) {
      int w = match_right[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  }

  MatchingResult run() {
    int size = 0;
    while (bfs()) {
      for (int u = 0; u < g.left_count; ++u) {
        if (match_left[u] == -1 && dfs(u)) ++size;
      }
    }
    return MatchingResult{std::move(match_left), std::move(match_right), size};
  }
};

}  // namespace

MatchingResult max_matching(const BipartiteGraph& g) {
  validate(g);
  return HopcroftKarp(g).run();
}

std::optional<LeftViolator> hall_violator(const BipartiteGraph& g,
                                          const MatchingResult& m) {
  int start = -1;
  for (int u = 0; u < g.left_count; ++u) {
    if (m.match_left[u] == -1) {
      start = u;
      break;
    }
  }
  if (start == -1) return std::nullopt;

  // Alternating BFS: unmatched edges leftwards-out, matched edges back.
  // At a maximum matching every reachable right vertex is matched, and its
  // partner accounts for one left vertex, so |lefts| exceeds the
  // neighbourhood by exactly the unsaturated start vertex.
  std::vector<char> seen_left(g.left_count, 0), seen_right(g.right_count, 0);
  std::queue<int> q;
  seen_left[start] = 1;
  q.push(start);
  int neighbourhood = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u]) {
      if (seen_right[v]) continue;
      seen_right[v] = 1;
      ++neighbourhood;
      int w = m.match_right[v];
      if (w != -1 && !seen_left[w]) {
        seen_left[w] = 1;
        q.push(w);
      }
    }
  }
  LeftViolator out;
  for (int u = 0; u < g.left_count; ++u) {
    if (seen_left[u]) out.lefts.push_back(u);
  }
  out.neighbourhood_size = neighbourhood;
  return out;
}

}  // namespace berge
