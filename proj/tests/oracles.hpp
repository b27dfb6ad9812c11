#pragma once

// Reference implementations used only by the tests.  Each one is written in
// the most transparent style available (memoised enumeration or plain
// backtracking) and shares no logic with the library, so agreement between
// the two is meaningful evidence rather than a tautology.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/matching.hpp"

namespace oracle {

// Maximum bipartite matching by dynamic programming over the set of used
// right vertices.  Exact for right_count <= 20; no augmenting paths involved.
inline int max_matching_size(const berge::BipartiteGraph& g) {
  if (g.right_count > 20) {
    throw std::invalid_argument("oracle matching supports right_count <= 20");
  }
  const std::size_t masks = std::size_t{1} << g.right_count;
  std::vector<std::vector<int>> memo(g.left_count + 1,
                                     std::vector<int>(masks, -1));
  std::function<int(int, std::uint32_t)> go = [&](int left,
                                                  std::uint32_t used) -> int {
    if (left == g.left_count) return 0;
    int& slot = memo[left][used];
    if (slot >= 0) return slot;
    int best = go(left + 1, used);
    for (int right : g.adj[left]) {
      if (used >> right & 1u) continue;
      best = std::max(best, 1 + go(left + 1, used | (1u << right)));
    }
    return slot = best;
  };
  return go(0, 0);
}

namespace detail {

inline bool edge_has(const std::vector<int>& edge, int v) {
  return std::binary_search(edge.begin(), edge.end(), v);
}

// Try to assign each core pair its own edge, backtracking over edges.
inline bool assign_pairs(const berge::Hypergraph& h,
                         const std::vector<std::pair<int, int>>& pairs,
                         std::size_t at, std::vector<char>& used) {
  if (at == pairs.size()) return true;
  const auto [u, w] = pairs[at];
  for (std::size_t j = 0; j < h.edges().size(); ++j) {
    if (used[j]) continue;
    const auto& e = h.edges()[j];
    if (!edge_has(e, u) || !edge_has(e, w)) continue;
    used[j] = 1;
    if (assign_pairs(h, pairs, at + 1, used)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace detail

// Direct Berge-clique test: enumerate every candidate core and search for an
// injective pair -> edge assignment by brute force.  The only shortcuts are
// ones that are sound by definition (fewer edges than pairs means no
// injection can exist, and a pair covered by no edge can never be assigned).
inline bool contains_berge_clique(const berge::Hypergraph& h, int order) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  if (order > h.vertex_count()) return false;
  const std::uint64_t need = static_cast<std::uint64_t>(order) *
                             static_cast<std::uint64_t>(order - 1) / 2;
  if (h.edge_count() < need) return false;

  std::vector<int> core;
  std::function<bool(int)> pick = [&](int from) -> bool {
    if (static_cast<int>(core.size()) == order) {
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < core.size(); ++i) {
        for (std::size_t j = i + 1; j < core.size(); ++j) {
          pairs.emplace_back(core[i], core[j]);
        }
      }
      for (const auto& [u, w] : pairs) {
        bool covered = false;
        for (const auto& e : h.edges()) {
          if (detail::edge_has(e, u) && detail::edge_has(e, w)) {
            covered = true;
            break;
          }
        }
        if (!covered) return false;
      }
      std::vector<char> used(h.edge_count(), 0);
      return detail::assign_pairs(h, pairs, 0, used);
    }
    const int slack = order - static_cast<int>(core.size());
    for (int v = from; v <= h.vertex_count() - slack; ++v) {
      core.push_back(v);
      if (pick(v + 1)) return true;
      core.pop_back();
    }
    return false;
  };
  return pick(0);
}

struct ExtremalCount {
  int max_edges = 0;
  std::uint64_t extremal_count = 0;
};

// Extremal numbers by raw subset enumeration: walk edge subsets in
// descending size and report the first size admitting a free hypergraph,
// together with how many free hypergraphs of that size exist.
inline ExtremalCount extremal_by_subsets(int vertex_count, int order,
                                         int uniformity) {
  std::vector<std::vector<int>> candidates;
  std::vector<int> pick;
  std::function<void(int)> gen = [&](int from) {
    if (static_cast<int>(pick.size()) == uniformity) {
      candidates.push_back(pick);
      return;
    }
    for (int v = from; v < vertex_count; ++v) {
      pick.push_back(v);
      gen(v + 1);
      pick.pop_back();
    }
  };
  gen(0);
  if (candidates.size() > 20) {
    throw std::invalid_argument("oracle search supports at most 20 edges");
  }

  const std::uint32_t all = (1u << candidates.size()) - 1u;
  for (int size = static_cast<int>(candidates.size()); size >= 0; --size) {
    std::uint64_t hits = 0;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<std::vector<int>> edges;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (mask >> i & 1u) edges.push_back(candidates[i]);
      }
      berge::Hypergraph h(vertex_count, uniformity, edges);
      if (!oracle::contains_berge_clique(h, order)) ++hits;
    }
    if (hits > 0) return {size, hits};
  }
  return {0, 1};
}

// Uniform random hypergraph: every possible edge joins independently.
inline berge::Hypergraph random_hypergraph(std::mt19937_64& rng,
                                           int vertex_count, int uniformity,
                                           double edge_probability) {
  std::bernoulli_distribution keep(edge_probability);
  std::vector<std::vector<int>> edges;
  std::vector<int> pick;
  std::function<void(int)> gen = [&](int from) {
    if (static_cast<int>(pick.size()) == uniformity) {
      if (keep(rng)) edges.push_back(pick);
      return;
    }
    for (int v = from; v < vertex_count; ++v) {
      pick.push_back(v);
      gen(v + 1);
      pick.pop_back();
    }
  };
  gen(0);
  return berge::Hypergraph(vertex_count, uniformity, edges);
}

inline berge::BipartiteGraph random_bipartite(std::mt19937_64& rng,
                                              int left_count, int right_count,
                                              double edge_probability) {
  std::bernoulli_distribution keep(edge_probability);
  berge::BipartiteGraph g;
  g.left_count = left_count;
  g.right_count = right_count;
  g.adj.assign(left_count, {});
  for (int l = 0; l < left_count; ++l) {
    for (int r = 0; r < right_count; ++r) {
      if (keep(rng)) g.adj[l].push_back(r);
    }
  }
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
