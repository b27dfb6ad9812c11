#include "berge/detection.hpp"

#include <algorithm>
#include <stdexcept>

#include "berge/constructions.hpp"

namespace berge {

namespace {

// Position of the pair (a, b), a < b, in the lexicographic pair order of a
// core with csize members (positions, not vertex labels).
int pair_index(int a, int b, int csize) {
  return a * (2 * csize - a - 1) / 2 + (b - a - 1);
}

// cover[u][w]: some edge contains both u and w.
std::vector<std::vector<char>> pair_cover(const Hypergraph& h) {
  std::vector<std::vector<char>> cover(
      h.vertex_count(), std::vector<char>(h.vertex_count(), 0));
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        cover[e[a]][e[b]] = 1;
        cover[e[b]][e[a]] = 1;
      }
    }
  }
  return cover;
}

// Depth-first scan over cores drawn from an ascending candidate pool, in
// lexicographic order, keeping only cores whose pairs are all covered; the
// matching runs on those survivors only. `chosen` may be pre-seeded.
struct CoreScan {
  const Hypergraph& h;
  const std::vector<std::vector<char>>& cover;
  int order;
  const std::vector<int>& pool;
  std::vector<int> chosen;
  std::optional<BergeWitness> found;

  bool extend(std::size_t from) {
    if (static_cast<int>(chosen.size()) == order) {
      auto witness = berge_clique_on_core(h, VertexSet(chosen));
      if (witness) {
        found = std::move(witness);
        return true;
      }
      return false;
    }
    const std::size_t missing = order - chosen.size();
    for (std::size_t idx = from; idx + missing <= pool.size(); ++idx) {
      const int v = pool[idx];
      bool covered = true;
      for (int u : chosen) {
        if (!cover[u][v]) {
          covered = false;
          break;
        }
      }
      if (!covered) continue;
      chosen.push_back(v);
      if (extend(idx + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<std::pair<int, int>> core_pairs(const VertexSet& core) {
  const auto& v = core.members();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(v.size() * (v.size() - 1) / 2);
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      pairs.emplace_back(v[a], v[b]);
  return pairs;
}

IncidenceGraph incidence_graph(const Hypergraph& h, const VertexSet& core) {
  if (core.size() < 2)
    throw std::invalid_argument(
        "incidence_graph: core needs at least two vertices");
  for (int v : core) {
    if (v < 0 || v >= h.vertex_count())
      throw std::invalid_argument("incidence_graph: core vertex out of range");
  }

  const auto& cv = core.members();
  const int csize = static_cast<int>(cv.size());
  std::vector<int> pos(h.vertex_count(), -1);
  for (int i = 0; i < csize; ++i) pos[cv[i]] = i;

  IncidenceGraph out;
  out.pairs = core_pairs(core);
  out.graph.left_count = static_cast<int>(out.pairs.size());
  out.graph.adj.assign(out.pairs.size(), {});

  std::vector<int> hit;  // core positions inside the current edge, ascending
  for (std::size_t j = 0; j < h.edges().size(); ++j) {
    hit.clear();
    for (int v : h.edges()[j])
      if (pos[v] >= 0) hit.push_back(pos[v]);
    if (hit.size() < 2) continue;
    const int right = static_cast<int>(out.edge_ids.size());
    out.edge_ids.push_back(static_cast<int>(j));
    for (std::size_t a = 0; a < hit.size(); ++a)
      for (std::size_t b = a + 1; b < hit.size(); ++b)
        out.graph.adj[pair_index(hit[a], hit[b], csize)].push_back(right);
  }
  out.graph.right_count = static_cast<int>(out.edge_ids.size());
  return out;
}

bool verify_witness(const Hypergraph& h, const BergeWitness& witness) {
  const auto& cv = witness.core.members();
  if (cv.size() < 2) return false;
  if (cv.front() < 0 || cv.back() >= h.vertex_count()) return false;
  const auto pairs = core_pairs(witness.core);
  if (witness.edge_for_pair.size() != pairs.size()) return false;
  std::vector<char> used(h.edge_count(), 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int id = witness.edge_for_pair[p];
    if (id < 0 || id >= static_cast<int>(h.edge_count())) return false;
    if (used[id]) return false;
    used[id] = 1;
    const auto& e = h.edges()[id];
    if (!std::binary_search(e.begin(), e.end(), pairs[p].first)) return false;
    if (!std::binary_search(e.begin(), e.end(), pairs[p].second)) return false;
  }
  return true;
}

std::optional<BergeWitness> berge_clique_on_core(const Hypergraph& h,
                                                 const VertexSet& core) {
  const IncidenceGraph inc = incidence_graph(h, core);
  if (inc.graph.right_count < inc.graph.left_count) return std::nullopt;
  const MatchingResult matching = max_matching(inc.graph);
  if (matching.size != inc.graph.left_count) return std::nullopt;

  BergeWitness witness;
  witness.core = core;
  witness.edge_for_pair.resize(inc.pairs.size());
  for (std::size_t p = 0; p < inc.pairs.size(); ++p)
    witness.edge_for_pair[p] = inc.edge_ids[matching.match_left[p]];
  return witness;
}

std::optional<BergeWitness> contains_berge_clique(const Hypergraph& h,
                                                  int order) {
  if (order < 2)
    throw std::invalid_argument(
        "contains_berge_clique: order must be at least 2");
  if (order > h.vertex_count()) return std::nullopt;
  if (h.edge_count() < binomial(order, 2)) return std::nullopt;

  const auto cover = pair_cover(h);
  std::vector<int> pool(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) pool[v] = v;

  CoreScan scan{h, cover, order, pool, {}, std::nullopt};
  scan.chosen.reserve(order);
  scan.extend(0);
  return std::move(scan.found);
}

bool is_berge_free(const Hypergraph& h, int order) {
  return !contains_berge_clique(h, order).has_value();
}

std::optional<BergeWitness> creates_berge_clique(const Hypergraph& h,
                                                 const VertexSet& extra_edge,
                                                 int order) {
  if (order < 2)
    throw std::invalid_argument(
        "creates_berge_clique: order must be at least 2");
  if (static_cast<int>(extra_edge.size()) != h.uniformity())
    throw std::invalid_argument("creates_berge_clique: wrong edge size");
  Hypergraph::Edge extra(extra_edge.begin(), extra_edge.end());
  if (h.has_edge(extra))
    throw std::invalid_argument("creates_berge_clique: edge already present");

  auto edges = h.edges();
  edges.push_back(std::move(extra));
  const Hypergraph grown(h.vertex_count(), h.uniformity(), std::move(edges));
  if (order > grown.vertex_count()) return std::nullopt;
  if (grown.edge_count() < binomial(order, 2)) return std::nullopt;

  const auto cover = pair_cover(grown);
  const auto& ev = extra_edge.members();
  for (std::size_t a = 0; a < ev.size(); ++a) {
    for (std::size_t b = a + 1; b < ev.size(); ++b) {
      const int u = ev[a];
      const int w = ev[b];
      std::vector<int> pool;
      for (int v = 0; v < grown.vertex_count(); ++v)
        if (v != u && v != w && cover[v][u] && cover[v][w]) pool.push_back(v);
      if (static_cast<int>(pool.size()) < order - 2) continue;
      CoreScan scan{grown, cover, order, pool, {u, w}, std::nullopt};
      scan.chosen.reserve(order);
      if (scan.extend(0)) return std::move(scan.found);
    }
  }
  return std::nullopt;
}

}  // namespace berge
