#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/matching.hpp"

namespace berge {

/// Bipartite containment graph of a core set: left vertices are the
/// C(|core|,2) core pairs in lexicographic order, right vertices are the
/// edges of the hypergraph holding at least one core pair (by edge index),
/// and a pair is adjacent to an edge exactly when the edge contains both
/// endpoints. A matching saturating the left side is the same thing as a
/// Berge clique on the core.
struct IncidenceGraph {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> edge_ids;
  BipartiteGraph graph;
};

/// The pairs of a core in lexicographic order; the pair order used by
/// IncidenceGraph and BergeWitness.
std::vector<std::pair<int, int>> core_pairs(const VertexSet& core);

/// Requires core within range and |core| >= 2.
IncidenceGraph incidence_graph(const Hypergraph& h, const VertexSet& core);

/// Certificate that a hypergraph contains a Berge clique: distinct edges,
/// one per core pair, each containing its pair. edge_for_pair is parallel
/// to core_pairs(core) and holds indices into the hypergraph's edge list.
struct BergeWitness {
  VertexSet core;
  std::vector<int> edge_for_pair;
};

/// True iff the witness invariants all hold against h: core in range with
/// at least two vertices, one edge per pair, edges distinct, every edge
/// containing its pair.
bool verify_witness(const Hypergraph& h, const BergeWitness& witness);

/// Maximum matching of core pairs against edges; a witness exists iff the
/// matching saturates every pair, and absence is definitive. Requires
/// |core| >= 2.
std::optional<BergeWitness> berge_clique_on_core(const Hypergraph& h,
                                                 const VertexSet& core);

/// Scans order-sized vertex subsets in lexicographic order, attempting the
/// matching only on subsets whose pairs are all covered by some edge (the
/// pigeonhole prefilter; an uncovered pair can never be assigned). Returns
/// the first witness found, or nothing once all subsets are exhausted.
/// Requires order >= 2; order > vertex count yields nothing.
std::optional<BergeWitness> contains_berge_clique(const Hypergraph& h,
                                                  int order);

bool is_berge_free(const Hypergraph& h, int order);

/// Would adding extra_edge to h create a Berge clique of the given order?
/// Returns a witness in the grown hypergraph (edge indices refer to the
/// grown edge list). Assumes h itself is Berge-clique-free for this order:
/// under that assumption any witness in the grown hypergraph must route a
/// pair through the new edge, so the scan is restricted to cores sharing
/// at least two vertices with it. extra_edge must be a valid non-edge.
std::optional<BergeWitness> creates_berge_clique(const Hypergraph& h,
                                                 const VertexSet& extra_edge,
                                                 int order);

}  // namespace berge
