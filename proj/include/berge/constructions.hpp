#pragma once

#include <cstdint>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

/// C(a, b) in checked 64-bit arithmetic; 0 when b < 0 or a < b.
/// Throws std::overflow_error past 64 bits instead of wrapping.
std::uint64_t binomial(long long a, long long b);

/// Number of r-sets that pick at most one vertex from each part, i.e. the
/// elementary symmetric polynomial of degree r in the part sizes.
std::uint64_t transversal_count(const std::vector<int>& part_sizes, int r);

/// Edge count of the balanced complete r-uniform k-partite hypergraph on
/// N vertices, evaluated from the closed form in exact integer arithmetic.
std::uint64_t turan_count(int vertex_count, int parts, int uniformity);

/// Ordered partition of 0..N-1 into independent parts.
struct PartiteStructure {
  std::vector<VertexSet> parts;

  std::vector<int> sizes() const;
  /// Any two part sizes differ by at most one.
  bool balanced() const;
};

struct TuranConstruction {
  Hypergraph hypergraph;
  PartiteStructure partition;
};

/// Balanced complete r-uniform k-partite hypergraph. Larger parts come
/// first and occupy the lowest vertex indices; vertices fill the parts in
/// increasing order, so the layout is deterministic.
TuranConstruction build_turan_partite(int vertex_count, int parts,
                                      int uniformity);

/// All r-subsets of 0..N-1.
Hypergraph build_complete(int vertex_count, int uniformity);

/// The complete 2-graph on core vertices 0..n-1 with every edge enlarged by
/// r-2 fresh vertices; enlargement sets are pairwise disjoint and disjoint
/// from the core. (r-2)*C(n,2)+n vertices, C(n,2) edges.
Hypergraph build_expansion(int core_order, int uniformity);

}  // namespace berge
