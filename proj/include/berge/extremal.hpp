#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/constructions.hpp"
#include "berge/detection.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// Outcome of testing edge-maximality: whether the hypergraph is free of
/// Berge cliques of the given order, and which absent edges can be added
/// without creating one. Saturated means free and no such safe edge exists.
struct SaturationReport {
  bool free = false;
  bool saturated = false;
  std::vector<VertexSet> creating;      // absent edges whose addition traps
  std::vector<VertexSet> non_creating;  // absent edges that stay free
  std::optional<BergeWitness> witness;  // clique already present when !free
};

/// Tries every absent r-set. When the input already contains a Berge clique
/// the per-edge scan is skipped (its restricted core search would be
/// unsound) and the witness is returned instead. jobs > 1 splits the absent
/// edges across threads; results are merged in edge order, so output is
/// identical for any job count.
SaturationReport saturation_check(const Hypergraph& h, int order,
                                  int jobs = 1);

/// Recovers the partition of a complete multipartite hypergraph from the
/// co-occurrence relation (u ~ w iff no edge contains both). Succeeds iff
/// that relation is an equivalence and every r-set meeting each class at
/// most once is an edge; edgeless input is degenerate (the relation lumps
/// everything together) and yields nothing. Parts are ordered by
/// decreasing size, ties by smallest member.
std::optional<PartiteStructure> recognize_complete_partite(
    const Hypergraph& h);

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0.0;     // 0 = unlimited
};

class BudgetExceededError : public std::runtime_error {
 public:
  enum class Kind { nodes, wall_clock };

  BudgetExceededError(Kind kind, std::uint64_t nodes_visited);

  Kind kind() const { return kind_; }
  std::uint64_t nodes_visited() const { return nodes_visited_; }

 private:
  Kind kind_;
  std::uint64_t nodes_visited_;
};

struct SearchResult {
  int max_edges = 0;
  std::uint64_t extremal_count = 0;  // labelled graphs; classes when folded
  std::vector<Hypergraph> samples;   // re-verified free before returning
  std::uint64_t nodes_visited = 0;
  bool folded = false;
};

/// Exact maximum edge count over all Berge-clique-free r-graphs on the
/// given vertices, by depth-first search over the lexicographic edge list
/// (include branch first). Prunes when the remaining edges cannot beat the
/// incumbent strictly, so ties are still enumerated and extremal_count is
/// exact. A branch is entered only if the added edge keeps the graph free,
/// checked incrementally on cores through that edge. fold_isomorphs
/// deduplicates extremal graphs by their least edge set under all vertex
/// permutations. Instances are capped at C(N,r) <= 64 candidate edges
/// (and N <= 8 when folding); beyond that throws std::invalid_argument.
/// Budget overrun throws BudgetExceededError, never truncates silently.
/// on_incumbent, when set, fires at every strict improvement.
SearchResult brute_force_ex(
    int vertex_count, int order, int uniformity,
    const SearchBudget& budget = {}, bool fold_isomorphs = false,
    int sample_cap = 3,
    const std::function<void(int, std::uint64_t)>& on_incumbent = {});

/// One vertex count N of the desk suite: the balanced (order-1)-partite
/// construction on N vertices must match the closed-form count, contain no
/// Berge clique of the order, be saturated, and be recognized back as a
/// balanced (order-1)-partition.
struct DeskInstance {
  int vertex_count = 0;
  std::uint64_t predicted_edges = 0;
  std::uint64_t built_edges = 0;
  bool counts_match = false;
  bool free = false;
  bool saturated = false;
  bool partite_recognized = false;
  bool pass = false;
  std::optional<VertexSet> safe_edge;   // certificate when not saturated
  std::optional<BergeWitness> witness;  // certificate when not free
};

struct DeskReport {
  int order = 0;
  int max_vertex_count = 0;
  std::vector<DeskInstance> instances;
  bool all_pass = false;
  std::string scope_note;
};

/// Runs the desk suite for every N in [order, max_vertex_count] and stops
/// at the first failing instance, which then carries the failing
/// certificate. Requires 13 <= order <= max_vertex_count and, unless
/// beyond_regime is set, max_vertex_count <= 2*order - 2 (the range where
/// saturation is expected to certify maximality; larger N is exploratory).
/// on_instance, when set, fires after each instance for streaming output.
DeskReport verify_theorem_desk(
    int order = 13, int max_vertex_count = 16, int jobs = 1,
    bool beyond_regime = false,
    const std::function<void(const DeskInstance&)>& on_instance = {});

}  // namespace berge
