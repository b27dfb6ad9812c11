#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace berge {

/// Sorted set of distinct vertex indices. Construction sorts the members
/// and rejects duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);
  VertexSet(std::initializer_list<int> members);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

/// Finite r-uniform hypergraph on vertices 0..N-1, edges held in canonical
/// form: vertices strictly increasing inside an edge, edges sorted
/// lexicographically, no duplicates. Duplicate edges in the input are
/// rejected rather than merged. Instances are immutable after construction,
/// so concurrent reads are safe.
class Hypergraph {
 public:
  using Edge = std::vector<int>;

  /// Vertices inside each input edge may arrive in any order; they are
  /// sorted here. Throws std::invalid_argument on out-of-range vertices,
  /// repeated vertices inside an edge, wrong edge size, or duplicate edges.
  Hypergraph(int vertex_count, int uniformity, std::vector<Edge> edges);

  static Hypergraph empty(int vertex_count, int uniformity) {
    return Hypergraph(vertex_count, uniformity, {});
  }

  int vertex_count() const { return vertex_count_; }
  int uniformity() const { return uniformity_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Membership test; `e` may list its vertices in any order.
  bool has_edge(Edge e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int vertex_count_ = 0;
  int uniformity_ = 2;
  std::vector<Edge> edges_;
};

std::size_t edge_count(const Hypergraph& h);

/// Hypergraph on the same vertices whose edges are exactly the r-sets
/// missing from h.
Hypergraph complement(const Hypergraph& h);

/// Subgraph induced by the vertices of u, relabelled onto 0..|u|-1 in the
/// sorted order of u. Keeps exactly the edges fully inside u.
Hypergraph induced(const Hypergraph& h, const VertexSet& u);

/// Subgraph on the full vertex set keeping exactly the edges that meet
/// both u and w. The two sets must be disjoint.
Hypergraph cross(const Hypergraph& h, const VertexSet& u, const VertexSet& w);

/// Number of edges containing v.
std::size_t degree(const Hypergraph& h, int v);

/// Removes v and every edge through it; vertices above v shift down by one.
Hypergraph delete_vertex(const Hypergraph& h, int v);

/// True iff no edge contains two members of x.
bool is_independent_set(const Hypergraph& h, const VertexSet& x);

/// Image of h under the permutation perm (perm[v] = new label of v).
Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm);

}  // namespace berge
