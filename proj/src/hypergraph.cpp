#include "berge/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace berge {

namespace {

void check_vertex(int v, int vertex_count, const char* what) {
  if (v < 0 || v >= vertex_count) {
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(v) + " out of range [0, " +
                                std::to_string(vertex_count) + ")");
  }
}

}  // namespace

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("VertexSet: duplicate member");
  }
}

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::vector<int>(members)) {}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Hypergraph::Hypergraph(int vertex_count, int uniformity,
                       std::vector<Edge> edges)
    : vertex_count_(vertex_count),
      uniformity_(uniformity),
      edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw std::invalid_argument("Hypergraph: negative vertex count");
  }
  if (uniformity_ < 2) {
    throw std::invalid_argument("Hypergraph: uniformity must be >= 2");
  }
  for (Edge& e : edges_) {
    if (static_cast<int>(e.size()) != uniformity_) {
      throw std::invalid_argument("Hypergraph: edge has " +
                                  std::to_string(e.size()) + " vertices, expected " +
                                  std::to_string(uniformity_));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("Hypergraph: repeated vertex inside an edge");
    }
    check_vertex(e.front(), vertex_count_, "Hypergraph");
    check_vertex(e.back(), vertex_count_, "Hypergraph");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("Hypergraph: duplicate edge");
  }
}

bool Hypergraph::has_edge(Edge e) const {
  std::sort(e.begin(), e.end());
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t edge_count(const Hypergraph& h) { return h.edge_count(); }

Hypergraph complement(const Hypergraph& h) {
  const int n = h.vertex_count();
  const int r = h.uniformity();
  std::vector<Hypergraph::Edge> out;
  if (n >= r) {
    // Walk all r-subsets in lexicographic order; both streams are sorted,
    // so a single cursor into h.edges() suffices.
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    std::size_t pos = 0;
    const auto& edges = h.edges();
    while (true) {
      if (pos < edges.size() && edges[pos] == cur) {
        ++pos;
      } else {
        out.push_back(cur);
      }
      int i = r - 1;
      while (i >= 0 && cur[i] == n - r + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return Hypergraph(n, r, std::move(out));
}

Hypergraph induced(const Hypergraph& h, const VertexSet& u) {
  std::vector<int> new_label(h.vertex_count(), -1);
  int next = 0;
  for (int v : u) {
    check_vertex(v, h.vertex_count(), "induced");
    new_label[v] = next++;
  }
  std::vector<Hypergraph::Edge> out;
  for (const auto& e : h.edges()) {
    Hypergraph::Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) {
      if (new_label[v] < 0) break;
      mapped.push_back(new_label[v]);
    }
    if (mapped.size() == e.size()) out.push_back(std::move(mapped));
  }
  return Hypergraph(static_cast<int>(u.size()), h.uniformity(), std::move(out));
}

Hypergraph cross(const Hypergraph& h, const VertexSet& u, const VertexSet& w) {
  for (int v : u) check_vertex(v, h.vertex_count(), "cross");
  for (int v : w) check_vertex(v, h.vertex_count(), "cross");
  for (int v : u) {
    if (w.contains(v)) {
      throw std::invalid_argument("cross: the two vertex sets overlap");
    }
  }
  std::vector<Hypergraph::Edge> out;
  for (const auto& e : h.edges()) {
    bool in_u = false, in_w = false;
    for (int v : e) {
      in_u = in_u || u.contains(v);
      in_w = in_w || w.contains(v);
    }
    if (in_u && in_w) out.push_back(e);
  }
  return Hypergraph(h.vertex_count(), h.uniformity(), std::move(out));
}

std::size_t degree(const Hypergraph& h, int v) {
  check_vertex(v, h.vertex_count(), "degree");
  std::size_t d = 0;
  for (const auto& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  }
  return d;
}

Hypergraph delete_vertex(const Hypergraph& h, int v) {
  check_vertex(v, h.vertex_count(), "delete_vertex");
  std::vector<Hypergraph::Edge> out;
  for (const auto& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) continue;
    Hypergraph::Edge mapped = e;
    for (int& x : mapped) {
      if (x > v) --x;
    }
    out.push_back(std::move(mapped));
  }
  return Hypergraph(h.vertex_count() - 1, h.uniformity(), std::move(out));
}

bool is_independent_set(const Hypergraph& h, const VertexSet& x) {
  for (int v : x) check_vertex(v, h.vertex_count(), "is_independent_set");
  if (x.size() < 2) return true;
  for (const auto& e : h.edges()) {
    int hits = 0;
    for (int v : e) {
      if (x.contains(v) && ++hits == 2) return false;
    }
  }
  return true;
}

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
  const int n = h.vertex_count();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    check_vertex(v, n, "relabel");
    if (seen[v]++) throw std::invalid_argument("relabel: not a permutation");
  }
  std::vector<Hypergraph::Edge> out;
  out.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    Hypergraph::Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(perm[v]);
    out.push_back(std::move(mapped));
  }
  return Hypergraph(n, h.uniformity(), std::move(out));
}

}  // namespace berge
