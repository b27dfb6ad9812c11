#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "berge/constructions.hpp"
#include "berge/hypergraph.hpp"
#include "oracles.hpp"

using berge::Hypergraph;

TEST_CASE("edges are canonicalised regardless of input order") {
  Hypergraph a(5, 3, {{2, 1, 0}, {4, 3, 2}});
  Hypergraph b(5, 3, {{3, 4, 2}, {0, 1, 2}});
  CHECK(a == b);
  CHECK(a.edges() == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("edge list is sorted lexicographically") {
  Hypergraph h(4, 2, {{2, 3}, {0, 3}, {0, 1}, {1, 2}});
  CHECK(h.edges() ==
        std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("invalid edges are rejected") {
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 2}, {2, 1, 0}}),
                  std::invalid_argument);  // duplicate, scrambled
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(-1, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 0, {}), std::invalid_argument);
}

TEST_CASE("empty hypergraph basics") {
  const auto h = Hypergraph::empty(6, 3);
  CHECK(h.vertex_count() == 6);
  CHECK(h.uniformity() == 3);
  CHECK(h.edge_count() == 0);
  CHECK_FALSE(h.has_edge({0, 1, 2}));
}

TEST_CASE("has_edge accepts permuted queries") {
  Hypergraph h(5, 3, {{0, 2, 4}});
  CHECK(h.has_edge({4, 0, 2}));
  CHECK(h.has_edge({0, 2, 4}));
  CHECK_FALSE(h.has_edge({0, 1, 2}));
}

TEST_CASE("complement swaps present and absent edges") {
  const auto complete = berge::build_complete(5, 3);
  CHECK(berge::complement(complete).edge_count() == 0);

  const auto turan = berge::build_turan_partite(6, 3, 3).hypergraph;
  const auto co = berge::complement(turan);
  CHECK(turan.edge_count() == 8);
  CHECK(co.edge_count() == 12);  // C(6,3) = 20 total
  CHECK(berge::complement(co) == turan);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 6, 3, 0.4);
    CHECK(berge::complement(berge::complement(h)) == h);
    CHECK(h.edge_count() + berge::complement(h).edge_count() == 20);
  }
}

TEST_CASE("induced subhypergraph keeps exactly the inner edges") {
  const auto complete = berge::build_complete(6, 3);
  CHECK(berge::induced(complete, {0, 2, 3, 5}) == berge::build_complete(4, 3));

  const auto turan = berge::build_turan_partite(6, 3, 3).hypergraph;
  const auto part = berge::induced(turan, {0, 1});
  CHECK(part.vertex_count() == 2);
  CHECK(part.edge_count() == 0);

  // One representative per part of a balanced 12-partite construction spans
  // a complete graph once the partition is quotiented away.
  const auto big = berge::build_turan_partite(13, 12, 3);
  std::vector<int> reps;
  for (const auto& p : big.partition.parts) reps.push_back(p.members().front());
  CHECK(berge::induced(big.hypergraph, berge::VertexSet(reps)) ==
        berge::build_complete(12, 3));

  CHECK_THROWS_AS(berge::induced(complete, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(berge::induced(complete, {0, 6}), std::invalid_argument);
}

TEST_CASE("cross edges are the ones meeting both sides") {
  const auto complete = berge::build_complete(5, 3);
  const auto hit = berge::cross(complete, {0}, {1, 2, 3, 4});
  CHECK(hit.edge_count() == 6);  // all edges through vertex 0
  for (const auto& e : hit.edges()) {
    CHECK(std::find(e.begin(), e.end(), 0) != e.end());
  }
  CHECK(berge::cross(complete, {1, 2, 3, 4}, {0}) == hit);

  const auto turan = berge::build_turan_partite(6, 3, 3).hypergraph;
  CHECK(berge::cross(turan, {0, 1}, {2, 3}).edge_count() == 8);

  CHECK_THROWS_AS(berge::cross(complete, {0, 1}, {1, 2}),
                  std::invalid_argument);
}

TEST_CASE("degree counts incident edges") {
  const auto complete = berge::build_complete(6, 3);
  for (int v = 0; v < 6; ++v) CHECK(berge::degree(complete, v) == 10);

  const auto big = berge::build_turan_partite(13, 12, 3).hypergraph;
  CHECK(berge::degree(big, 0) == 55);  // C(11,2) transversal completions

  // Handshake: degrees sum to r * edge_count.
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 7, 3, 0.3);
    std::size_t total = 0;
    for (int v = 0; v < 7; ++v) total += berge::degree(h, v);
    CHECK(total == 3 * h.edge_count());
  }
  CHECK_THROWS_AS(berge::degree(complete, 6), std::invalid_argument);
}

TEST_CASE("delete_vertex removes incident edges and relabels the rest") {
  const auto complete = berge::build_complete(6, 3);
  CHECK(berge::delete_vertex(complete, 2) == berge::build_complete(5, 3));

  // Removing one vertex of the doubled part in a near-balanced partition
  // leaves a complete hypergraph once every part is a singleton.
  const auto big = berge::build_turan_partite(13, 12, 3).hypergraph;
  CHECK(berge::delete_vertex(big, 1) == berge::build_complete(12, 3));

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 7, 3, 0.3);
    const int v = static_cast<int>(rng() % 7);
    const auto smaller = berge::delete_vertex(h, v);
    CHECK(smaller.vertex_count() == 6);
    CHECK(smaller.edge_count() == h.edge_count() - berge::degree(h, v));
  }
  CHECK_THROWS_AS(berge::delete_vertex(complete, -1), std::invalid_argument);
}

TEST_CASE("independent sets contain no full edge") {
  const auto turan = berge::build_turan_partite(7, 3, 3);
  for (const auto& part : turan.partition.parts) {
    CHECK(berge::is_independent_set(turan.hypergraph, part));
  }
  CHECK(berge::is_independent_set(turan.hypergraph, {}));
  CHECK(berge::is_independent_set(turan.hypergraph, {4}));
  const auto first = turan.hypergraph.edges().front();
  CHECK_FALSE(
      berge::is_independent_set(turan.hypergraph, berge::VertexSet(first)));
  CHECK_THROWS_AS(berge::is_independent_set(turan.hypergraph, {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("relabel permutes vertices and preserves structure") {
  const auto turan = berge::build_turan_partite(6, 3, 3).hypergraph;
  std::vector<int> identity{0, 1, 2, 3, 4, 5};
  CHECK(berge::relabel(turan, identity) == turan);

  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 7, 3, 0.3);
    const auto perm = oracle::random_permutation(rng, 7);
    const auto moved = berge::relabel(h, perm);
    CHECK(moved.edge_count() == h.edge_count());
    std::vector<int> inverse(7);
    for (int i = 0; i < 7; ++i) inverse[perm[i]] = i;
    CHECK(berge::relabel(moved, inverse) == h);
  }

  CHECK_THROWS_AS(berge::relabel(turan, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(berge::relabel(turan, {0, 1, 2, 3, 4, 4}),
                  std::invalid_argument);
}

TEST_CASE("induced commutes with relabeling") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 8, 3, 0.3);
    const auto perm = oracle::random_permutation(rng, 8);
    std::vector<int> subset{0, 2, 3, 5, 7};

    const auto direct = berge::induced(h, berge::VertexSet(subset));
    std::vector<int> image;
    for (int v : subset) image.push_back(perm[v]);
    const auto via_relabel =
        berge::induced(berge::relabel(h, perm), berge::VertexSet(image));

    // Map position-in-sorted-subset to position-in-sorted-image.
    std::vector<int> sorted_image = image;
    std::sort(sorted_image.begin(), sorted_image.end());
    std::vector<int> bridge(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const auto it = std::find(sorted_image.begin(), sorted_image.end(),
                                perm[subset[i]]);
      bridge[i] = static_cast<int>(it - sorted_image.begin());
    }
    CHECK(berge::relabel(direct, bridge) == via_relabel);
  }
}

TEST_CASE("delete_vertex commutes with relabeling") {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 7, 3, 0.35);
    const auto perm = oracle::random_permutation(rng, 7);
    const int v = static_cast<int>(rng() % 7);

    const auto direct = berge::delete_vertex(h, v);
    const auto via_relabel =
        berge::delete_vertex(berge::relabel(h, perm), perm[v]);

    // Where each surviving vertex lands after both deletions shift labels.
    std::vector<int> bridge(6);
    for (int w = 0; w < 7; ++w) {
      if (w == v) continue;
      const int before = w - (w > v ? 1 : 0);
      const int after = perm[w] - (perm[w] > perm[v] ? 1 : 0);
      bridge[before] = after;
    }
    CHECK(berge::relabel(direct, bridge) == via_relabel);
  }
}
