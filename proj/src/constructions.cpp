#include "berge/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace berge {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("count exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("count exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;  // 0^0 = 1
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

std::uint64_t binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  std::uint64_t result = 1;
  for (long long i = 1; i <= b; ++i) {
    // result * (a - b + i) is divisible by i at every step.
    result = checked_mul(result, static_cast<std::uint64_t>(a - b + i));
    result /= static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t transversal_count(const std::vector<int>& part_sizes, int r) {
  if (r < 0) return 0;
  // Coefficients of prod_i (1 + s_i x), kept up to degree r.
  std::vector<std::uint64_t> coeff(static_cast<std::size_t>(r) + 1, 0);
  coeff[0] = 1;
  for (int s : part_sizes) {
    if (s < 0) throw std::invalid_argument("transversal_count: negative part size");
    for (int d = r; d >= 1; --d) {
      coeff[d] = checked_add(coeff[d], checked_mul(coeff[d - 1],
                                                   static_cast<std::uint64_t>(s)));
    }
  }
  return coeff[r];
}

std::uint64_t turan_count(int vertex_count, int parts, int uniformity) {
  if (vertex_count < 0) throw std::invalid_argument("turan_count: negative N");
  if (parts < 1) throw std::invalid_argument("turan_count: parts must be >= 1");
  if (uniformity < 2) throw std::invalid_argument("turan_count: uniformity must be >= 2");
  if (vertex_count == 0) return 0;

  const int k = parts;
  const int r = uniformity;
  // N = l*k + j with 1 <= j <= k; exact multiples take j = k, l = N/k - 1.
  int l = vertex_count / k;
  int j = vertex_count % k;
  if (j == 0) {
    j = k;
    l -= 1;
  }
  std::uint64_t total = 0;
  for (int i = 0; i <= r; ++i) {
    std::uint64_t term = checked_pow(static_cast<std::uint64_t>(l), r - i);
    term = checked_mul(term, binomial(j, i));
    term = checked_mul(term, binomial(k - i, r - i));
    total = checked_add(total, term);
  }
  return total;
}

std::vector<int> PartiteStructure::sizes() const {
  std::vector<int> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(static_cast<int>(p.size()));
  return out;
}

bool PartiteStructure::balanced() const {
  if (parts.empty()) return true;
  auto s = sizes();
  auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return *hi - *lo <= 1;
}

TuranConstruction build_turan_partite(int vertex_count, int parts,
                                      int uniformity) {
  if (vertex_count < 0) throw std::invalid_argument("build_turan_partite: negative N");
  if (parts < 1) throw std::invalid_argument("build_turan_partite: parts must be >= 1");

  const int k = parts;
  const int base = vertex_count / k;
  const int larger = vertex_count % k;  // this many parts get base+1 vertices

  PartiteStructure partition;
  std::vector<int> part_of(vertex_count, -1);
  int next = 0;
  for (int p = 0; p < k; ++p) {
    const int size = base + (p < larger ? 1 : 0);
    std::vector<int> members(static_cast<std::size_t>(size));
    std::iota(members.begin(), members.end(), next);
    for (int v : members) part_of[v] = p;
    next += size;
    partition.parts.emplace_back(std::move(members));
  }

  const int r = uniformity;
  std::vector<Hypergraph::Edge> edges;
  if (vertex_count >= r) {
    std::vector<int> cur(r);
    // Lexicographic r-subsets, pruned as soon as two chosen vertices share
    // a part. Parts are contiguous index ranges, so the part lookup is O(1).
    auto rec = [&](auto&& self, int depth, int start) -> void {
      if (depth == r) {
        edges.push_back(cur);
        return;
      }
      for (int v = start; v <= vertex_count - (r - depth); ++v) {
        if (depth > 0 && part_of[cur[depth - 1]] == part_of[v]) continue;
        cur[depth] = v;
        self(self, depth + 1, v + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return TuranConstruction{Hypergraph(vertex_count, uniformity, std::move(edges)),
                           std::move(partition)};
}

Hypergraph build_complete(int vertex_count, int uniformity) {
  if (vertex_count < 0) throw std::invalid_argument("build_complete: negative N");
  std::vector<Hypergraph::Edge> edges;
  const int r = uniformity;
  if (vertex_count >= r && r >= 2) {
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    while (true) {
      edges.push_back(cur);
      int i = r - 1;
      while (i >= 0 && cur[i] == vertex_count - r + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int t = i + 1; t < r; ++t) cur[t] = cur[t - 1] + 1;
    }
  }
  return Hypergraph(vertex_count, uniformity, std::move(edges));
}

Hypergraph build_expansion(int core_order, int uniformity) {
  if (core_order < 2) throw std::invalid_argument("build_expansion: core order must be >= 2");
  if (uniformity < 3) throw std::invalid_argument("build_expansion: uniformity must be >= 3");

  const int n = core_order;
  const int extra = uniformity - 2;
  const std::uint64_t pair_count = binomial(n, 2);
  const int total_vertices = n + static_cast<int>(pair_count) * extra;

  std::vector<Hypergraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(pair_count));
  int fresh = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Hypergraph::Edge e = {i, j};
      for (int t = 0; t < extra; ++t) e.push_back(fresh++);
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(total_vertices, uniformity, std::move(edges));
}

}  // namespace berge
