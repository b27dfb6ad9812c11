#include "berge/sdr.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "berge/constructions.hpp"
#include "berge/matching.hpp"

namespace berge {

namespace {

// Exact SDR test via Hall's condition over all index subsets; each set is a
// bitmask over a universe of at most 32 elements. Fine for m <= 6.
bool sdr_exists_exact(const std::uint32_t* mask, int m) {
  std::array<std::uint32_t, 64> uni;
  uni[0] = 0;
  const std::uint32_t top = 1u << m;
  for (std::uint32_t s = 1; s < top; ++s) {
    uni[s] = uni[s & (s - 1)] | mask[std::countr_zero(s)];
    if (std::popcount(uni[s]) < std::popcount(s)) return false;
  }
  return true;
}

// One greedy pass, always picking the lowest untaken element. Success proves
// an SDR exists; failure proves nothing. Keeps the enumeration off the 2^m
// check for the bulk of the families.
bool sdr_greedy(const std::uint32_t* mask, int m) {
  std::uint32_t used = 0;
  for (int i = 0; i < m; ++i) {
    const std::uint32_t avail = mask[i] & ~used;
    if (avail == 0) return false;
    used |= avail & (~avail + 1u);
  }
  return true;
}

bool sdr_exists(const std::uint32_t* mask, int m) {
  return sdr_greedy(mask, m) || sdr_exists_exact(mask, m);
}

}  // namespace

std::variant<Sdr, HallViolator> find_sdr(const SetFamily& family) {
  if (family.universe_size < 0)
    throw std::invalid_argument("find_sdr: negative universe size");
  const int m = static_cast<int>(family.sets.size());

  BipartiteGraph graph;
  graph.left_count = m;
  graph.right_count = family.universe_size;
  graph.adj.assign(m, {});
  for (int i = 0; i < m; ++i) {
    auto elems = family.sets[i];
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int e : elems) {
      if (e < 0 || e >= family.universe_size)
        throw std::invalid_argument("find_sdr: element out of range");
    }
    graph.adj[i] = std::move(elems);
  }

  const MatchingResult matching = max_matching(graph);
  if (matching.size == m) return Sdr(matching.match_left);

  const auto witness = hall_violator(graph, matching);
  if (!witness)
    throw std::logic_error("find_sdr: incomplete matching without violator");
  HallViolator out;
  out.indices = witness->lefts;
  out.union_size = static_cast<std::uint64_t>(witness->neighbourhood_size);
  return out;
}

LemmaReport verify_sdr_lemma(int m) {
  if (m < 5 || m > 6)
    throw std::invalid_argument("verify_sdr_lemma: m must be 5 or 6");

  const int digit_bits = m - 1;            // admissible triples per index
  const std::uint32_t digit_cap = 1u << digit_bits;

  // Universe bit per unordered index pair {i, k}: the triple {x, u_i, u_k}.
  std::array<std::array<int, 6>, 6> pair_bit{};
  std::array<int, 15> bit_row{};
  std::array<int, 15> bit_col{};
  int next_bit = 0;
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      pair_bit[i][k] = pair_bit[k][i] = next_bit;
      bit_row[next_bit] = i;
      bit_col[next_bit] = k;
      ++next_bit;
    }
  }

  // subset_mask[i][s]: the s-th subset of index i's admissible triples,
  // spread out over the shared universe.
  std::array<std::array<std::uint32_t, 32>, 6> subset_mask{};
  std::array<std::uint32_t, 6> full_mask{};
  for (int i = 0; i < m; ++i) {
    std::array<int, 5> partner_bit{};
    int b = 0;
    for (int k = 0; k < m; ++k)
      if (k != i) partner_bit[b++] = pair_bit[i][k];
    for (std::uint32_t s = 0; s < digit_cap; ++s) {
      std::uint32_t acc = 0;
      for (int t = 0; t < digit_bits; ++t)
        if (s >> t & 1u) acc |= 1u << partner_bit[t];
      subset_mask[i][s] = acc;
    }
    full_mask[i] = subset_mask[i][digit_cap - 1];
  }

  LemmaReport report;
  report.m = m;
  report.bound = static_cast<std::uint64_t>(binomial(m - 1, 2));

  // Equality families must have one index with nothing and every other index
  // holding all its admissible triples that avoid the starved one.
  const auto matches_characterization =
      [&](const std::array<std::uint32_t, 6>& a) {
        for (int t = 0; t < m; ++t) {
          if (a[t] != 0) continue;
          bool match = true;
          for (int i = 0; i < m && match; ++i) {
            if (i != t && a[i] != (full_mask[i] & ~full_mask[t])) match = false;
          }
          if (match) return true;
        }
        return false;
      };

  // Least encoding of the family under simultaneous relabelling of the u_i
  // (which permutes both the family order and the triple universe).
  const auto canonical_form = [&](const std::array<std::uint32_t, 6>& a) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    do {
      std::vector<std::uint32_t> cur(m, 0);
      for (int i = 0; i < m; ++i) {
        std::uint32_t bits = a[i];
        std::uint32_t relabeled = 0;
        while (bits) {
          const int b = std::countr_zero(bits);
          bits &= bits - 1;
          relabeled |= 1u << pair_bit[perm[bit_row[b]]][perm[bit_col[b]]];
        }
        cur[perm[i]] = relabeled;
      }
      if (best.empty() || cur < best) best = std::move(cur);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  std::set<std::vector<std::uint32_t>> normal_forms;
  bool all_equality_characterized = true;

  const std::uint64_t total = std::uint64_t{1}
                              << (static_cast<unsigned>(m) * digit_bits);
  std::array<std::uint32_t, 6> digit{};
  std::array<std::uint32_t, 6> mask{};

  for (std::uint64_t step = 0; step < total; ++step) {
    std::uint32_t uni = 0;
    for (int i = 0; i < m; ++i) uni |= mask[i];
    bool linked = true;
    for (int i = 0; i < m; ++i) {
      if (mask[i] != (uni & full_mask[i])) {
        linked = false;
        break;
      }
    }

    if (linked) {
      ++report.linked_families;
      if (!sdr_exists_exact(mask.data(), m)) {
        ++report.linked_without_sdr;
        const auto size = static_cast<std::uint64_t>(std::popcount(uni));
        report.max_union_without_sdr =
            std::max(report.max_union_without_sdr, size);
        if (size > report.bound) ++report.bound_violations;
        if (size == report.bound) {
          ++report.equality_families;
          if (!matches_characterization(mask)) all_equality_characterized = false;
          normal_forms.insert(canonical_form(mask));
        }
      }
    } else if (static_cast<std::uint64_t>(std::popcount(uni)) > report.bound &&
               !sdr_exists(mask.data(), m)) {
      ++report.unlinked_without_sdr_over_bound;
    }

    for (int j = 0; j < m; ++j) {
      if (++digit[j] < digit_cap) {
        mask[j] = subset_mask[j][digit[j]];
        break;
      }
      digit[j] = 0;
      mask[j] = 0;
    }
  }
  report.families_enumerated = total;

  // Converse direction: each starved-index family really is a linked
  // equality family, so the characterized set and the observed equality set
  // coincide exactly when every observed family matched and the counts agree.
  std::uint64_t constructed = 0;
  for (int t = 0; t < m; ++t) {
    std::array<std::uint32_t, 6> a{};
    std::uint32_t uni = 0;
    for (int i = 0; i < m; ++i) {
      a[i] = (i == t) ? 0u : (full_mask[i] & ~full_mask[t]);
      uni |= a[i];
    }
    bool linked = true;
    for (int i = 0; i < m; ++i)
      if (a[i] != (uni & full_mask[i])) linked = false;
    if (linked && !sdr_exists_exact(a.data(), m) &&
        static_cast<std::uint64_t>(std::popcount(uni)) == report.bound)
      ++constructed;
  }
  report.characterization_holds =
      all_equality_characterized && report.equality_families == constructed;
  report.equality_normal_forms = normal_forms.size();
  return report;
}

}  // namespace berge
