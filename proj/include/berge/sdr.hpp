#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace berge {

/// Family A_0..A_{m-1} of finite sets over a dense element universe
/// 0..universe_size-1. Callers with opaque elements intern them first
/// (the CLI does this for JSON input).
struct SetFamily {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
};

/// Index set Q with |union of the indexed sets| < |Q|, certifying that the
/// family has no system of distinct representatives.
struct HallViolator {
  std::vector<int> indices;  // 0-based family indices, ascending
  std::uint64_t union_size = 0;
};

/// One representative element per set, in original family order.
using Sdr = std::vector<int>;

/// Picks distinct representatives via bipartite matching, or returns the
/// violator read off the failed matching (the indices reachable by
/// alternating paths from an unsaturated one). The violator is certifiably
/// strict but not promised minimal.
std::variant<Sdr, HallViolator> find_sdr(const SetFamily& family);

/// Exhaustive desk-scale check of the representative bound for families of
/// triples {x, u_i, u_k}: every A_i is a subset of the m-1 admissible
/// triples through u_i. All 2^((m-1)m) assignments are enumerated. The
/// bound max|union| <= C(m-1,2) for families without an SDR holds for the
/// linked families, the ones induced by a single triple set (a triple
/// containing u_i and u_k lies in A_i iff it lies in A_k); equality is
/// attained exactly when some u_t sits in no triple and every other A_i
/// holds all its admissible triples avoiding u_t. Unlinked assignments can
/// exceed the bound and are counted separately as evidence the linkage
/// hypothesis is load-bearing.
struct LemmaReport {
  int m = 0;
  std::uint64_t bound = 0;  // C(m-1, 2)
  std::uint64_t families_enumerated = 0;
  std::uint64_t linked_families = 0;
  std::uint64_t linked_without_sdr = 0;
  std::uint64_t max_union_without_sdr = 0;  // over linked no-SDR families
  std::uint64_t bound_violations = 0;       // linked no-SDR above the bound
  std::uint64_t equality_families = 0;      // labelled
  std::uint64_t equality_normal_forms = 0;  // up to relabelling of the u_i
  bool characterization_holds = false;      // equality set == characterized set
  std::uint64_t unlinked_without_sdr_over_bound = 0;

  bool verified() const {
    return bound_violations == 0 && characterization_holds;
  }
};

/// m in [5, 6]; the enumeration has 2^((m-1)m) states, so larger m is out
/// of desk range.
LemmaReport verify_sdr_lemma(int m = 5);

}  // namespace berge
