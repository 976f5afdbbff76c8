#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/combinat/partition.hpp"

namespace sigma0 {

/// Indices (into the input list) of a sub-multiset summing to the target.
using SubsumWitness = std::vector<std::size_t>;

/// Subset-sum over parts that must all be powers of two. Returns one witness
/// (lexicographically by DP order) when the target is reachable.
inline std::optional<SubsumWitness> subsum_witness(const std::vector<unsigned>& parts, unsigned target) {
  for (unsigned p : parts)
    if (!is_power_of_two(p))
      throw precondition_error("subsum: part " + std::to_string(p) + " is not a power of two");
  // reach[i][s]: some subset of the first i parts sums to s
  const std::size_t r = parts.size();
  std::vector<std::vector<char>> reach(r + 1, std::vector<char>(target + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (unsigned s = 0; s <= target; ++s) {
      if (!reach[i][s]) continue;
      reach[i + 1][s] = 1;
      if (s + parts[i] <= target) reach[i + 1][s + parts[i]] = 1;
    }
  }
  if (!reach[r][target]) return std::nullopt;
  SubsumWitness w;
  unsigned s = target;
  for (std::size_t i = r; i > 0; --i) {
    if (reach[i - 1][s]) continue;
    w.push_back(i - 1);
    s -= parts[i - 1];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

inline bool subsum_exists(const std::vector<unsigned>& parts, unsigned target) {
  return subsum_witness(parts, target).has_value();
}

/// Number of index subsets J of `parts` with sum_{j in J} parts[j] == target.
/// Any positive parts; counts distinct index sets, not distinct multisets.
inline Nat count_index_subsets_with_sum(const std::vector<unsigned>& parts, unsigned target) {
  std::vector<Nat> ways(target + 1, 0);
  ways[0] = 1;
  for (unsigned p : parts) {
    if (p > target) continue;
    for (unsigned s = target; s >= p; --s) {
      ways[s] += ways[s - p];
      if (s == p) break;
    }
  }
  return ways[target];
}

/// Whether two disjoint index subsets each sum to `half`.
inline bool two_disjoint_subsums(const std::vector<unsigned>& parts, unsigned half) {
  const unsigned w = half + 1;
  std::vector<char> reach(static_cast<std::size_t>(w) * w, 0);
  reach[0] = 1;
  for (unsigned p : parts) {
    if (p > half) continue;
    for (unsigned a = half + 1; a-- > 0;) {
      for (unsigned b = half + 1; b-- > 0;) {
        if (!reach[static_cast<std::size_t>(a) * w + b]) continue;
        if (a + p <= half) reach[static_cast<std::size_t>(a + p) * w + b] = 1;
        if (b + p <= half) reach[static_cast<std::size_t>(a) * w + b + p] = 1;
      }
    }
  }
  return reach[static_cast<std::size_t>(half) * w + half] != 0;
}

/// Outcome of the exhaustive scan over partitions into powers of two.
struct SubsumLemmaReport {
  unsigned a_max = 0;
  std::size_t halves_checked = 0;      // partitions of 2^a, r >= 2
  std::size_t triples_checked = 0;     // partitions of 3*2^a, r >= 2
  std::size_t case_two_parts = 0;      // (2^{a+1}, 2^a)
  std::size_t case_three_equal = 0;    // (2^a, 2^a, 2^a)
  std::size_t case_two_subsets = 0;    // two disjoint 2^{a-1} subsums
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// For every 1 <= a <= a_max: every partition of 2^a into >= 2 powers of two has
/// a subsum 2^{a-1}; every partition of 3*2^a into >= 2 powers of two is
/// (2^{a+1},2^a), (2^a,2^a,2^a), or has two disjoint subsums equal to 2^{a-1}.
inline SubsumLemmaReport check_subsum_lemma(unsigned a_max) {
  if (a_max < 1) throw precondition_error("check_subsum_lemma: a_max must be >= 1");
  SubsumLemmaReport rep;
  rep.a_max = a_max;
  for (unsigned a = 1; a <= a_max; ++a) {
    const unsigned full = 1u << a;
    const unsigned half = full / 2;
    for_each_binary_partition(full, [&](const Partition& p) {
      if (p.length() < 2) return;
      ++rep.halves_checked;
      if (!subsum_exists(p.parts(), half))
        rep.counterexamples.push_back("2^" + std::to_string(a) + ": " + p.str() + " has no subsum " +
                                      std::to_string(half));
    });
    for_each_binary_partition(3 * full, [&](const Partition& p) {
      if (p.length() < 2) return;
      ++rep.triples_checked;
      const auto& parts = p.parts();
      if (parts.size() == 2 && parts[0] == 2 * full && parts[1] == full) {
        ++rep.case_two_parts;
      } else if (parts.size() == 3 && parts[0] == full && parts[1] == full && parts[2] == full) {
        ++rep.case_three_equal;
      } else if (two_disjoint_subsums(parts, half)) {
        ++rep.case_two_subsets;
      } else {
        rep.counterexamples.push_back("3*2^" + std::to_string(a) + ": " + p.str() +
                                      " fits no case");
      }
    });
  }
  return rep;
}

} // namespace sigma0
