// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "adasort/sorters.hpp"

namespace adasort {

inline constexpr std::size_t kCensusMaxN = 10;
inline constexpr std::size_t kWorstCaseMaxN = 8;

/// Permutations of 1..n grouped by the size multiset of their maximal
/// decomposition.
struct CensusRow {
  std::vector<std::size_t> type;  // non-increasing
  std::uint64_t nu = 0;           // permutations with this type
  std::optional<double> eq1_rhs;  // empty when 2k > n
  double info_bits = 0.0;         // log2(nu)
  std::optional<std::uint64_t> worst_case_comparisons;

  /// Whether the counted class is at least as large as the lower-bound
  /// formula claims. Meaningful only when eq1_rhs is set.
  bool eq1_holds() const { return eq1_rhs && static_cast<double>(nu) >= *eq1_rhs; }
};

/// Rows ordered by block count, then type in decreasing lexicographic
/// order. When `worst_case` is given, every permutation is also sorted with
/// partition_sort under that strategy (fixed seed, default options) and the
/// per-type maximum comparison count is recorded; that requires
/// n <= kWorstCaseMaxN. Throws InputError when n is out of range.
std::vector<CensusRow> enumerate_census(
    std::size_t n, std::optional<PivotStrategy> worst_case = std::nullopt,
    PartitionSortOptions options = {});

/// Counting lower bound on the class size for a sorted-type:
///   n!/(n_1!...n_k!) * k! * (n-2k)! * (2k)! / n!
/// evaluated with exact rationals. Throws DomainError when 2k > n and
/// InputError when sizes are empty, contain a zero, or do not sum to n.
double eq1_rhs(std::size_t n, std::span<const std::size_t> sizes);

/// Maximum partition_sort comparison count over every permutation of 1..n
/// with the given type. The strategy seed is held fixed for all
/// permutations, so the procedure is deterministic. Throws InputError when
/// n > kWorstCaseMaxN or no permutation has this type.
std::uint64_t worst_case_over_class(std::size_t n,
                                    std::span<const std::size_t> sizes,
                                    PivotStrategy strategy,
                                    PartitionSortOptions options = {});

/// Size multiset of the maximal decomposition of a permutation of 0..n-1
/// given as key per position. Non-increasing.
std::vector<std::size_t> permutation_type(std::span<const std::size_t> perm);

}  // namespace adasort
