// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "adasort/item.hpp"
#include "adasort/meter.hpp"
#include "adasort/selection.hpp"

namespace adasort {

enum class PivotRule { exact_median, random_middle_half, floyd_rivest };

struct PivotStrategy {
  PivotRule rule = PivotRule::exact_median;
  std::uint64_t seed = 0;  // ignored by exact_median
};

/// CLI names: "median", "randmid", "fr".
std::string_view pivot_name(PivotRule rule);
std::optional<PivotRule> parse_pivot(std::string_view name);

struct SortOutcome {
  Sequence output;
  std::uint64_t comparisons = 0;  // meter delta over the run
  std::uint64_t moves = 0;
  std::uint64_t pivot_retries = 0;  // total middle-half sampling attempts
  std::size_t max_recursion_depth = 0;
  bool sorted = true;  // only blocked_sort can report false
};

struct Partition {
  Sequence less;
  Sequence equal;
  Sequence greater;
};

/// Out-of-place split around `pivot`; each group keeps input order. At most
/// two comparisons per element.
Partition stable_three_way_partition(std::span<const Item> items, Key pivot,
                                     Meter& meter);

struct PartitionSortOptions {
  /// Unsorted subproblems of at most this many items are insertion sorted.
  std::size_t small_cutoff = 8;
};

/// Stable partition sort that checks sortedness before doing any work on a
/// subproblem and returns immediately when the check passes. Pivot-equal
/// items form the middle group and are never recursed on.
SortOutcome partition_sort(std::span<const Item> items, PivotStrategy strategy,
                           Meter& meter, PartitionSortOptions options = {});

/// Two passes of segment sorts over blocks of `block` items: first the
/// pairs (1,2),(3,4),... then (2,3),(4,5),... Sorts every input whose
/// max_displacement is at most `block`; otherwise the outcome may report
/// sorted == false. Throws InputError unless 1 <= block <= n.
SortOutcome blocked_sort(std::span<const Item> items, std::size_t block,
                         Meter& meter);

SortOutcome insertion_sort(std::span<const Item> items, Meter& meter);

/// Detects maximal non-decreasing runs, then merges neighbours pairwise in
/// rounds until one run remains.
SortOutcome natural_merge_sort(std::span<const Item> items, Meter& meter);

/// Stable top-down merge sort, metered. Used for blocked_sort segments.
SortOutcome merge_sort(std::span<const Item> items, Meter& meter);

}  // namespace adasort
