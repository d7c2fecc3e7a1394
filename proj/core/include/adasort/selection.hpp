// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "adasort/item.hpp"
#include "adasort/meter.hpp"

namespace adasort {

using Rng = std::mt19937_64;

/// Upper bound on comparisons per element charged by select_exact_median.
/// From the groups-of-five recurrence: sorting the groups costs at most 2n,
/// the three-way split at most 2n, and the recursion shrinks by 9/10, giving
/// 4n / (1 - 9/10). Small inputs stay well under it.
inline constexpr double kExactMedianComparisonFactor = 40.0;

/// Attempts allowed in select_random_middle before it falls back to the
/// exact median.
inline constexpr std::uint32_t kRandomMiddleAttemptCap = 64;

/// 1-based rank of the pivot used as "the median": ceil(n/2).
inline constexpr std::size_t median_rank(std::size_t n) { return (n + 1) / 2; }

/// Key of 1-based rank `rank` via deterministic median-of-medians with
/// groups of five. Throws InputError if rank is not in [1, n].
Key select_rank_deterministic(std::vector<Key> keys, std::size_t rank,
                              Meter& meter);

/// Key of rank ceil(n/2). Throws InputError on empty input.
Key select_exact_median(std::span<const Item> items, Meter& meter);

struct RandomPivot {
  Key key = 0;
  std::uint32_t attempts = 0;  // sampling rounds, each costing n-1 comparisons
  bool fell_back = false;      // exact median used (n < 4 or attempt cap hit)
};

/// Samples elements uniformly until one lands in the middle half, i.e. its
/// rank (key, then position) is in [ceil(n/4), floor(3n/4)]. Ranking a
/// sample costs exactly n-1 comparisons.
RandomPivot select_random_middle(std::span<const Item> items, Rng& rng,
                                 Meter& meter);

/// Key of rank ceil(n/2) by sampling-based selection: two sample keys
/// bracket the target rank, one pass splits the input around them and the
/// search continues in the narrow middle. Throws InputError on empty input.
Key select_floyd_rivest(std::span<const Item> items, Rng& rng, Meter& meter);

/// Key of 1-based rank `rank`, Floyd-Rivest style.
Key select_rank_sampled(std::vector<Key> keys, std::size_t rank, Rng& rng,
                        Meter& meter);

}  // namespace adasort
