// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adasort/item.hpp"

namespace adasort {

/// Partition of the input into maximal sorted subsequences whose keys form
/// contiguous intervals of the sorted order.
///
/// Blocks are listed in increasing rank order; each block holds input
/// positions, strictly increasing, whose ranks are consecutive. Rank order is
/// (key, tag), so equal keys rank by input order.
struct Decomposition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> sizes;
};

/// Sortedness report for one sequence.
struct Profile {
  std::size_t n = 0;
  std::vector<std::size_t> sizes;  // non-increasing
  std::size_t k = 0;
  double entropy_bits = 0.0;
  double bound = 0.0;
  std::uint64_t inversions = 0;
  std::size_t max_displacement = 0;
  std::size_t runs = 0;
  std::size_t distinct_keys = 0;
};

/// Greedy chaining over rank order: a new block starts whenever the next
/// rank sits earlier in the input than the current one.
Decomposition decompose_maximal(std::span<const Item> items);

/// Stable rank order: positions sorted by (key, position).
std::vector<std::size_t> rank_order(std::span<const Item> items);

/// Pairs i < j with key_i > key_j, by merge counting. Ties are not inversions.
std::uint64_t inversions(std::span<const Item> items);

/// Largest |input position - stable sorted position|.
std::size_t max_displacement(std::span<const Item> items);

/// Number of maximal non-decreasing contiguous runs; 0 for empty input.
std::size_t count_runs(std::span<const Item> items);

std::size_t distinct_keys(std::span<const Item> items);

/// -sum (n_i/n) log2(n_i/n). Throws InputError on empty sizes, a zero size,
/// or sizes that do not sum to n.
double entropy(std::span<const std::size_t> sizes, std::size_t n);

/// sum n_i log2(n/n_i + 1) + n, the comparison budget for an input of this
/// sorted-type. Same preconditions as entropy().
double theorem_bound(std::span<const std::size_t> sizes, std::size_t n);

Profile profile(std::span<const Item> items);

/// Size multiset in canonical (non-increasing) order.
std::vector<std::size_t> canonical_type(std::span<const std::size_t> sizes);

/// Joins sizes with `sep`, e.g. "6-2-2-1".
std::string format_type(std::span<const std::size_t> sizes, char sep = '-');

}  // namespace adasort
