// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "adasort/item.hpp"

namespace adasort {

enum class Family {
  sorted,
  reverse,
  random,
  displacement,
  transpose,
  sorted_type,
  multiset,
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::sorted;
  std::size_t n = 0;
  std::size_t k = 0;               // displacement bound
  std::vector<std::size_t> sizes;  // sorted-type block sizes
  std::size_t h = 0;               // multiset distinct keys
  std::uint64_t seed = 0;
};

/// Throws InputError when family parameters are missing or inconsistent.
void validate(const GenSpec& spec);

/// Deterministic given the GenSpec. Keys are 1..n except for the multiset family,
/// which draws from 1..h with every value present.
///
///  - displacement: blocks of k+1 positions; every other block is rotated,
///    the first by exactly one step either way, so max_displacement == k.
///  - transpose: [n/2+1 .. n, 1 .. n/2].
Sequence generate(const GenSpec& spec);

struct RealizeStats {
  std::uint32_t reseeds = 0;       // attempts abandoned before success
  std::uint64_t repair_swaps = 0;  // boundary swaps in the successful attempt
};

/// A permutation of 1..n whose maximal decomposition has exactly the size
/// multiset of `sizes`.
///
/// Block i (in the given order) receives the next sizes[i] consecutive keys;
/// a seeded shuffle of block labels interleaves them; then, sweeping from
/// the left, any two rank-adjacent blocks that would chain into one are
/// separated by swapping the last item of the lower block with the first
/// item of the upper one. If n sweeps do not settle, the attempt restarts
/// with the next seed. Throws InputError for invalid sizes and
/// GenerationError if no attempt succeeds.
Sequence realize_sorted_type(std::span<const std::size_t> sizes,
                             std::uint64_t seed, RealizeStats* stats = nullptr);

/// n split into k near-equal block sizes (the first n % k get one extra).
std::vector<std::size_t> uniform_sizes(std::size_t n, std::size_t k);

}  // namespace adasort
