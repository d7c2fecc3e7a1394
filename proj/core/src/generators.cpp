// SPDX-License-Identifier: Apache-2.0
#include "adasort/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "adasort/errors.hpp"
#include "adasort/measures.hpp"
#include "adasort/selection.hpp"

namespace adasort {
namespace {

constexpr std::uint32_t kRealizeAttempts = 64;

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::sorted, "sorted"},
    {Family::reverse, "reverse"},
    {Family::random, "random"},
    {Family::displacement, "displacement"},
    {Family::transpose, "transpose"},
    {Family::sorted_type, "sorted-type"},
    {Family::multiset, "multiset"},
}};

std::vector<Key> iota_keys(std::size_t n) {
  std::vector<Key> keys(n);
  std::iota(keys.begin(), keys.end(), Key{1});
  return keys;
}

std::vector<Key> displaced_keys(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Key> keys = iota_keys(n);
  if (k == 0) return keys;
  const std::size_t width = k + 1;
  for (std::size_t start = 0, b = 0; start < n; start += width, ++b) {
    if (b % 2 == 1) continue;
    const std::size_t len = std::min(width, n - start);
    if (len < 2) continue;
    std::size_t shift;
    if (b == 0) {
      // The first block is always full; a one-step rotation either way
      // moves one element by exactly k.
      shift = (rng() & 1U) != 0 ? 1 : len - 1;
    } else {
      shift = std::uniform_int_distribution<std::size_t>(1, len - 1)(rng);
    }
    auto first = keys.begin() + static_cast<std::ptrdiff_t>(start);
    std::rotate(first, first + static_cast<std::ptrdiff_t>(shift),
                first + static_cast<std::ptrdiff_t>(len));
  }
  return keys;
}

std::vector<Key> multiset_keys(std::size_t n, std::size_t h, Rng& rng) {
  std::vector<Key> keys;
  keys.reserve(n);
  for (std::size_t v = 1; v <= h; ++v) keys.push_back(static_cast<Key>(v));
  std::uniform_int_distribution<Key> value(1, static_cast<Key>(h));
  while (keys.size() < n) keys.push_back(value(rng));
  std::shuffle(keys.begin(), keys.end(), rng);
  return keys;
}

void check_block_sizes(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw InputError("sorted-type needs at least one block");
  if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
    throw InputError("sorted-type block sizes must be positive");
  }
}

// One seeded attempt; empty result when the repair does not settle.
std::optional<Sequence> try_realize(std::span<const std::size_t> sizes,
                                    std::size_t n, Rng& rng,
                                    std::uint64_t& swaps) {
  const std::size_t k = sizes.size();
  std::vector<std::size_t> lo(k), hi(k);
  std::vector<std::uint32_t> labels;
  labels.reserve(n);
  for (std::size_t i = 0, offset = 0; i < k; offset += sizes[i], ++i) {
    lo[i] = offset;
    hi[i] = offset + sizes[i] - 1;
    labels.insert(labels.end(), sizes[i], static_cast<std::uint32_t>(i));
  }
  std::shuffle(labels.begin(), labels.end(), rng);

  // pos_of[r]: input position of the item with 0-based rank r.
  std::vector<std::size_t> pos_of(n);
  std::vector<std::size_t> taken(k, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const std::uint32_t b = labels[p];
    pos_of[lo[b] + taken[b]++] = p;
  }

  // Rank-adjacent blocks chain when the lower block ends before the upper
  // one starts. Exchanging those two items breaks the chain while keeping
  // both blocks increasing in position.
  swaps = 0;
  bool settled = false;
  for (std::size_t sweep = 0; sweep <= n && !settled; ++sweep) {
    settled = true;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (pos_of[hi[i]] < pos_of[lo[i + 1]]) {
        std::swap(pos_of[hi[i]], pos_of[lo[i + 1]]);
        ++swaps;
        settled = false;
      }
    }
  }
  if (!settled) return std::nullopt;

  std::vector<Key> keys(n);
  for (std::size_t r = 0; r < n; ++r) keys[pos_of[r]] = static_cast<Key>(r + 1);
  return make_sequence(keys);
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "sorted";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, known] : kFamilyNames) {
    if (known == name) return f;
  }
  return std::nullopt;
}

void validate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::displacement:
      if (spec.n == 0) throw InputError("displacement family needs n >= 1");
      if (spec.k > spec.n - 1) {
        throw InputError("displacement bound k must be at most n-1");
      }
      break;
    case Family::sorted_type: {
      check_block_sizes(spec.sizes);
      const std::size_t total =
          std::accumulate(spec.sizes.begin(), spec.sizes.end(), std::size_t{0});
      if (total != spec.n) {
        throw InputError("sorted-type sizes sum to " + std::to_string(total) +
                         ", expected n = " + std::to_string(spec.n));
      }
      break;
    }
    case Family::multiset:
      if (spec.h < 1 || spec.h > spec.n) {
        throw InputError("multiset family needs 1 <= h <= n");
      }
      break;
    default:
      break;
  }
}

Sequence generate(const GenSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  const std::size_t n = spec.n;
  std::vector<Key> keys;
  switch (spec.family) {
    case Family::sorted:
      keys = iota_keys(n);
      break;
    case Family::reverse:
      keys = iota_keys(n);
      std::reverse(keys.begin(), keys.end());
      break;
    case Family::random:
      keys = iota_keys(n);
      std::shuffle(keys.begin(), keys.end(), rng);
      break;
    case Family::displacement:
      keys = displaced_keys(n, spec.k, rng);
      break;
    case Family::transpose: {
      keys = iota_keys(n);
      const auto half = static_cast<std::ptrdiff_t>(n / 2);
      std::rotate(keys.begin(), keys.begin() + half, keys.end());
      break;
    }
    case Family::sorted_type:
      return realize_sorted_type(spec.sizes, spec.seed);
    case Family::multiset:
      keys = multiset_keys(n, spec.h, rng);
      break;
  }
  return make_sequence(keys);
}

Sequence realize_sorted_type(std::span<const std::size_t> sizes,
                             std::uint64_t seed, RealizeStats* stats) {
  check_block_sizes(sizes);
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  const std::vector<std::size_t> want = canonical_type(sizes);

  for (std::uint32_t attempt = 0; attempt < kRealizeAttempts; ++attempt) {
    Rng rng(seed + attempt);
    std::uint64_t swaps = 0;
    std::optional<Sequence> seq = try_realize(sizes, n, rng, swaps);
    if (!seq) continue;
    if (canonical_type(decompose_maximal(*seq).sizes) != want) continue;
    if (stats != nullptr) *stats = {attempt, swaps};
    return std::move(*seq);
  }
  throw GenerationError("could not realize sorted-type " + format_type(sizes) +
                        " after " + std::to_string(kRealizeAttempts) + " seeds");
}

std::vector<std::size_t> uniform_sizes(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw InputError("block count must be in [1, n]");
  std::vector<std::size_t> sizes(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++sizes[i];
  return sizes;
}

}  // namespace adasort
