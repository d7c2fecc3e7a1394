// SPDX-License-Identifier: Apache-2.0
#include "adasort/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "adasort/errors.hpp"

namespace adasort {
namespace {

void check_sizes(std::span<const std::size_t> sizes, std::size_t n) {
  if (sizes.empty()) throw InputError("block sizes are empty");
  std::size_t total = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw InputError("block sizes must be positive");
    total += s;
  }
  if (total != n) {
    throw InputError("block sizes sum to " + std::to_string(total) +
                     ", expected " + std::to_string(n));
  }
}

std::uint64_t count_split_inversions(std::span<Key> keys, std::span<Key> scratch) {
  const std::size_t n = keys.size();
  if (n < 2) return 0;
  const std::size_t mid = n / 2;
  std::uint64_t count = count_split_inversions(keys.first(mid), scratch.first(mid)) +
                        count_split_inversions(keys.subspan(mid), scratch.subspan(mid));
  std::size_t i = 0, j = mid, o = 0;
  while (i < mid && j < n) {
    if (keys[j] < keys[i]) {
      count += mid - i;
      scratch[o++] = keys[j++];
    } else {
      scratch[o++] = keys[i++];
    }
  }
  while (i < mid) scratch[o++] = keys[i++];
  while (j < n) scratch[o++] = keys[j++];
  std::copy(scratch.begin(), scratch.end(), keys.begin());
  return count;
}

}  // namespace

std::vector<std::size_t> rank_order(std::span<const Item> items) {
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[a].key < items[b].key;
  });
  return order;
}

Decomposition decompose_maximal(std::span<const Item> items) {
  Decomposition d;
  const std::vector<std::size_t> order = rank_order(items);
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r == 0 || order[r] < order[r - 1]) d.blocks.emplace_back();
    d.blocks.back().push_back(order[r]);
  }
  d.sizes.reserve(d.blocks.size());
  for (const auto& block : d.blocks) d.sizes.push_back(block.size());
  return d;
}

std::uint64_t inversions(std::span<const Item> items) {
  std::vector<Key> keys = keys_of(items);
  std::vector<Key> scratch(keys.size());
  return count_split_inversions(keys, scratch);
}

std::size_t max_displacement(std::span<const Item> items) {
  const std::vector<std::size_t> order = rank_order(items);
  std::size_t worst = 0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t d = order[r] > r ? order[r] - r : r - order[r];
    worst = std::max(worst, d);
  }
  return worst;
}

std::size_t count_runs(std::span<const Item> items) {
  if (items.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].key < items[i - 1].key) ++runs;
  }
  return runs;
}

std::size_t distinct_keys(std::span<const Item> items) {
  std::unordered_set<Key> seen;
  for (const Item& it : items) seen.insert(it.key);
  return seen.size();
}

double entropy(std::span<const std::size_t> sizes, std::size_t n) {
  check_sizes(sizes, n);
  const double total = static_cast<double>(n);
  double h = 0.0;
  for (std::size_t s : sizes) {
    const double p = static_cast<double>(s) / total;
    h -= p * std::log2(p);
  }
  // A single block gives -1*log2(1) == -0.0.
  return h <= 0.0 ? 0.0 : h;
}

double theorem_bound(std::span<const std::size_t> sizes, std::size_t n) {
  check_sizes(sizes, n);
  const double total = static_cast<double>(n);
  double b = total;
  for (std::size_t s : sizes) {
    const double ni = static_cast<double>(s);
    b += ni * std::log2(total / ni + 1.0);
  }
  return b;
}

Profile profile(std::span<const Item> items) {
  Profile p;
  p.n = items.size();
  const Decomposition d = decompose_maximal(items);
  p.sizes = canonical_type(d.sizes);
  p.k = p.sizes.size();
  if (p.n > 0) {
    p.entropy_bits = entropy(p.sizes, p.n);
    p.bound = theorem_bound(p.sizes, p.n);
  }
  p.inversions = inversions(items);
  p.max_displacement = max_displacement(items);
  p.runs = count_runs(items);
  p.distinct_keys = distinct_keys(items);
  return p;
}

std::vector<std::size_t> canonical_type(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> type(sizes.begin(), sizes.end());
  std::sort(type.begin(), type.end(), std::greater<>{});
  return type;
}

std::string format_type(std::span<const std::size_t> sizes, char sep) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += std::to_string(sizes[i]);
  }
  return out;
}

}  // namespace adasort
