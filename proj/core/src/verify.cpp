// SPDX-License-Identifier: Apache-2.0
#include "adasort/verify.hpp"

#include <algorithm>
#include <unordered_map>

namespace adasort {

bool sorted_check(std::span<const Item> items, Meter& meter) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (meter.less(items[i], items[i - 1])) return false;
  }
  return true;
}

bool verify_sorted_stable_permutation(std::span<const Item> input,
                                      std::span<const Item> output) {
  if (input.size() != output.size()) return false;
  for (std::size_t i = 1; i < output.size(); ++i) {
    const Item& prev = output[i - 1];
    const Item& cur = output[i];
    if (cur.key < prev.key) return false;
    if (cur.key == prev.key && cur.tag <= prev.tag) return false;
  }
  // Same (key, tag) multiset: each input tag must appear once in the output
  // with the same key.
  std::unordered_map<Tag, Key> expected;
  expected.reserve(input.size());
  for (const Item& it : input) {
    if (!expected.emplace(it.tag, it.key).second) return false;
  }
  for (const Item& it : output) {
    auto found = expected.find(it.tag);
    if (found == expected.end() || found->second != it.key) return false;
    expected.erase(found);
  }
  return expected.empty();
}

}  // namespace adasort
