// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace adasort {

using Key = std::int64_t;
using Tag = std::size_t;

/// An input element: the key that is compared, plus the element's original
/// 0-based position. The tag is a stability witness and never takes part in
/// a counted comparison.
struct Item {
  Key key = 0;
  Tag tag = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

/// Tags of a well-formed sequence are a permutation of {0..n-1}.
using Sequence = std::vector<Item>;

/// Builds a sequence tagging each key with its position.
inline Sequence make_sequence(std::span<const Key> keys) {
  Sequence seq;
  seq.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) seq.push_back({keys[i], i});
  return seq;
}

inline Sequence make_sequence(std::initializer_list<Key> keys) {
  return make_sequence(std::span<const Key>(keys.begin(), keys.size()));
}

inline std::vector<Key> keys_of(std::span<const Item> items) {
  std::vector<Key> keys;
  keys.reserve(items.size());
  for (const Item& it : items) keys.push_back(it.key);
  return keys;
}

}  // namespace adasort
