// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

#include "adasort/meter.hpp"

namespace adasort::detail {

inline Key key_of(Key k) { return k; }
inline Key key_of(const Item& it) { return it.key; }

/// Merges two adjacent sorted ranges into `out`. Ties take from the left
/// range, so the merge is stable.
template <class T>
void merge_into(std::span<const T> left, std::span<const T> right,
                std::span<T> out, Meter& meter) {
  std::size_t i = 0, j = 0, o = 0;
  while (i < left.size() && j < right.size()) {
    if (meter.less(key_of(right[j]), key_of(left[i]))) {
      out[o++] = right[j++];
    } else {
      out[o++] = left[i++];
    }
  }
  while (i < left.size()) out[o++] = left[i++];
  while (j < right.size()) out[o++] = right[j++];
  meter.add_moves(out.size());
}

/// Stable top-down merge sort; `scratch` must be as long as `data`.
template <class T>
void merge_sort(std::span<T> data, std::span<T> scratch, Meter& meter) {
  const std::size_t n = data.size();
  if (n < 2) return;
  const std::size_t mid = n / 2;
  merge_sort(data.first(mid), scratch.first(mid), meter);
  merge_sort(data.subspan(mid), scratch.subspan(mid), meter);
  merge_into<T>(data.first(mid), data.subspan(mid), scratch, meter);
  std::copy(scratch.begin(), scratch.end(), data.begin());
  meter.add_moves(n);
}

/// Stable insertion sort; one comparison per probe.
template <class T>
void insertion_sort(std::span<T> data, Meter& meter) {
  for (std::size_t i = 1; i < data.size(); ++i) {
    T x = data[i];
    std::size_t j = i;
    while (j > 0 && meter.less(key_of(x), key_of(data[j - 1]))) {
      data[j] = data[j - 1];
      --j;
    }
    if (j != i) {
      data[j] = x;
      meter.add_moves(i - j + 1);
    }
  }
}

}  // namespace adasort::detail
