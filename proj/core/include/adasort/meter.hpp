// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adasort/item.hpp"

namespace adasort {

/// Every key evaluation recorded by a Meter with an attached log.
using ComparisonLog = std::vector<std::pair<Key, Key>>;

/// Comparison and move counters for one algorithm run.
///
/// All key-vs-key tests in the sorters and selectors go through less(), so
/// comparisons() is exactly the number of key evaluations performed. A meter
/// is owned by a single run; it is not synchronized.
class Meter {
 public:
  bool less(Key a, Key b) {
    ++comparisons_;
    if (log_ != nullptr) log_->emplace_back(a, b);
    return a < b;
  }
  bool less(const Item& a, const Item& b) { return less(a.key, b.key); }

  void add_moves(std::uint64_t count) { moves_ += count; }

  std::uint64_t comparisons() const { return comparisons_; }
  std::uint64_t moves() const { return moves_; }

  /// Records every subsequent comparison into `log` (nullptr detaches).
  void attach_log(ComparisonLog* log) { log_ = log; }

 private:
  std::uint64_t comparisons_ = 0;
  std::uint64_t moves_ = 0;
  ComparisonLog* log_ = nullptr;
};

}  // namespace adasort
