// SPDX-License-Identifier: Apache-2.0
#include "adasort/sorters.hpp"

#include <algorithm>
#include <array>

#include "adasort/detail/merge_sort.hpp"
#include "adasort/verify.hpp"

namespace adasort {
namespace {

enum Side : std::uint8_t { kLess = 0, kEqual = 1, kGreater = 2 };

Side classify(Key x, Key pivot, Meter& meter) {
  if (meter.less(x, pivot)) return kLess;
  if (meter.less(pivot, x)) return kGreater;
  return kEqual;
}

class PartitionSorter {
 public:
  PartitionSorter(std::size_t n, PivotStrategy strategy, Meter& meter,
                  PartitionSortOptions options)
      : meter_(meter),
        strategy_(strategy),
        options_(options),
        rng_(strategy.seed),
        scratch_(n),
        sides_(n) {}

  void sort(std::span<Item> a, std::size_t depth) {
    max_depth_ = std::max(max_depth_, depth);
    if (sorted_check(a, meter_)) return;
    if (a.size() <= options_.small_cutoff) {
      detail::insertion_sort(a, meter_);
      return;
    }

    const Key pivot = choose_pivot(a);
    std::array<std::size_t, 3> counts{};
    for (std::size_t i = 0; i < a.size(); ++i) {
      sides_[i] = classify(a[i].key, pivot, meter_);
      ++counts[sides_[i]];
    }
    std::array<std::size_t, 3> next{0, counts[kLess], counts[kLess] + counts[kEqual]};
    for (std::size_t i = 0; i < a.size(); ++i) scratch_[next[sides_[i]]++] = a[i];
    std::copy_n(scratch_.begin(), a.size(), a.begin());
    meter_.add_moves(2 * a.size());

    sort(a.first(counts[kLess]), depth + 1);
    sort(a.subspan(counts[kLess] + counts[kEqual]), depth + 1);
  }

  std::uint64_t retries() const { return retries_; }
  std::size_t max_depth() const { return max_depth_; }

 private:
  Key choose_pivot(std::span<const Item> a) {
    switch (strategy_.rule) {
      case PivotRule::exact_median:
        return select_exact_median(a, meter_);
      case PivotRule::random_middle_half: {
        const RandomPivot p = select_random_middle(a, rng_, meter_);
        retries_ += p.attempts;
        return p.key;
      }
      case PivotRule::floyd_rivest:
        return select_floyd_rivest(a, rng_, meter_);
    }
    return select_exact_median(a, meter_);
  }

  Meter& meter_;
  PivotStrategy strategy_;
  PartitionSortOptions options_;
  Rng rng_;
  std::vector<Item> scratch_;
  std::vector<std::uint8_t> sides_;
  std::uint64_t retries_ = 0;
  std::size_t max_depth_ = 0;
};

}  // namespace

std::string_view pivot_name(PivotRule rule) {
  switch (rule) {
    case PivotRule::exact_median: return "median";
    case PivotRule::random_middle_half: return "randmid";
    case PivotRule::floyd_rivest: return "fr";
  }
  return "median";
}

std::optional<PivotRule> parse_pivot(std::string_view name) {
  if (name == "median") return PivotRule::exact_median;
  if (name == "randmid") return PivotRule::random_middle_half;
  if (name == "fr") return PivotRule::floyd_rivest;
  return std::nullopt;
}

Partition stable_three_way_partition(std::span<const Item> items, Key pivot,
                                     Meter& meter) {
  Partition p;
  for (const Item& it : items) {
    switch (classify(it.key, pivot, meter)) {
      case kLess: p.less.push_back(it); break;
      case kEqual: p.equal.push_back(it); break;
      case kGreater: p.greater.push_back(it); break;
    }
  }
  meter.add_moves(items.size());
  return p;
}

SortOutcome partition_sort(std::span<const Item> items, PivotStrategy strategy,
                           Meter& meter, PartitionSortOptions options) {
  const std::uint64_t comparisons_before = meter.comparisons();
  const std::uint64_t moves_before = meter.moves();

  SortOutcome out;
  out.output.assign(items.begin(), items.end());
  PartitionSorter sorter(items.size(), strategy, meter, options);
  sorter.sort(out.output, 1);

  out.comparisons = meter.comparisons() - comparisons_before;
  out.moves = meter.moves() - moves_before;
  out.pivot_retries = sorter.retries();
  out.max_recursion_depth = sorter.max_depth();
  return out;
}

}  // namespace adasort
