// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "adasort/detail/merge_sort.hpp"
#include "adasort/errors.hpp"
#include "adasort/sorters.hpp"
#include "adasort/verify.hpp"

namespace adasort {
namespace {

// Snapshots the meter so an outcome reports only what its run charged.
class RunScope {
 public:
  explicit RunScope(Meter& meter)
      : meter_(meter), comparisons_(meter.comparisons()), moves_(meter.moves()) {}

  void finish(SortOutcome& out) const {
    out.comparisons = meter_.comparisons() - comparisons_;
    out.moves = meter_.moves() - moves_;
  }

 private:
  Meter& meter_;
  std::uint64_t comparisons_;
  std::uint64_t moves_;
};

}  // namespace

SortOutcome insertion_sort(std::span<const Item> items, Meter& meter) {
  RunScope scope(meter);
  SortOutcome out;
  out.output.assign(items.begin(), items.end());
  detail::insertion_sort(std::span<Item>(out.output), meter);
  scope.finish(out);
  return out;
}

SortOutcome merge_sort(std::span<const Item> items, Meter& meter) {
  RunScope scope(meter);
  SortOutcome out;
  out.output.assign(items.begin(), items.end());
  Sequence scratch(items.size());
  detail::merge_sort(std::span<Item>(out.output), std::span<Item>(scratch), meter);
  scope.finish(out);
  return out;
}

SortOutcome natural_merge_sort(std::span<const Item> items, Meter& meter) {
  RunScope scope(meter);
  SortOutcome out;
  Sequence& a = out.output;
  a.assign(items.begin(), items.end());
  const std::size_t n = a.size();

  // bounds[r] .. bounds[r+1] is run r.
  std::vector<std::size_t> bounds{0};
  for (std::size_t i = 1; i < n; ++i) {
    if (meter.less(a[i], a[i - 1])) bounds.push_back(i);
  }
  bounds.push_back(n);

  Sequence scratch(n);
  const std::span<const Item> view(a);
  while (bounds.size() > 2) {
    std::vector<std::size_t> merged{0};
    std::size_t r = 0;
    for (; r + 2 < bounds.size(); r += 2) {
      const std::size_t lo = bounds[r], mid = bounds[r + 1], hi = bounds[r + 2];
      detail::merge_into<Item>(view.subspan(lo, mid - lo), view.subspan(mid, hi - mid),
                               std::span<Item>(scratch).subspan(lo, hi - lo), meter);
      std::copy(scratch.begin() + lo, scratch.begin() + hi, a.begin() + lo);
      meter.add_moves(hi - lo);
      merged.push_back(hi);
    }
    if (r + 1 < bounds.size() && merged.back() != n) merged.push_back(n);
    bounds = std::move(merged);
  }
  scope.finish(out);
  return out;
}

SortOutcome blocked_sort(std::span<const Item> items, std::size_t block,
                         Meter& meter) {
  const std::size_t n = items.size();
  if (block < 1 || block > n) {
    throw InputError("block size " + std::to_string(block) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  RunScope scope(meter);
  SortOutcome out;
  out.output.assign(items.begin(), items.end());
  std::span<Item> a(out.output);
  Sequence scratch(std::min(2 * block, n));

  const auto sort_segments = [&](std::size_t first) {
    for (std::size_t start = first; start < n; start += 2 * block) {
      const std::size_t len = std::min(2 * block, n - start);
      detail::merge_sort(a.subspan(start, len), std::span<Item>(scratch).first(len), meter);
    }
  };
  sort_segments(0);
  sort_segments(block);
  out.sorted = sorted_check(a, meter);
  scope.finish(out);
  return out;
}

}  // namespace adasort
