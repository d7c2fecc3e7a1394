// SPDX-License-Identifier: Apache-2.0
#include "adasort/selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adasort/detail/merge_sort.hpp"
#include "adasort/errors.hpp"

namespace adasort {
namespace {

// Inputs at or below this size are finished with a plain randomized
// three-way quickselect instead of another sampling round.
constexpr std::size_t kSampledCutoff = 600;

void check_rank(std::size_t rank, std::size_t n) {
  if (n == 0) throw InputError("selection from an empty sequence");
  if (rank < 1 || rank > n) {
    throw InputError("rank " + std::to_string(rank) + " outside [1, " +
                     std::to_string(n) + "]");
  }
}

struct Split {
  std::vector<Key> less;
  std::vector<Key> greater;
  std::size_t equal = 0;
};

Split split_around(const std::vector<Key>& keys, Key pivot, Meter& meter) {
  Split s;
  for (Key x : keys) {
    if (meter.less(x, pivot)) {
      s.less.push_back(x);
    } else if (meter.less(pivot, x)) {
      s.greater.push_back(x);
    } else {
      ++s.equal;
    }
  }
  meter.add_moves(s.less.size() + s.greater.size());
  return s;
}

Key quickselect(std::vector<Key> keys, std::size_t rank, Rng& rng, Meter& meter) {
  while (keys.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    const Key pivot = keys[pick(rng)];
    Split s = split_around(keys, pivot, meter);
    if (rank <= s.less.size()) {
      keys = std::move(s.less);
    } else if (rank <= s.less.size() + s.equal) {
      return pivot;
    } else {
      rank -= s.less.size() + s.equal;
      keys = std::move(s.greater);
    }
  }
  return keys.front();
}

}  // namespace

Key select_rank_deterministic(std::vector<Key> keys, std::size_t rank,
                              Meter& meter) {
  check_rank(rank, keys.size());
  while (true) {
    const std::size_t n = keys.size();
    if (n <= 5) {
      detail::insertion_sort(std::span<Key>(keys), meter);
      return keys[rank - 1];
    }
    std::vector<Key> medians;
    medians.reserve((n + 4) / 5);
    for (std::size_t g = 0; g < n; g += 5) {
      std::span<Key> group(keys.data() + g, std::min<std::size_t>(5, n - g));
      detail::insertion_sort(group, meter);
      medians.push_back(group[(group.size() - 1) / 2]);
    }
    meter.add_moves(medians.size());
    const std::size_t m = medians.size();
    const Key pivot = select_rank_deterministic(std::move(medians), median_rank(m), meter);

    Split s = split_around(keys, pivot, meter);
    if (rank <= s.less.size()) {
      keys = std::move(s.less);
    } else if (rank <= s.less.size() + s.equal) {
      return pivot;
    } else {
      rank -= s.less.size() + s.equal;
      keys = std::move(s.greater);
    }
  }
}

Key select_exact_median(std::span<const Item> items, Meter& meter) {
  if (items.empty()) throw InputError("median of an empty sequence");
  return select_rank_deterministic(keys_of(items), median_rank(items.size()), meter);
}

RandomPivot select_random_middle(std::span<const Item> items, Rng& rng,
                                 Meter& meter) {
  const std::size_t n = items.size();
  if (n < 4) return {select_exact_median(items, meter), 0, true};

  const std::size_t lo = (n + 3) / 4;
  const std::size_t hi = 3 * n / 4;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint32_t attempt = 1; attempt <= kRandomMiddleAttemptCap; ++attempt) {
    const std::size_t i = pick(rng);
    const Key x = items[i].key;
    // Rank in (key, position) order: earlier items count when key <= x,
    // later ones when key < x. One comparison each.
    std::size_t rank = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (!meter.less(x, items[j].key)) ++rank;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (meter.less(items[j].key, x)) ++rank;
    }
    if (rank >= lo && rank <= hi) return {x, attempt, false};
  }
  return {select_exact_median(items, meter), kRandomMiddleAttemptCap, true};
}

Key select_rank_sampled(std::vector<Key> keys, std::size_t rank, Rng& rng,
                        Meter& meter) {
  check_rank(rank, keys.size());
  while (keys.size() > kSampledCutoff) {
    const std::size_t n = keys.size();
    const double nd = static_cast<double>(n);
    const double z = std::log(nd);
    const auto s = static_cast<std::size_t>(std::ceil(0.5 * std::exp(2.0 * z / 3.0)));
    const double sd = 0.5 * std::sqrt(z * s * (nd - s) / nd);

    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<Key> sample(s);
    for (Key& x : sample) x = keys[pick(rng)];
    std::vector<Key> scratch(s);
    detail::merge_sort(std::span<Key>(sample), std::span<Key>(scratch), meter);

    const double center = static_cast<double>(rank) * s / nd - 1.0;
    const auto clamp_index = [&](double v) {
      return static_cast<std::size_t>(std::clamp(v, 0.0, static_cast<double>(s - 1)));
    };
    const Key low = sample[clamp_index(std::floor(center - sd))];
    const Key high = sample[clamp_index(std::ceil(center + sd))];

    // Test first against the bracket end that most elements fall beyond.
    std::vector<Key> below, middle, above;
    const bool low_first = 2 * rank > n;
    for (Key x : keys) {
      if (low_first) {
        if (meter.less(x, low)) {
          below.push_back(x);
        } else if (meter.less(high, x)) {
          above.push_back(x);
        } else {
          middle.push_back(x);
        }
      } else {
        if (meter.less(high, x)) {
          above.push_back(x);
        } else if (meter.less(x, low)) {
          below.push_back(x);
        } else {
          middle.push_back(x);
        }
      }
    }
    meter.add_moves(n);

    if (middle.size() == n) {
      if (low == high) return low;
      break;  // every key inside the bracket; sampling cannot narrow it
    }
    if (rank <= below.size()) {
      keys = std::move(below);
    } else if (rank <= below.size() + middle.size()) {
      rank -= below.size();
      keys = std::move(middle);
    } else {
      rank -= below.size() + middle.size();
      keys = std::move(above);
    }
  }
  return quickselect(std::move(keys), rank, rng, meter);
}

Key select_floyd_rivest(std::span<const Item> items, Rng& rng, Meter& meter) {
  if (items.empty()) throw InputError("median of an empty sequence");
  return select_rank_sampled(keys_of(items), median_rank(items.size()), rng, meter);
}

}  // namespace adasort
