// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "adasort/item.hpp"
#include "adasort/meter.hpp"

namespace adasort {

/// Scans adjacent pairs left to right and stops at the first descent.
/// Charges (index of the first violating pair + 1) comparisons, n-1 when the
/// keys are non-decreasing, and nothing when n <= 1.
bool sorted_check(std::span<const Item> items, Meter& meter);

/// Oracle: `output` has non-decreasing keys, holds exactly the (key, tag)
/// pairs of `input`, and lists equal keys in increasing tag order.
/// Not metered. A length mismatch yields false.
bool verify_sorted_stable_permutation(std::span<const Item> input,
                                      std::span<const Item> output);

}  // namespace adasort
