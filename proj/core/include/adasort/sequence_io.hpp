// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <span>

#include "adasort/item.hpp"

namespace adasort {

// Text format: ASCII, one decimal integer per line. Lines starting with '#'
// are comments and blank lines are skipped. Tags follow line order.

/// Throws InputError naming the offending line.
Sequence read_sequence(std::istream& in);

void write_sequence(std::ostream& out, std::span<const Item> items);

}  // namespace adasort
