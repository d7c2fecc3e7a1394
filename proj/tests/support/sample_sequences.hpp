// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "adasort/item.hpp"

// Example sequences used throughout the tests.
namespace adasort::testing {

inline const std::vector<Key> kSortedSixteen{4,  6,  8,  23, 25, 33, 34, 39,
                                             45, 55, 56, 62, 68, 72, 84, 85};
// Neighbouring pairs exchanged; every element within distance 1.
inline const std::vector<Key> kAdjacentSwaps{6,  4,  23, 8,  33, 25, 39, 34,
                                             45, 56, 55, 62, 72, 68, 85, 84};
// Halves exchanged; displacement n/2.
inline const std::vector<Key> kHalvesSwapped{45, 55, 56, 62, 68, 72, 84, 85,
                                             4,  6,  8,  23, 25, 33, 34, 39};
inline const std::vector<Key> kInterleavedHalves{4,  8,  25, 34, 45, 56, 68, 84,
                                                 6,  23, 33, 39, 55, 62, 72, 85};
// Decomposes into blocks of sizes 2-6-2-1-1-1-2-1.
inline const std::vector<Key> kEightBlocks{62, 23, 6,  25, 85, 33, 8,  34,
                                           39, 84, 72, 55, 56, 4,  45, 68};
// Before and after the boundary swaps that split chained blocks.
inline const std::vector<Key> kChained{6,  23, 8,  25, 84, 33, 62, 34,
                                       39, 85, 68, 45, 72, 55, 4,  56};
inline const std::vector<Key> kRepaired{6,  23, 8,  25, 84, 33, 62, 34,
                                        45, 85, 72, 39, 68, 55, 4,  56};

}  // namespace adasort::testing
