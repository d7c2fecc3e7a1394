// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "adasort/errors.hpp"
#include "adasort/generators.hpp"
#include "adasort/measures.hpp"

namespace adasort {
namespace {

using Sizes = std::vector<std::size_t>;

bool tags_are_positions(const Sequence& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].tag != i) return false;
  return true;
}

bool is_permutation_of_iota(const Sequence& s) {
  std::vector<Key> keys = keys_of(s);
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i] != static_cast<Key>(i + 1)) return false;
  return true;
}

TEST(Generate, Transpose) {
  EXPECT_EQ(keys_of(generate({.family = Family::transpose, .n = 8})),
            (std::vector<Key>{5, 6, 7, 8, 1, 2, 3, 4}));
  EXPECT_EQ(keys_of(generate({.family = Family::transpose, .n = 7})),
            (std::vector<Key>{4, 5, 6, 7, 1, 2, 3}));
}

TEST(Generate, SortedAndReverse) {
  EXPECT_EQ(keys_of(generate({.family = Family::sorted, .n = 5})),
            (std::vector<Key>{1, 2, 3, 4, 5}));
  EXPECT_EQ(keys_of(generate({.family = Family::reverse, .n = 4})),
            (std::vector<Key>{4, 3, 2, 1}));
  EXPECT_TRUE(generate({.family = Family::sorted, .n = 0}).empty());
}

TEST(Generate, UnitDisplacementIsAdjacentSwaps) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Sequence s = generate({.family = Family::displacement, .n = 16, .k = 1, .seed = seed});
    EXPECT_EQ(max_displacement(s), 1u);
    // Alternate pairs exchanged: 2 1 3 4 6 5 7 8 ...
    for (std::size_t p = 0; p < 16; p += 2) {
      const bool swapped = (p / 2) % 2 == 0;
      EXPECT_EQ(s[p].key, static_cast<Key>(swapped ? p + 2 : p + 1));
    }
  }
}

TEST(Generate, DisplacementBoundIsAttained) {
  for (std::size_t n : {2u, 3u, 10u, 100u, 1000u}) {
    for (std::size_t k : {1u, 2u, 5u, 64u, 999u}) {
      if (k > n - 1) continue;
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Sequence s =
            generate({.family = Family::displacement, .n = n, .k = k, .seed = seed});
        ASSERT_EQ(max_displacement(s), k) << "n=" << n << " k=" << k;
        ASSERT_TRUE(is_permutation_of_iota(s));
      }
    }
  }
  EXPECT_EQ(max_displacement(generate({.family = Family::displacement, .n = 9, .k = 0})), 0u);
}

TEST(Generate, Multiset) {
  for (std::size_t h : {1u, 2u, 4u, 16u, 100u}) {
    const Sequence s = generate({.family = Family::multiset, .n = 100, .h = h, .seed = h});
    ASSERT_EQ(s.size(), 100u);
    EXPECT_EQ(distinct_keys(s), h);
    for (const Item& it : s) {
      EXPECT_GE(it.key, 1);
      EXPECT_LE(it.key, static_cast<Key>(h));
    }
  }
}

TEST(Generate, EveryFamilyProducesValidSequences) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 2 + seed % 97;
    const GenSpec specs[] = {
        {.family = Family::sorted, .n = n, .seed = seed},
        {.family = Family::reverse, .n = n, .seed = seed},
        {.family = Family::random, .n = n, .seed = seed},
        {.family = Family::displacement, .n = n, .k = 1 + seed % (n - 1), .seed = seed},
        {.family = Family::transpose, .n = n, .seed = seed},
        {.family = Family::sorted_type, .n = n, .sizes = uniform_sizes(n, 1 + seed % n), .seed = seed},
        {.family = Family::multiset, .n = n, .h = 1 + seed % n, .seed = seed},
    };
    for (const GenSpec& spec : specs) {
      const Sequence s = generate(spec);
      ASSERT_EQ(s.size(), n);
      ASSERT_TRUE(tags_are_positions(s));
      if (spec.family != Family::multiset) {
        ASSERT_TRUE(is_permutation_of_iota(s)) << family_name(spec.family);
      }
    }
  }
}

TEST(Generate, DeterministicInSeed) {
  const GenSpec spec{.family = Family::random, .n = 500, .seed = 42};
  EXPECT_EQ(generate(spec), generate(spec));
  GenSpec other = spec;
  other.seed = 43;
  EXPECT_NE(generate(spec), generate(other));
}

TEST(Generate, RejectsInvalidSpecs) {
  EXPECT_THROW(generate({.family = Family::displacement, .n = 5, .k = 5}), InputError);
  EXPECT_THROW(generate({.family = Family::displacement, .n = 0, .k = 0}), InputError);
  EXPECT_THROW(generate({.family = Family::multiset, .n = 5, .h = 0}), InputError);
  EXPECT_THROW(generate({.family = Family::multiset, .n = 5, .h = 6}), InputError);
  EXPECT_THROW(generate({.family = Family::sorted_type, .n = 6, .sizes = {3, 2}}), InputError);
  EXPECT_THROW(generate({.family = Family::sorted_type, .n = 0}), InputError);
}

TEST(FamilyNames, RoundTrip) {
  for (Family f : {Family::sorted, Family::reverse, Family::random, Family::displacement,
                   Family::transpose, Family::sorted_type, Family::multiset}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_EQ(family_name(Family::sorted_type), "sorted-type");
  EXPECT_FALSE(parse_family("shuffled").has_value());
}

TEST(RealizeSortedType, SmallExamples) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Sequence s = realize_sorted_type(Sizes{3, 2}, seed);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_EQ(canonical_type(decompose_maximal(s).sizes), (Sizes{3, 2}));
  }
  EXPECT_EQ(keys_of(realize_sorted_type(Sizes{6}, 9)), (std::vector<Key>{1, 2, 3, 4, 5, 6}));
  for (std::size_t n : {2u, 5u, 33u}) {
    const Sequence s = realize_sorted_type(Sizes(n, 1), 4);
    EXPECT_EQ(decompose_maximal(s).sizes.size(), n);
  }
}

TEST(RealizeSortedType, RoundTripsRandomSizeVectors) {
  std::mt19937_64 rng(107);
  std::uint64_t total_reseeds = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4096)(rng);
    // Mix of many tiny blocks and a few large ones.
    const std::size_t max_block =
        trial % 3 == 0 ? 3 : std::uniform_int_distribution<std::size_t>(1, n)(rng);
    Sizes sizes;
    for (std::size_t left = n; left > 0;) {
      const std::size_t s = std::uniform_int_distribution<std::size_t>(
          1, std::min(left, max_block))(rng);
      sizes.push_back(s);
      left -= s;
    }
    RealizeStats stats;
    const Sequence seq = realize_sorted_type(sizes, static_cast<std::uint64_t>(trial), &stats);
    ASSERT_EQ(canonical_type(decompose_maximal(seq).sizes), canonical_type(sizes));
    ASSERT_TRUE(is_permutation_of_iota(seq));
    total_reseeds += stats.reseeds;
  }
  RecordProperty("total_reseeds", std::to_string(total_reseeds));
}

TEST(RealizeSortedType, RejectsInvalidSizes) {
  EXPECT_THROW(realize_sorted_type(Sizes{}, 0), InputError);
  EXPECT_THROW(realize_sorted_type(Sizes{2, 0, 1}, 0), InputError);
}

TEST(UniformSizes, SplitsEvenly) {
  EXPECT_EQ(uniform_sizes(10, 3), (Sizes{4, 3, 3}));
  EXPECT_EQ(uniform_sizes(16, 4), (Sizes{4, 4, 4, 4}));
  EXPECT_THROW(uniform_sizes(3, 4), InputError);
  EXPECT_THROW(uniform_sizes(3, 0), InputError);
}

}  // namespace
}  // namespace adasort
