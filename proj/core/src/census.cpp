// SPDX-License-Identifier: Apache-2.0
#include "adasort/census.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "adasort/errors.hpp"
#include "adasort/measures.hpp"

namespace adasort {
namespace {

namespace mp = boost::multiprecision;

struct ClassStats {
  std::uint64_t nu = 0;
  std::uint64_t worst = 0;
};

using Tally = std::map<std::vector<std::size_t>, ClassStats>;

mp::cpp_int factorial(std::size_t n) {
  mp::cpp_int f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t sort_cost(std::span<const std::size_t> perm, PivotStrategy strategy,
                        PartitionSortOptions options) {
  Sequence seq;
  seq.reserve(perm.size());
  for (std::size_t p = 0; p < perm.size(); ++p) {
    seq.push_back({static_cast<Key>(perm[p] + 1), p});
  }
  Meter meter;
  return partition_sort(seq, strategy, meter, options).comparisons;
}

// Every permutation of 0..n-1 that starts with `first`.
Tally tally_prefix(std::size_t n, std::size_t first,
                   const std::optional<PivotStrategy>& worst_case,
                   PartitionSortOptions options) {
  std::vector<std::size_t> perm(n);
  perm[0] = first;
  for (std::size_t i = 0, v = 0; v < n; ++v) {
    if (v != first) perm[++i] = v;
  }
  Tally tally;
  do {
    ClassStats& stats = tally[permutation_type(perm)];
    ++stats.nu;
    if (worst_case) {
      stats.worst = std::max(stats.worst, sort_cost(perm, *worst_case, options));
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return tally;
}

void check_type(std::size_t n, std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw InputError("sorted-type is empty");
  if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
    throw InputError("sorted-type sizes must be positive");
  }
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (total != n) {
    throw InputError("sorted-type " + format_type(sizes) + " does not sum to " +
                     std::to_string(n));
  }
}

}  // namespace

std::vector<std::size_t> permutation_type(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<std::size_t> pos_of(n);
  for (std::size_t p = 0; p < n; ++p) pos_of[perm[p]] = p;
  std::vector<std::size_t> sizes;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == 0 || pos_of[r] < pos_of[r - 1]) sizes.push_back(0);
    ++sizes.back();
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>{});
  return sizes;
}

double eq1_rhs(std::size_t n, std::span<const std::size_t> sizes) {
  check_type(n, sizes);
  const std::size_t k = sizes.size();
  if (2 * k > n) {
    throw DomainError("lower bound needs 2k <= n (k = " + std::to_string(k) +
                      ", n = " + std::to_string(n) + ")");
  }
  mp::cpp_int multinomial = factorial(n);
  for (std::size_t s : sizes) multinomial /= factorial(s);
  const mp::cpp_int numerator =
      multinomial * factorial(k) * factorial(n - 2 * k) * factorial(2 * k);
  const mp::cpp_rational value(numerator, factorial(n));
  return value.convert_to<double>();
}

std::vector<CensusRow> enumerate_census(std::size_t n,
                                        std::optional<PivotStrategy> worst_case,
                                        PartitionSortOptions options) {
  if (n < 1 || n > kCensusMaxN) {
    throw InputError("census needs 1 <= n <= " + std::to_string(kCensusMaxN));
  }
  if (worst_case && n > kWorstCaseMaxN) {
    throw InputError("worst-case census needs n <= " + std::to_string(kWorstCaseMaxN));
  }

  // Disjoint ranges by leading element; merged in a fixed order.
  std::vector<std::future<Tally>> parts;
  parts.reserve(n);
  for (std::size_t first = 0; first < n; ++first) {
    parts.push_back(std::async(std::launch::async, tally_prefix, n, first,
                               worst_case, options));
  }
  Tally total;
  for (auto& part : parts) {
    for (const auto& [type, stats] : part.get()) {
      ClassStats& acc = total[type];
      acc.nu += stats.nu;
      acc.worst = std::max(acc.worst, stats.worst);
    }
  }

  std::vector<CensusRow> rows;
  rows.reserve(total.size());
  for (const auto& [type, stats] : total) {
    CensusRow row;
    row.type = type;
    row.nu = stats.nu;
    row.info_bits = std::log2(static_cast<double>(stats.nu));
    if (2 * type.size() <= n) row.eq1_rhs = eq1_rhs(n, type);
    if (worst_case) row.worst_case_comparisons = stats.worst;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
    if (a.type.size() != b.type.size()) return a.type.size() < b.type.size();
    return a.type > b.type;
  });
  return rows;
}

std::uint64_t worst_case_over_class(std::size_t n,
                                    std::span<const std::size_t> sizes,
                                    PivotStrategy strategy,
                                    PartitionSortOptions options) {
  if (n < 1 || n > kWorstCaseMaxN) {
    throw InputError("worst case over a class needs 1 <= n <= " +
                     std::to_string(kWorstCaseMaxN));
  }
  check_type(n, sizes);
  const std::vector<std::size_t> want = canonical_type(sizes);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  bool found = false;
  std::uint64_t worst = 0;
  do {
    if (permutation_type(perm) != want) continue;
    found = true;
    worst = std::max(worst, sort_cost(perm, strategy, options));
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) {
    throw InputError("no permutation of size " + std::to_string(n) +
                     " has sorted-type " + format_type(want));
  }
  return worst;
}

}  // namespace adasort
