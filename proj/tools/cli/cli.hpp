// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace adasort::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kVerification = 3,
};

/// One benchmark trial.
struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::string param;
  std::string algo;
  std::string pivot;
  std::uint64_t seed = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t moves = 0;
  double bound_B = 0.0;
  double entropy_H = 0.0;
  double ratio = 0.0;
  std::uint64_t elapsed_ns = 0;
};

inline constexpr const char* kBenchHeader =
    "family,n,param,algo,pivot,seed,comparisons,moves,bound_B,entropy_H,ratio,elapsed_ns";

inline constexpr const char* kCensusHeader =
    "type,nu,eq1_rhs,applicable,info_bits,worst_case_comparisons";

inline constexpr const char* kProfileHeader =
    "n,k,sizes,entropy_H,bound_B,inversions,displacement,runs,distinct";

std::string to_csv(const BenchRow& row);

/// Runs one command line (without the program name) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace adasort::cli
