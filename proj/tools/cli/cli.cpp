// SPDX-License-Identifier: Apache-2.0
#include "cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <tuple>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "adasort/adasort.hpp"

namespace adasort::cli {
namespace {

// File-level failures: unreadable input, unparsable data, failed writes.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Sequence load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  try {
    return read_sequence(in);
  } catch (const InputError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw DataError("cannot write '" + path + "'");
  body(f);
  f.flush();
  if (!f) throw DataError("write to '" + path + "' failed");
}

// Writes to `path`, or to `out` when no path is given.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
  } else {
    write_file(path, body);
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string field = text.substr(start, comma - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value == 0) {
      throw InputError("bad block size list '" + text + "'");
    }
    sizes.push_back(value);
    start = comma + 1;
  }
  return sizes;
}

// Family parameters shared by gen and bench.
struct FamilyFlags {
  std::optional<std::size_t> k;
  std::optional<std::size_t> h;
  std::string type;
  std::optional<std::size_t> blocks;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--k", f.k, "displacement bound (displacement family; block size for blocked)");
  cmd->add_option("--h", f.h, "distinct keys (multiset family)");
  cmd->add_option("--type", f.type, "block sizes, e.g. 3,2 (sorted-type family)");
  cmd->add_option("--blocks", f.blocks, "uniform block count (sorted-type family)")
      ->check(CLI::PositiveNumber);
}

GenSpec make_spec(Family family, std::size_t n, const FamilyFlags& f, std::uint64_t seed) {
  GenSpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  switch (family) {
    case Family::displacement:
      if (!f.k) throw InputError("displacement family needs --k");
      spec.k = *f.k;
      break;
    case Family::multiset:
      if (!f.h) throw InputError("multiset family needs --h");
      spec.h = *f.h;
      break;
    case Family::sorted_type:
      if (!f.type.empty()) {
        spec.sizes = parse_sizes(f.type);
      } else if (f.blocks) {
        spec.sizes = uniform_sizes(n, *f.blocks);
      } else {
        throw InputError("sorted-type family needs --type or --blocks");
      }
      break;
    default:
      break;
  }
  validate(spec);
  return spec;
}

std::string param_label(const GenSpec& spec, const FamilyFlags& f) {
  switch (spec.family) {
    case Family::displacement: return "k=" + std::to_string(spec.k);
    case Family::multiset: return "h=" + std::to_string(spec.h);
    case Family::sorted_type:
      if (!f.type.empty()) return format_type(spec.sizes);
      return "blocks=" + std::to_string(spec.sizes.size());
    default: return "";
  }
}

const std::vector<std::string> kFamilies{"sorted",    "reverse",     "random",  "displacement",
                                         "transpose", "sorted-type", "multiset"};
const std::vector<std::string> kAlgos{"psort", "blocked", "insertion", "natmerge"};
const std::vector<std::string> kPivots{"median", "randmid", "fr"};

// ---------------------------------------------------------------- gen

struct GenFlags {
  std::string family;
  std::optional<std::size_t> n;
  FamilyFlags params;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenFlags& g, std::ostream& out) {
  const Family family = *parse_family(g.family);
  std::size_t n = g.n.value_or(0);
  if (family == Family::sorted_type && !g.params.type.empty() && !g.n) {
    const auto sizes = parse_sizes(g.params.type);
    n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  } else if (!g.n) {
    throw InputError("--n is required for family " + g.family);
  }
  const Sequence seq = generate(make_spec(family, n, g.params, g.seed));
  write_file(g.out, [&](std::ostream& f) { write_sequence(f, seq); });
  fmt::print(out, "family={}\nn={}\n", g.family, seq.size());
  return kOk;
}

// ---------------------------------------------------------------- measure

struct MeasureFlags {
  std::string in;
  bool csv = false;
};

int cmd_measure(const MeasureFlags& m, std::ostream& out) {
  const Sequence seq = load(m.in);
  const Profile p = profile(seq);
  fmt::print(out,
             "n={}\nk={}\nsizes={}\nH={:.6f}\nB={:.6f}\ninversions={}\n"
             "displacement={}\nruns={}\ndistinct={}\n",
             p.n, p.k, format_type(p.sizes, ','), p.entropy_bits, p.bound, p.inversions,
             p.max_displacement, p.runs, p.distinct_keys);
  if (m.csv) {
    fmt::print(out, "{}\n{},{},{},{:.6f},{:.6f},{},{},{},{}\n", kProfileHeader, p.n, p.k,
               format_type(p.sizes), p.entropy_bits, p.bound, p.inversions,
               p.max_displacement, p.runs, p.distinct_keys);
  }
  return kOk;
}

// ---------------------------------------------------------------- sort

SortOutcome run_sorter(const std::string& algo, const Sequence& seq, PivotStrategy pivot,
                       std::optional<std::size_t> block, Meter& meter) {
  if (algo == "psort") return partition_sort(seq, pivot, meter);
  if (algo == "insertion") return insertion_sort(seq, meter);
  if (algo == "natmerge") return natural_merge_sort(seq, meter);
  const std::size_t k =
      block.value_or(std::max<std::size_t>(1, max_displacement(seq)));
  return blocked_sort(seq, k, meter);
}

struct SortFlags {
  std::string algo;
  std::string pivot = "median";
  std::uint64_t seed = 0;
  std::optional<std::size_t> k;
  std::string in;
  std::string out;
};

int cmd_sort(const SortFlags& s, std::ostream& out) {
  if (s.algo == "blocked" && !s.k) throw InputError("--algo blocked needs --k");
  const Sequence seq = load(s.in);
  Meter meter;
  const PivotStrategy pivot{*parse_pivot(s.pivot), s.seed};
  const SortOutcome result = run_sorter(s.algo, seq, pivot, s.k, meter);
  const bool ok = result.sorted && verify_sorted_stable_permutation(seq, result.output);

  fmt::print(out, "algo={}\n", s.algo);
  if (s.algo == "psort") fmt::print(out, "pivot={}\n", s.pivot);
  fmt::print(out, "n={}\nsorted={}\ncomparisons={}\nmoves={}\nretries={}\ndepth={}\n",
             seq.size(), ok, result.comparisons, result.moves, result.pivot_retries,
             result.max_recursion_depth);
  if (!s.out.empty()) {
    write_file(s.out, [&](std::ostream& f) { write_sequence(f, result.output); });
  }
  return ok ? kOk : kVerification;
}

// ---------------------------------------------------------------- bench

struct BenchFlags {
  std::vector<std::string> families;
  std::vector<std::size_t> sizes;
  std::vector<std::string> algos{"psort"};
  std::vector<std::string> pivots{"median"};
  FamilyFlags params;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string out;
};

struct BenchJob {
  GenSpec spec;
  std::string param;
  std::string algo;
  std::string pivot;
};

int cmd_bench(const BenchFlags& b, std::ostream& out) {
  std::vector<BenchJob> jobs;
  for (const std::string& family : b.families) {
    for (std::size_t n : b.sizes) {
      for (std::size_t t = 0; t < b.trials; ++t) {
        const GenSpec spec = make_spec(*parse_family(family), n, b.params, b.seed + t);
        const std::string param = param_label(spec, b.params);
        for (const std::string& algo : b.algos) {
          if (algo == "psort") {
            for (const std::string& pivot : b.pivots) jobs.push_back({spec, param, algo, pivot});
          } else {
            jobs.push_back({spec, param, algo, "none"});
          }
        }
      }
    }
  }

  std::vector<BenchRow> rows(jobs.size());
  std::vector<char> verified(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const BenchJob& job = jobs[i];
        const Sequence seq = generate(job.spec);
        const std::vector<std::size_t> sizes = decompose_maximal(seq).sizes;
        Meter meter;
        const PivotStrategy pivot{parse_pivot(job.pivot).value_or(PivotRule::exact_median),
                                  job.spec.seed};
        const auto start = std::chrono::steady_clock::now();
        // blocked gets the generator's bound when there is one, else the measured one.
        std::optional<std::size_t> block;
        if (job.spec.family == Family::displacement) {
          block = std::max<std::size_t>(1, std::min(job.spec.k, seq.size()));
        }
        const SortOutcome result = run_sorter(job.algo, seq, pivot, block, meter);
        const auto stop = std::chrono::steady_clock::now();
        verified[i] = result.sorted && verify_sorted_stable_permutation(seq, result.output);

        BenchRow& row = rows[i];
        row.family = std::string(family_name(job.spec.family));
        row.n = seq.size();
        row.param = job.param;
        row.algo = job.algo;
        row.pivot = job.pivot;
        row.seed = job.spec.seed;
        row.comparisons = result.comparisons;
        row.moves = result.moves;
        row.bound_B = theorem_bound(sizes, seq.size());
        row.entropy_H = entropy(sizes, seq.size());
        row.ratio = static_cast<double>(result.comparisons) / row.bound_B;
        row.elapsed_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(b.threads, 1); ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const BenchRow& a = rows[x];
    const BenchRow& c = rows[y];
    return std::tie(a.family, a.n, a.algo, a.pivot, a.seed) <
           std::tie(c.family, c.n, c.algo, c.pivot, c.seed);
  });
  emit(b.out, out, [&](std::ostream& f) {
    f << kBenchHeader << '\n';
    for (std::size_t i : order) f << to_csv(rows[i]) << '\n';
  });
  const bool all_ok = std::all_of(verified.begin(), verified.end(), [](char v) { return v != 0; });
  return all_ok ? kOk : kVerification;
}

// ---------------------------------------------------------------- census

struct CensusFlags {
  std::size_t n = 0;
  std::string worstcase;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_census(const CensusFlags& c, std::ostream& out) {
  std::optional<PivotStrategy> strategy;
  if (!c.worstcase.empty()) {
    strategy = PivotStrategy{*parse_pivot(c.worstcase.substr(6)), c.seed};
  }
  const std::vector<CensusRow> rows = enumerate_census(c.n, strategy);
  emit(c.out, out, [&](std::ostream& f) {
    f << kCensusHeader << '\n';
    for (const CensusRow& r : rows) {
      fmt::print(f, "{},{},{},{},{:.6f},{}\n", format_type(r.type), r.nu,
                 r.eq1_rhs ? fmt::format("{:.9g}", *r.eq1_rhs) : "", r.eq1_rhs.has_value(),
                 r.info_bits,
                 r.worst_case_comparisons ? std::to_string(*r.worst_case_comparisons) : "");
    }
  });
  return kOk;
}

}  // namespace

std::string to_csv(const BenchRow& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{:.3f},{:.6f},{:.6f},{}", r.family, r.n, r.param,
                     r.algo, r.pivot, r.seed, r.comparisons, r.moves, r.bound_B, r.entropy_H,
                     r.ratio, r.elapsed_ns);
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Comparison-counting adaptive sorting toolkit", "adasort"};
  // "-h" would collide with the multiset --h option.
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an input sequence file");
  gen_cmd->add_option("--family", gen.family, "input family")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  gen_cmd->add_option("--n", gen.n, "sequence length");
  add_family_flags(gen_cmd, gen.params);
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--out", gen.out, "output file")->required();

  MeasureFlags measure;
  CLI::App* measure_cmd = app.add_subcommand("measure", "report sortedness measures");
  measure_cmd->add_option("--in", measure.in, "sequence file")->required();
  measure_cmd->add_flag("--csv", measure.csv, "also print one CSV row");

  SortFlags sort;
  CLI::App* sort_cmd = app.add_subcommand("sort", "sort a file and report comparisons");
  sort_cmd->add_option("--algo", sort.algo, "sorting algorithm")
      ->required()
      ->check(CLI::IsMember(kAlgos));
  sort_cmd->add_option("--pivot", sort.pivot, "pivot rule for psort")
      ->check(CLI::IsMember(kPivots));
  sort_cmd->add_option("--seed", sort.seed, "seed for randomized pivots");
  sort_cmd->add_option("--k", sort.k, "block size for blocked")->check(CLI::PositiveNumber);
  sort_cmd->add_option("--in", sort.in, "sequence file")->required();
  sort_cmd->add_option("--out", sort.out, "write the sorted sequence here");

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark sweep, CSV out");
  bench_cmd->add_option("--family", bench.families, "input families")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember(kFamilies));
  bench_cmd->add_option("--n", bench.sizes, "sequence lengths")->required()->delimiter(',');
  bench_cmd->add_option("--algo", bench.algos, "algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember(kAlgos));
  bench_cmd->add_option("--pivot", bench.pivots, "pivot rules for psort")
      ->delimiter(',')
      ->check(CLI::IsMember(kPivots));
  add_family_flags(bench_cmd, bench.params);
  bench_cmd->add_option("--trials", bench.trials, "trials per configuration")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "base seed; trial t uses seed + t");
  bench_cmd->add_option("--threads", bench.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench.out, "CSV file (default: standard output)");

  CensusFlags census;
  CLI::App* census_cmd = app.add_subcommand("census", "count permutations by sorted-type");
  census_cmd->add_option("--n", census.n, "permutation size")->required();
  census_cmd->add_option("--worstcase", census.worstcase, "also record worst-case comparisons")
      ->check(CLI::IsMember({"psort-median", "psort-randmid", "psort-fr"}));
  census_cmd->add_option("--seed", census.seed, "seed for randomized pivots");
  census_cmd->add_option("--out", census.out, "CSV file (default: standard output)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*measure_cmd) return cmd_measure(measure, out);
    if (*sort_cmd) return cmd_sort(sort, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*census_cmd) return cmd_census(census, out);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace adasort::cli
