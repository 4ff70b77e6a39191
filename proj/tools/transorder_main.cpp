// Command-line front end: unrank/rank/decode/encode, seed distances, delta
// streaming with optional chunked workers, property verification, and a
// throughput bench. Plain text by default, JSON lines behind --json.
//
// Exit codes: 0 success, 1 property violation found, 2 usage or input error.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "transorder/transorder.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace transorder;

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

json step_record(const DeltaStep& step, int width) {
  json record;
  record["s"] = to_decimal(step.seed);
  record["n"] = width;
  record["digits"] = step.code.msd_digits();
  record["perm"] = step.perm.entries();
  if (step.delta) {
    record["delta"] = json::array({step.delta->pos_a, step.delta->pos_b});
  } else {
    record["delta"] = nullptr;
  }
  return record;
}

std::string render_step(const DeltaStep& step, int width, bool as_json) {
  if (as_json) return step_record(step, width).dump();
  std::string line = to_decimal(step.seed);
  line += '\t';
  line += join(step.code.msd_digits());
  line += '\t';
  line += join(step.perm.entries());
  line += '\t';
  line += step.delta ? std::to_string(step.delta->pos_a) + " " +
                           std::to_string(step.delta->pos_b)
                     : "-";
  return line;
}

struct UnrankOptions {
  std::string seed;
  int width = 0;  // 0 = minimal width
  bool as_json = false;
};

void run_unrank(const UnrankOptions& opt) {
  const Seed s = parse_seed(opt.seed);
  const int n = opt.width > 0 ? opt.width : minimal_width(s);
  FactoradicCode code = unrank(s, n);
  Permutation perm = decode_permutation(code);
  if (opt.as_json) {
    DeltaStep step{s, std::move(code), std::move(perm), std::nullopt};
    std::cout << step_record(step, n).dump() << '\n';
  } else {
    std::cout << join(code.msd_digits()) << '\n'
              << join(perm.entries()) << '\n';
  }
}

struct DistOptions {
  std::string left;
  std::string right;
  int width = 0;
};

void run_dist(const DistOptions& opt) {
  std::optional<int> width;
  if (opt.width > 0) width = opt.width;
  std::cout << seed_distance(parse_seed(opt.left), parse_seed(opt.right), width)
            << '\n';
}

struct StreamOptions {
  std::string start;
  std::string end;
  int width = 0;
  bool as_json = false;
  std::uint64_t chunks = 1;
};

void run_stream(const StreamOptions& opt) {
  const Seed start = parse_seed(opt.start);
  const Seed end = parse_seed(opt.end);
  int n = opt.width;
  if (n == 0) n = minimal_width(end > 0 ? Seed(end - 1) : start);
  const SeedRange range(start, end, n);

  if (opt.chunks <= 1 && opt.chunks != 0) {
    DeltaStream stream = open_stream(range);
    while (auto step = stream.next()) {
      std::cout << render_step(*step, n, opt.as_json) << '\n';
    }
    return;
  }

  // Workers render disjoint chunks; a chunk that does not begin the range
  // starts one seed early to recover its first delta, then drops that step.
  // Output is emitted in seed order, byte-identical to a single chunk.
  const std::vector<SeedRange> parts = partition(range, opt.chunks);
  std::vector<std::string> buffers(parts.size());
  std::vector<std::exception_ptr> failures(parts.size());
  std::vector<std::thread> pool;
  pool.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    pool.emplace_back([&, i] {
      try {
        if (parts[i].size() == 0) return;
        const bool drop_first = parts[i].start > range.start;
        const Seed from = drop_first ? Seed(parts[i].start - 1) : parts[i].start;
        DeltaStream stream = open_stream(SeedRange(from, parts[i].end, n));
        bool first = true;
        while (auto step = stream.next()) {
          if (drop_first && first) {
            first = false;
            continue;
          }
          buffers[i] += render_step(*step, n, opt.as_json);
          buffers[i] += '\n';
        }
      } catch (...) {
        failures[i] = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  for (const auto& buffer : buffers) std::cout << buffer;
}

struct VerifyOptions {
  int width = 5;
  bool all = false;
  std::string property;
  std::uint64_t sample_count = 0;  // 0 = let each check decide
  std::uint64_t rng_seed = 1;
  std::string fault;  // "SEED:POSITION"
  bool timing = false;
};

std::optional<DigitFlip> parse_fault(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
    throw error(errc::invalid_argument,
                "fault spec must look like SEED:POSITION, got \"" + text + "\"");
  }
  DigitFlip flip{parse_seed(text.substr(0, colon)), 0};
  try {
    flip.digit_position = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw error(errc::invalid_argument,
                "fault position must be an integer, got \"" + text + "\"");
  }
  return flip;
}

void print_report(const VerificationReport& report, bool timing) {
  std::cout << (report.passed() ? "[PASS] " : "[FAIL] ") << report.property
            << " n=" << report.width << " checked=" << report.seeds_checked
            << " violations=" << report.violations.size();
  if (report.sample) {
    std::cout << " sample=" << report.sample->count
              << " rng-seed=" << report.sample->rng_seed;
  }
  if (timing) {
    std::cout << " elapsed_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(
                     report.elapsed)
                     .count();
  }
  std::cout << '\n';
  const std::size_t shown = std::min<std::size_t>(report.violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const Violation& v = report.violations[i];
    std::cout << "       seeds=[";
    for (std::size_t j = 0; j < v.seeds.size(); ++j) {
      if (j != 0) std::cout << ',';
      std::cout << to_decimal(v.seeds[j]);
    }
    std::cout << "] observed=" << v.observed << " bound=" << v.bound << '\n';
  }
  if (report.violations.size() > shown) {
    std::cout << "       ... and " << report.violations.size() - shown
              << " more\n";
  }
}

int run_verify(const VerifyOptions& opt) {
  const int n = opt.width;
  const std::optional<DigitFlip> flip = parse_fault(opt.fault);
  const DigitFlip* fault = flip ? &*flip : nullptr;
  std::optional<SampleSpec> sample;
  if (opt.sample_count > 0) sample = SampleSpec{opt.sample_count, opt.rng_seed};
  const SampleSpec sampled_or_default =
      sample.value_or(SampleSpec{10000, opt.rng_seed});

  std::vector<VerificationReport> reports;
  auto full_range = [&] { return SeedRange(Seed(0), factorial(n), n); };

  if (opt.all || opt.property.empty()) {
    if (n > 7) {
      throw error(errc::invalid_argument,
                  "--all is exhaustive and limited to --n 7; use "
                  "--property adjacency-sampled for larger widths");
    }
    reports.push_back(check_bijection(n, fault));
    if (factorial(n) >= 2) reports.push_back(check_adjacency(full_range(), fault));
    if (factorial(n) >= 3) reports.push_back(check_step2(full_range()));
    reports.push_back(check_distance_bound(n, sample));
    reports.push_back(check_radius(n));
    reports.push_back(check_reverse_triangle(n, sample));
    reports.push_back(check_metric_axioms(n, sample));
  } else if (opt.property == "bijection") {
    reports.push_back(check_bijection(n, fault));
  } else if (opt.property == "adjacency") {
    if (n > kOracleWidthLimit) {
      throw error(errc::invalid_argument,
                  "full-range adjacency is limited to --n 8; use "
                  "--property adjacency-sampled");
    }
    reports.push_back(check_adjacency(full_range(), fault));
  } else if (opt.property == "adjacency-sampled") {
    reports.push_back(check_adjacency_sampled(n, sampled_or_default, fault));
  } else if (opt.property == "step2") {
    if (n > kOracleWidthLimit) {
      throw error(errc::invalid_argument, "full-range step2 is limited to --n 8");
    }
    reports.push_back(check_step2(full_range()));
  } else if (opt.property == "distance-bound") {
    reports.push_back(check_distance_bound(n, sample));
  } else if (opt.property == "radius") {
    reports.push_back(check_radius(n));
  } else if (opt.property == "reverse-triangle") {
    reports.push_back(check_reverse_triangle(n, sample));
  } else if (opt.property == "metric-axioms") {
    reports.push_back(check_metric_axioms(n, sample));
  } else {
    throw error(errc::invalid_argument,
                "unknown property \"" + opt.property +
                    "\"; expected one of bijection, adjacency, "
                    "adjacency-sampled, step2, distance-bound, radius, "
                    "reverse-triangle, metric-axioms");
  }

  if (fault && !opt.all && opt.property != "bijection" &&
      opt.property != "adjacency" && opt.property != "adjacency-sampled") {
    throw error(errc::invalid_argument,
                "--inject-digit-flip applies to bijection and adjacency checks");
  }

  bool all_passed = true;
  for (const auto& report : reports) {
    print_report(report, opt.timing);
    all_passed = all_passed && report.passed();
  }
  return all_passed ? 0 : 1;
}

struct BenchOptions {
  int width = 10;
  std::uint64_t count = 1000000;
};

void run_bench(const BenchOptions& opt) {
  const Seed total = factorial(opt.width);
  const Seed end = total < opt.count ? total : Seed(opt.count);
  const auto started = std::chrono::steady_clock::now();
  DeltaStream stream = open_stream(SeedRange(Seed(0), end, opt.width));
  std::uint64_t steps = 0;
  int checksum = 0;
  while (auto step = stream.next()) {
    ++steps;
    checksum ^= step->perm.entries().back();
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  const double seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(elapsed).count();
  std::cout << "n=" << opt.width << " steps=" << steps << " elapsed_s=" << seconds
            << " steps_per_sec=" << (seconds > 0 ? double(steps) / seconds : 0)
            << " checksum=" << checksum << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{
      "transorder: unranks permutations in transposition order; consecutive "
      "seeds differ by exactly one transposition"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto unrank_opt = std::make_shared<UnrankOptions>();
  CLI::App* cmd_unrank =
      app.add_subcommand("unrank", "seed -> factoradic digits and permutation");
  cmd_unrank->add_option("seed", unrank_opt->seed, "decimal seed")->required();
  cmd_unrank->add_option("--n", unrank_opt->width, "width (default: minimal)")
      ->check(CLI::Range(1, 1000000));
  cmd_unrank->add_flag("--json", unrank_opt->as_json, "emit one JSON record");
  cmd_unrank->callback([unrank_opt] { run_unrank(*unrank_opt); });

  auto rank_digits = std::make_shared<std::vector<int>>();
  CLI::App* cmd_rank =
      app.add_subcommand("rank", "factoradic digits (MSD first) -> seed");
  cmd_rank->add_option("digits", *rank_digits, "digits f_{n-1} ... f_0")
      ->required()
      ->expected(-1);
  cmd_rank->callback([rank_digits] {
    std::cout << to_decimal(rank(FactoradicCode::from_msd(*rank_digits))) << '\n';
  });

  auto decode_digits = std::make_shared<std::vector<int>>();
  CLI::App* cmd_decode =
      app.add_subcommand("decode", "factoradic digits (MSD first) -> permutation");
  cmd_decode->add_option("digits", *decode_digits, "digits f_{n-1} ... f_0")
      ->required()
      ->expected(-1);
  cmd_decode->callback([decode_digits] {
    std::cout << join(
                     decode_permutation(FactoradicCode::from_msd(*decode_digits))
                         .entries())
              << '\n';
  });

  auto encode_entries = std::make_shared<std::vector<int>>();
  CLI::App* cmd_encode =
      app.add_subcommand("encode", "permutation -> factoradic digits (MSD first)");
  cmd_encode->add_option("perm", *encode_entries, "one-line permutation of 1..n")
      ->required()
      ->expected(-1);
  cmd_encode->callback([encode_entries] {
    std::cout << join(
                     encode_permutation(Permutation(*encode_entries)).msd_digits())
              << '\n';
  });

  auto dist_opt = std::make_shared<DistOptions>();
  CLI::App* cmd_dist =
      app.add_subcommand("dist", "transposition distance between two seeds");
  cmd_dist->add_option("left", dist_opt->left, "decimal seed")->required();
  cmd_dist->add_option("right", dist_opt->right, "decimal seed")->required();
  cmd_dist->add_option("--n", dist_opt->width, "width (default: common minimal)")
      ->check(CLI::Range(1, 1000000));
  cmd_dist->callback([dist_opt] { run_dist(*dist_opt); });

  auto stream_opt = std::make_shared<StreamOptions>();
  CLI::App* cmd_stream = app.add_subcommand(
      "stream", "walk seeds [START, END), emitting permutation and delta");
  cmd_stream->add_option("start", stream_opt->start, "inclusive start seed")
      ->required();
  cmd_stream->add_option("end", stream_opt->end, "exclusive end seed")->required();
  cmd_stream->add_option("--n", stream_opt->width, "width (default: minimal)")
      ->check(CLI::Range(1, 1000000));
  cmd_stream->add_flag("--json", stream_opt->as_json, "one JSON record per line");
  cmd_stream->add_option("--chunks", stream_opt->chunks,
                         "render with this many workers (same output)");
  cmd_stream->callback([stream_opt] { run_stream(*stream_opt); });

  auto verify_opt = std::make_shared<VerifyOptions>();
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run property checks; exit 1 on violations");
  cmd_verify->add_option("--n", verify_opt->width, "width under test")
      ->default_val(5)
      ->check(CLI::Range(1, 1000000));
  cmd_verify->add_flag("--all", verify_opt->all, "run the full property suite");
  cmd_verify->add_option("--property", verify_opt->property,
                         "bijection | adjacency | adjacency-sampled | step2 | "
                         "distance-bound | radius | reverse-triangle | "
                         "metric-axioms");
  cmd_verify->add_option("--sample", verify_opt->sample_count,
                         "sample size for widths beyond exhaustive reach");
  cmd_verify->add_option("--rng-seed", verify_opt->rng_seed,
                         "sampling rng seed (recorded in the report)");
  cmd_verify->add_option("--inject-digit-flip", verify_opt->fault,
                         "SEED:POSITION test fault; a sound checker must fail");
  cmd_verify->add_flag("--timing", verify_opt->timing,
                       "append elapsed time to report lines");
  cmd_verify->callback(
      [verify_opt, &exit_code] { exit_code = run_verify(*verify_opt); });

  auto bench_opt = std::make_shared<BenchOptions>();
  CLI::App* cmd_bench =
      app.add_subcommand("bench", "stream throughput measurement");
  cmd_bench->add_option("--n", bench_opt->width, "width")
      ->default_val(10)
      ->check(CLI::Range(1, 1000000));
  cmd_bench->add_option("--count", bench_opt->count, "steps to stream")
      ->default_val(1000000);
  cmd_bench->callback([bench_opt] { run_bench(*bench_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const error& e) {
    std::cerr << "transorder: " << errc_label(e.code()) << ": " << e.what()
              << '\n';
    // A mid-stream adjacency breakdown is a verification failure, not misuse.
    return e.code() == errc::not_adjacent ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "transorder: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
