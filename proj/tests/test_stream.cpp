#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "transorder/stream.hpp"
#include "transorder/verify.hpp"  // uniform_seed

using namespace transorder;

TEST_CASE("delta reports the two differing positions", "[stream]") {
  CHECK(delta(Permutation({3, 2, 5, 6, 1, 4}), Permutation({3, 2, 5, 1, 6, 4})) ==
        Transposition{4, 5});
  CHECK(delta(Permutation({1, 4, 2, 3}), Permutation({1, 4, 3, 2})) ==
        Transposition{3, 4});
  CHECK(delta(Permutation::identity(4), Permutation::identity(4)) ==
        std::nullopt);
}

TEST_CASE("delta rejects non-transposition differences", "[stream]") {
  CHECK_THROWS_MATCHES(
      delta(Permutation({1, 2, 3}), Permutation({2, 3, 1})), error,
      Catch::Matchers::Predicate<error>(
          [](const error& e) { return e.code() == errc::not_adjacent; }));
}

TEST_CASE("SeedRange validates its bounds", "[stream]") {
  CHECK_THROWS_AS(SeedRange(Seed(5), Seed(4), 4), error);
  CHECK_THROWS_AS(SeedRange(Seed(-1), Seed(4), 4), error);
  CHECK_THROWS_AS(SeedRange(Seed(0), Seed(25), 4), error);  // 25 > 4!
  CHECK_THROWS_AS(SeedRange(Seed(0), Seed(1), 0), error);
  CHECK(SeedRange(Seed(0), Seed(24), 4).size() == 24);
  CHECK(SeedRange(Seed(3), Seed(3), 4).size() == 0);  // empty is fine
}

TEST_CASE("stream over the golden window emits the paper permutations",
          "[stream]") {
  const std::vector<DeltaStep> steps =
      collect_stream(SeedRange(Seed(319), Seed(323), 6));
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].perm == Permutation({3, 2, 5, 6, 1, 4}));
  CHECK(steps[1].perm == Permutation({3, 2, 5, 1, 6, 4}));
  CHECK(steps[2].perm == Permutation({3, 2, 5, 1, 4, 6}));
  CHECK(steps[3].perm == Permutation({3, 2, 5, 4, 1, 6}));
  CHECK(!steps[0].delta.has_value());
  CHECK(steps[1].delta == Transposition{4, 5});
  CHECK(steps[2].delta.has_value());
  CHECK(steps[3].delta.has_value());
}

TEST_CASE("stream over [4, 8) emits four one-swap steps", "[stream]") {
  const std::vector<DeltaStep> steps =
      collect_stream(SeedRange(Seed(4), Seed(8), 4));
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].perm == Permutation({1, 4, 2, 3}));
  CHECK(steps[1].perm == Permutation({1, 4, 3, 2}));
  CHECK(steps[2].perm == Permutation({2, 4, 3, 1}));
  CHECK(steps[3].perm == Permutation({2, 4, 1, 3}));
  for (std::size_t i = 1; i < steps.size(); ++i) {
    REQUIRE(steps[i].delta.has_value());
  }
}

TEST_CASE("a single-seed range has one step and no delta", "[stream]") {
  const std::vector<DeltaStep> steps =
      collect_stream(SeedRange(Seed(0), Seed(1), 5));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].perm == Permutation::identity(5));
  CHECK(!steps[0].delta.has_value());
}

TEST_CASE("swapping at the delta positions replays the previous step",
          "[stream]") {
  DeltaStream stream = open_stream(SeedRange(Seed(0), Seed(720), 6));
  auto prev = stream.next();
  REQUIRE(prev.has_value());
  while (auto cur = stream.next()) {
    REQUIRE(cur->delta.has_value());
    std::vector<int> replay = cur->perm.entries();
    std::swap(replay[cur->delta->pos_a - 1], replay[cur->delta->pos_b - 1]);
    REQUIRE(replay == prev->perm.entries());
    REQUIRE(cur->delta->pos_a < cur->delta->pos_b);
    prev = std::move(cur);
  }
}

TEST_CASE("a full-range stream visits every permutation once", "[stream]") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> seen;
    std::uint64_t count = 0;
    DeltaStream stream =
        open_stream(SeedRange(Seed(0), factorial(n), n));
    while (auto step = stream.next()) {
      seen.insert(step->perm.entries());
      ++count;
    }
    CHECK(count == detail::kFactorial64[n]);
    CHECK(seen.size() == detail::kFactorial64[n]);
  }
}

TEST_CASE("sampled windows at widths 12 and 20 stay in transposition order",
          "[stream]") {
  std::mt19937_64 rng(31);
  for (int n : {12, 20}) {
    const Seed total = factorial(n);
    for (int window = 0; window < 40; ++window) {
      Seed start = uniform_seed(n, rng);
      if (start + 24 > total) start = total - 24;
      DeltaStream stream = open_stream(SeedRange(start, start + 24, n));
      std::size_t steps = 0;
      // next() itself throws not_adjacent on any violated delta
      while (auto step = stream.next()) {
        if (steps > 0) REQUIRE(step->delta.has_value());
        ++steps;
      }
      REQUIRE(steps == 24);
    }
  }
}

TEST_CASE("identical ranges produce identical step sequences", "[stream]") {
  const auto first = collect_stream(SeedRange(Seed(100), Seed(160), 6));
  const auto second = collect_stream(SeedRange(Seed(100), Seed(160), 6));
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    REQUIRE(first[i].seed == second[i].seed);
    REQUIRE(first[i].code == second[i].code);
    REQUIRE(first[i].perm == second[i].perm);
    REQUIRE(first[i].delta == second[i].delta);
  }
}

TEST_CASE("partition splits evenly with remainder spread first", "[stream]") {
  const SeedRange range(Seed(0), Seed(24), 4);
  const auto quarters = partition(range, 4);
  REQUIRE(quarters.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(quarters[i].start == Seed(6 * i));
    CHECK(quarters[i].end == Seed(6 * (i + 1)));
  }

  const auto thirds = partition(SeedRange(Seed(0), Seed(7), 4), 3);
  REQUIRE(thirds.size() == 3);
  CHECK(thirds[0].size() == 3);
  CHECK(thirds[1].size() == 2);
  CHECK(thirds[2].size() == 2);

  CHECK_THROWS_MATCHES(partition(range, 0), error,
                       Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::invalid_argument;
                       }));
}

TEST_CASE("partition covers the range exactly for fuzzed inputs", "[stream]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(detail::bounded_rand(rng, 6));  // 3..8
    const std::uint64_t total = detail::kFactorial64[n];
    std::uint64_t a = detail::bounded_rand(rng, total + 1);
    std::uint64_t b = detail::bounded_rand(rng, total + 1);
    if (a > b) std::swap(a, b);
    const SeedRange range(Seed(a), Seed(b), n);
    const std::uint64_t chunks = 1 + detail::bounded_rand(rng, 9);
    const auto parts = partition(range, chunks);
    REQUIRE(parts.size() == chunks);
    Seed cursor = range.start;
    Seed smallest = range.end - range.start;
    Seed largest = 0;
    for (const SeedRange& part : parts) {
      REQUIRE(part.start == cursor);
      REQUIRE(part.width == n);
      cursor = part.end;
      smallest = std::min(smallest, part.size());
      largest = std::max(largest, part.size());
    }
    REQUIRE(cursor == range.end);
    REQUIRE(largest - smallest <= 1);
  }
}

TEST_CASE("concatenated chunk streams equal the unchunked stream", "[stream]") {
  const SeedRange range(Seed(0), Seed(120), 5);
  const auto whole = collect_stream(range);
  for (std::uint64_t chunks : {2u, 3u, 7u, 120u, 121u}) {
    std::vector<DeltaStep> stitched;
    for (const SeedRange& part : partition(range, chunks)) {
      for (auto& step : collect_stream(part)) {
        stitched.push_back(std::move(step));
      }
    }
    REQUIRE(stitched.size() == whole.size());
    for (std::size_t i = 0; i < whole.size(); ++i) {
      REQUIRE(stitched[i].seed == whole[i].seed);
      REQUIRE(stitched[i].code == whole[i].code);
      REQUIRE(stitched[i].perm == whole[i].perm);
      // chunk heads restart the delta; interior deltas must agree
      if (stitched[i].delta.has_value()) {
        REQUIRE(stitched[i].delta == whole[i].delta);
      }
    }
  }
}
