#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "transorder/distance.hpp"
#include "transorder/unrank.hpp"

namespace transorder {

// Ordered pair of 1-based positions whose entries are exchanged between
// neighboring permutations.
struct Transposition {
  int pos_a;
  int pos_b;

  friend bool operator==(const Transposition&, const Transposition&) = default;
};

// Positions where p and q disagree: empty for equal permutations, the two
// positions when they differ by one transposition. Anything else is not a
// transposition and reports not_adjacent.
inline std::optional<Transposition> delta(const Permutation& p,
                                          const Permutation& q) {
  detail::require_same_width(p, q);
  int first = 0;
  int second = 0;
  int count = 0;
  for (int i = 0; i < p.width(); ++i) {
    if (p.entries()[i] != q.entries()[i]) {
      ++count;
      if (count == 1) first = i + 1;
      if (count == 2) second = i + 1;
    }
  }
  if (count == 0) return std::nullopt;
  if (count != 2) {
    throw error(errc::not_adjacent, "permutations differ in " +
                                        std::to_string(count) +
                                        " positions, expected 0 or 2");
  }
  return Transposition{first, second};
}

// Half-open seed interval [start, end) embedded at a fixed width.
struct SeedRange {
  Seed start;
  Seed end;
  int width;

  SeedRange(Seed start_, Seed end_, int width_)
      : start(std::move(start_)), end(std::move(end_)), width(width_) {
    if (width < 1) {
      throw error(errc::invalid_argument, "range width must be >= 1");
    }
    if (start < 0 || start > end) {
      throw error(errc::invalid_argument,
                  "range needs 0 <= start <= end, got [" + to_decimal(start) +
                      ", " + to_decimal(end) + ")");
    }
    if (end > factorial(width)) {
      throw error(errc::out_of_range, "range end " + to_decimal(end) +
                                          " exceeds " + std::to_string(width) +
                                          "!");
    }
  }

  Seed size() const { return end - start; }
};

struct DeltaStep {
  Seed seed;
  FactoradicCode code;
  Permutation perm;
  std::optional<Transposition> delta;  // absent only for the first emitted step
};

// Single-consumer forward walk over a seed range. Every step re-unranks from
// its seed, so seeking and streaming share one code path and chunked
// consumers need no shared state. A consecutive pair that fails to differ by
// exactly one transposition aborts the stream with not_adjacent.
class DeltaStream {
 public:
  explicit DeltaStream(SeedRange range)
      : range_(std::move(range)), cursor_(range_.start) {}

  const SeedRange& range() const { return range_; }

  std::optional<DeltaStep> next() {
    if (cursor_ >= range_.end) return std::nullopt;
    FactoradicCode code = unrank(cursor_, range_.width);
    Permutation perm = decode_permutation(code);
    std::optional<Transposition> step_delta;
    if (previous_) {
      step_delta = delta(*previous_, perm);
      if (!step_delta) {
        throw error(errc::not_adjacent,
                    "seeds " + to_decimal(cursor_ - 1) + " and " +
                        to_decimal(cursor_) + " map to the same permutation");
      }
    }
    previous_ = perm;
    DeltaStep step{cursor_, std::move(code), std::move(perm), step_delta};
    ++cursor_;
    return step;
  }

 private:
  SeedRange range_;
  Seed cursor_;
  std::optional<Permutation> previous_;
};

inline DeltaStream open_stream(SeedRange range) {
  return DeltaStream(std::move(range));
}

inline std::vector<DeltaStep> collect_stream(SeedRange range) {
  DeltaStream stream(std::move(range));
  std::vector<DeltaStep> steps;
  while (auto step = stream.next()) steps.push_back(std::move(*step));
  return steps;
}

// Contiguous, disjoint cover of the range, chunk sizes differing by at most
// one. Chunks beyond the range size come out empty.
inline std::vector<SeedRange> partition(const SeedRange& range,
                                        std::uint64_t chunks) {
  if (chunks == 0) {
    throw error(errc::invalid_argument, "chunk count must be >= 1");
  }
  const Seed total = range.size();
  const Seed base = total / chunks;
  const std::uint64_t extra = static_cast<std::uint64_t>(total % chunks);
  std::vector<SeedRange> parts;
  parts.reserve(chunks);
  Seed cursor = range.start;
  for (std::uint64_t i = 0; i < chunks; ++i) {
    Seed next = cursor + base + (i < extra ? 1 : 0);
    parts.push_back(SeedRange(cursor, next, range.width));
    cursor = std::move(next);
  }
  return parts;
}

}  // namespace transorder
