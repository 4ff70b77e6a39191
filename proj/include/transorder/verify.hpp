#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "transorder/distance.hpp"
#include "transorder/stream.hpp"

namespace transorder {

// Exhaustive thresholds: full enumeration below, deterministic sampling above.
inline constexpr int kExhaustivePairWidth = 6;
inline constexpr int kExhaustiveTripleWidth = 4;

// Deterministic sampling parameters; the rng seed rides along in the report
// so sampled runs can be replayed.
struct SampleSpec {
  std::uint64_t count = 10000;
  std::uint64_t rng_seed = 1;
};

struct Violation {
  std::vector<Seed> seeds;
  std::string observed;
  std::string bound;
};

struct VerificationReport {
  std::string property;
  int width = 0;
  std::uint64_t seeds_checked = 0;
  std::vector<Violation> violations;
  std::chrono::nanoseconds elapsed{0};
  std::optional<SampleSpec> sample;  // present when sampling chose the workload

  bool passed() const { return violations.empty(); }
};

// Test fault: while a check runs, the target seed's code gets one digit
// nudged by one (staying a valid code). That changes the decoded permutation
// by exactly one transposition, which flips the parity of every adjacency
// involving the target seed, so a correct checker must notice.
struct DigitFlip {
  Seed seed;
  int digit_position;  // factorial position, 1 <= digit_position < width
};

namespace detail {

// Unbiased bounded draw via rejection. uniform_int_distribution is not
// specified bit-for-bit across standard libraries; this is.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t overhang = (max64 % bound + 1) % bound;  // 2^64 mod bound
  if (overhang == 0) return rng() % bound;
  const std::uint64_t limit = max64 - overhang + 1;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

inline FactoradicCode apply_flip(FactoradicCode code, const Seed& seed,
                                 const DigitFlip* fault) {
  if (!fault || seed != fault->seed) return code;
  std::vector<int> digits = code.digits();
  const int i = fault->digit_position;
  digits[static_cast<std::size_t>(i)] += digits[static_cast<std::size_t>(i)] == i ? -1 : 1;
  return FactoradicCode(std::move(digits));
}

inline void validate_flip(const DigitFlip* fault, int width) {
  if (!fault) return;
  if (fault->digit_position < 1 || fault->digit_position >= width) {
    throw error(errc::invalid_argument,
                "digit flip position must lie in 1.." + std::to_string(width - 1));
  }
}

template <class Body>
VerificationReport timed_check(std::string property, int width, Body&& body) {
  VerificationReport report;
  report.property = std::move(property);
  report.width = width;
  const auto started = std::chrono::steady_clock::now();
  body(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

inline std::vector<Permutation> unrank_all(int n) {
  const std::uint64_t total = kFactorial64[n];
  std::vector<Permutation> perms;
  perms.reserve(total);
  for (std::uint64_t s = 0; s < total; ++s) {
    perms.push_back(unrank_permutation(Seed(s), n));
  }
  return perms;
}

}  // namespace detail

// Uniform over [0, n!): every factoradic digit drawn uniformly within its
// positional bound.
inline Seed uniform_seed(int n, std::mt19937_64& rng) {
  if (n < 1) {
    throw error(errc::invalid_argument, "width must be >= 1");
  }
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    digits[static_cast<std::size_t>(i)] =
        static_cast<int>(detail::bounded_rand(rng, static_cast<std::uint64_t>(i) + 1));
  }
  return integer_from_code(FactoradicCode(std::move(digits)));
}

// All n! seeds must decode to n! distinct permutations.
inline VerificationReport check_bijection(int n, const DigitFlip* fault = nullptr) {
  if (n < 1) {
    throw error(errc::invalid_argument, "width must be >= 1");
  }
  if (n > kOracleWidthLimit) {
    throw error(errc::oracle_size_exceeded,
                "exhaustive bijection check is limited to width <= " +
                    std::to_string(kOracleWidthLimit));
  }
  detail::validate_flip(fault, n);
  return detail::timed_check("bijection", n, [&](VerificationReport& report) {
    const std::uint64_t total = detail::kFactorial64[n];
    const std::uint64_t unseen = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> first_seed(total, unseen);
    for (std::uint64_t s = 0; s < total; ++s) {
      const FactoradicCode code =
          detail::apply_flip(unrank(Seed(s), n), Seed(s), fault);
      const std::uint64_t index =
          detail::perm_index(decode_permutation(code).entries());
      if (first_seed[index] != unseen) {
        report.violations.push_back({{Seed(first_seed[index]), Seed(s)},
                                     "seeds map to one permutation",
                                     "each permutation reached exactly once"});
      } else {
        first_seed[index] = s;
      }
      ++report.seeds_checked;
    }
  });
}

// d(s, s+1) = 1 for every consecutive pair in the range.
inline VerificationReport check_adjacency(const SeedRange& range,
                                          const DigitFlip* fault = nullptr) {
  if (range.size() < 2) {
    throw error(errc::invalid_argument,
                "adjacency check needs a range of length >= 2");
  }
  detail::validate_flip(fault, range.width);
  return detail::timed_check("adjacency", range.width,
                             [&](VerificationReport& report) {
    Permutation prev = decode_permutation(
        detail::apply_flip(unrank(range.start, range.width), range.start, fault));
    for (Seed s = range.start + 1; s < range.end; ++s) {
      Permutation cur = decode_permutation(
          detail::apply_flip(unrank(s, range.width), s, fault));
      const int d = cayley_distance(prev, cur);
      if (d != 1) {
        report.violations.push_back({{s - 1, s}, std::to_string(d), "1"});
      }
      ++report.seeds_checked;
      prev = std::move(cur);
    }
  });
}

// d(s, s+1) = 1 at seeds drawn uniformly from [0, n!-1); reaches widths where
// full enumeration is not desk-feasible.
inline VerificationReport check_adjacency_sampled(int n, const SampleSpec& sample,
                                                  const DigitFlip* fault = nullptr) {
  if (n < 2) {
    throw error(errc::invalid_argument,
                "sampled adjacency needs width >= 2");
  }
  detail::validate_flip(fault, n);
  return detail::timed_check("adjacency-sampled", n,
                             [&](VerificationReport& report) {
    report.sample = sample;
    std::mt19937_64 rng(sample.rng_seed);
    const Seed last = factorial(n) - 1;
    for (std::uint64_t i = 0; i < sample.count; ++i) {
      Seed s = uniform_seed(n, rng);
      while (s == last) s = uniform_seed(n, rng);
      const Permutation left = decode_permutation(
          detail::apply_flip(unrank(s, n), s, fault));
      const Permutation right = decode_permutation(
          detail::apply_flip(unrank(s + 1, n), s + 1, fault));
      const int d = cayley_distance(left, right);
      if (d != 1) {
        report.violations.push_back({{s, s + 1}, std::to_string(d), "1"});
      }
      ++report.seeds_checked;
    }
  });
}

// d(s, s+2) = 2 for every seed pair two apart in the range.
inline VerificationReport check_step2(const SeedRange& range) {
  if (range.size() < 3) {
    throw error(errc::invalid_argument,
                "step-2 check needs a range of length >= 3");
  }
  return detail::timed_check("step2", range.width,
                             [&](VerificationReport& report) {
    Permutation back2 = unrank_permutation(range.start, range.width);
    Permutation back1 = unrank_permutation(range.start + 1, range.width);
    for (Seed s = range.start + 2; s < range.end; ++s) {
      Permutation cur = unrank_permutation(s, range.width);
      const int d = cayley_distance(back2, cur);
      if (d != 2) {
        report.violations.push_back({{s - 2, s}, std::to_string(d), "2"});
      }
      ++report.seeds_checked;
      back2 = std::move(back1);
      back1 = std::move(cur);
    }
  });
}

// d(s, s') <= min(|s - s'|, n - 1), exhaustive through width 6, sampled above.
inline VerificationReport check_distance_bound(
    int n, std::optional<SampleSpec> sample = std::nullopt) {
  if (n < 1) {
    throw error(errc::invalid_argument, "width must be >= 1");
  }
  return detail::timed_check("distance-bound", n,
                             [&](VerificationReport& report) {
    if (n <= kExhaustivePairWidth) {
      const std::vector<Permutation> perms = detail::unrank_all(n);
      const std::uint64_t total = perms.size();
      for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = 0; b < total; ++b) {
          const int d = cayley_distance(perms[a], perms[b]);
          const std::uint64_t gap = a > b ? a - b : b - a;
          const std::uint64_t bound =
              std::min<std::uint64_t>(gap, static_cast<std::uint64_t>(n - 1));
          if (static_cast<std::uint64_t>(d) > bound) {
            report.violations.push_back({{Seed(a), Seed(b)},
                                         std::to_string(d),
                                         "min(|s-s'|, n-1) = " + std::to_string(bound)});
          }
          ++report.seeds_checked;
        }
      }
    } else {
      const SampleSpec spec = sample.value_or(SampleSpec{});
      report.sample = spec;
      std::mt19937_64 rng(spec.rng_seed);
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const Seed a = uniform_seed(n, rng);
        const Seed b = uniform_seed(n, rng);
        const int d = seed_distance(a, b, n);
        const Seed gap = a > b ? a - b : b - a;
        const Seed bound = std::min(gap, Seed(n - 1));
        if (d > bound) {
          report.violations.push_back(
              {{a, b}, std::to_string(d), "min(|s-s'|, n-1) = " + to_decimal(bound)});
        }
        ++report.seeds_checked;
      }
    }
  });
}

// d(s, 0) <= k - 1 for every s < k!.
inline VerificationReport check_radius(int k) {
  if (k < 1) {
    throw error(errc::invalid_argument, "width must be >= 1");
  }
  if (k > kOracleWidthLimit) {
    throw error(errc::oracle_size_exceeded,
                "exhaustive radius check is limited to width <= " +
                    std::to_string(kOracleWidthLimit));
  }
  return detail::timed_check("radius", k, [&](VerificationReport& report) {
    const Permutation origin = Permutation::identity(k);
    const std::uint64_t total = detail::kFactorial64[k];
    for (std::uint64_t s = 0; s < total; ++s) {
      const int d = cayley_distance(unrank_permutation(Seed(s), k), origin);
      if (d > k - 1) {
        report.violations.push_back(
            {{Seed(s)}, std::to_string(d), std::to_string(k - 1)});
      }
      ++report.seeds_checked;
    }
  });
}

// |d(s, 0) - d(s', 0)| <= d(s, s'), exhaustive through width 6, sampled above.
inline VerificationReport check_reverse_triangle(
    int n, std::optional<SampleSpec> sample = std::nullopt) {
  if (n < 1) {
    throw error(errc::invalid_argument, "width must be >= 1");
  }
  return detail::timed_check("reverse-triangle", n,
                             [&](VerificationReport& report) {
    if (n <= kExhaustivePairWidth) {
      const std::vector<Permutation> perms = detail::unrank_all(n);
      const std::uint64_t total = perms.size();
      std::vector<int> to_origin(total);
      for (std::uint64_t s = 0; s < total; ++s) {
        to_origin[s] = cayley_distance(perms[s], perms[0]);
      }
      for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = 0; b < total; ++b) {
          const int lhs =
              to_origin[a] > to_origin[b] ? to_origin[a] - to_origin[b]
                                          : to_origin[b] - to_origin[a];
          const int rhs = cayley_distance(perms[a], perms[b]);
          if (lhs > rhs) {
            report.violations.push_back({{Seed(a), Seed(b)},
                                         "|d(s,0)-d(s',0)| = " + std::to_string(lhs),
                                         "d(s,s') = " + std::to_string(rhs)});
          }
          ++report.seeds_checked;
        }
      }
    } else {
      const SampleSpec spec = sample.value_or(SampleSpec{});
      report.sample = spec;
      std::mt19937_64 rng(spec.rng_seed);
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const Seed a = uniform_seed(n, rng);
        const Seed b = uniform_seed(n, rng);
        const int da = seed_distance(a, Seed(0), n);
        const int db = seed_distance(b, Seed(0), n);
        const int lhs = da > db ? da - db : db - da;
        const int rhs = seed_distance(a, b, n);
        if (lhs > rhs) {
          report.violations.push_back({{a, b},
                                       "|d(s,0)-d(s',0)| = " + std::to_string(lhs),
                                       "d(s,s') = " + std::to_string(rhs)});
        }
        ++report.seeds_checked;
      }
    }
  });
}

// The four axioms making d a proper distance: non-negativity, identity of
// indiscernibles, symmetry (pairs: exhaustive through width 6), and the
// triangle inequality (triples: exhaustive through width 4).
inline VerificationReport check_metric_axioms(
    int n, std::optional<SampleSpec> sample = std::nullopt) {
  if (n < 1) {
    throw error(errc::invalid_argument, "width must be >= 1");
  }
  return detail::timed_check("metric-axioms", n,
                             [&](VerificationReport& report) {
    const bool pairs_exhaustive = n <= kExhaustivePairWidth;
    const bool triples_exhaustive = n <= kExhaustiveTripleWidth;
    const SampleSpec spec = sample.value_or(SampleSpec{});
    if (!pairs_exhaustive || !triples_exhaustive) report.sample = spec;
    std::mt19937_64 rng(spec.rng_seed);

    std::vector<Permutation> perms;
    if (pairs_exhaustive) perms = detail::unrank_all(n);

    auto check_pair = [&](const Seed& sa, const Seed& sb, const Permutation& pa,
                          const Permutation& pb) {
      const int d_ab = cayley_distance(pa, pb);
      if (d_ab < 0) {
        report.violations.push_back({{sa, sb}, std::to_string(d_ab), "d >= 0"});
      }
      if ((d_ab == 0) != (pa == pb)) {
        report.violations.push_back(
            {{sa, sb}, "d = " + std::to_string(d_ab),
             "d = 0 exactly when the permutations coincide"});
      }
      const int d_ba = cayley_distance(pb, pa);
      if (d_ab != d_ba) {
        report.violations.push_back({{sa, sb},
                                     "d(s,s') = " + std::to_string(d_ab) +
                                         ", d(s',s) = " + std::to_string(d_ba),
                                     "symmetry"});
      }
      ++report.seeds_checked;
    };

    if (pairs_exhaustive) {
      const std::uint64_t total = perms.size();
      for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = 0; b < total; ++b) {
          check_pair(Seed(a), Seed(b), perms[a], perms[b]);
        }
      }
    } else {
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const Seed a = uniform_seed(n, rng);
        const Seed b = uniform_seed(n, rng);
        check_pair(a, b, unrank_permutation(a, n), unrank_permutation(b, n));
      }
    }

    auto check_triple = [&](const Seed& sa, const Seed& sb, const Seed& sc,
                            const Permutation& pa, const Permutation& pb,
                            const Permutation& pc) {
      const int direct = cayley_distance(pa, pb);
      const int via = cayley_distance(pa, pc) + cayley_distance(pc, pb);
      if (direct > via) {
        report.violations.push_back({{sa, sb, sc},
                                     "d(a,b) = " + std::to_string(direct),
                                     "d(a,c) + d(c,b) = " + std::to_string(via)});
      }
      ++report.seeds_checked;
    };

    if (triples_exhaustive) {
      const std::uint64_t total = perms.size();
      for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = 0; b < total; ++b) {
          for (std::uint64_t c = 0; c < total; ++c) {
            check_triple(Seed(a), Seed(b), Seed(c), perms[a], perms[b], perms[c]);
          }
        }
      }
    } else if (pairs_exhaustive) {
      // Permutation table exists; draw triples into it.
      const std::uint64_t total = perms.size();
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const std::uint64_t a = detail::bounded_rand(rng, total);
        const std::uint64_t b = detail::bounded_rand(rng, total);
        const std::uint64_t c = detail::bounded_rand(rng, total);
        check_triple(Seed(a), Seed(b), Seed(c), perms[a], perms[b], perms[c]);
      }
    } else {
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const Seed a = uniform_seed(n, rng);
        const Seed b = uniform_seed(n, rng);
        const Seed c = uniform_seed(n, rng);
        check_triple(a, b, c, unrank_permutation(a, n), unrank_permutation(b, n),
                     unrank_permutation(c, n));
      }
    }
  });
}

// Associative fold for reports computed over disjoint sub-ranges.
inline VerificationReport merge(VerificationReport left,
                                const VerificationReport& right) {
  if (left.property != right.property || left.width != right.width) {
    throw error(errc::invalid_argument,
                "cannot merge reports of different properties");
  }
  left.seeds_checked += right.seeds_checked;
  left.violations.insert(left.violations.end(), right.violations.begin(),
                         right.violations.end());
  left.elapsed += right.elapsed;
  return left;
}

// Adjacency over partitioned sub-ranges, one worker each. Every sub-range is
// widened by one seed so boundary pairs are covered exactly once; the merged
// report is identical to the sequential one regardless of worker count.
inline VerificationReport check_adjacency_parallel(const SeedRange& range,
                                                   unsigned workers,
                                                   const DigitFlip* fault = nullptr) {
  if (workers == 0) {
    throw error(errc::invalid_argument, "worker count must be >= 1");
  }
  if (range.size() < 2) {
    throw error(errc::invalid_argument,
                "adjacency check needs a range of length >= 2");
  }
  detail::validate_flip(fault, range.width);

  const std::vector<SeedRange> parts = partition(range, workers);
  std::vector<VerificationReport> partials(parts.size());
  std::vector<std::exception_ptr> failures(parts.size());
  std::vector<std::thread> pool;
  pool.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    pool.emplace_back([&, i] {
      try {
        const Seed widened = parts[i].end + 1;
        const Seed stop = std::min(widened, range.end);
        if (stop - parts[i].start >= 2) {
          partials[i] = check_adjacency(
              SeedRange(parts[i].start, stop, range.width), fault);
        } else {
          partials[i].property = "adjacency";
          partials[i].width = range.width;
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

  VerificationReport merged = std::move(partials.front());
  for (std::size_t i = 1; i < partials.size(); ++i) {
    merged = merge(std::move(merged), partials[i]);
  }
  return merged;
}

}  // namespace transorder
