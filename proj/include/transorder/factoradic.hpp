#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "transorder/error.hpp"
#include "transorder/seed.hpp"

namespace transorder {

// Factoradic digit vector. digits()[i] is the coefficient of i!, so
// 0 <= digits()[i] <= i and digits()[0] is always zero. Rendering order
// (printing, JSON, the from_msd factory) is most-significant-first.
class FactoradicCode {
 public:
  explicit FactoradicCode(std::vector<int> digits_by_position)
      : digits_(std::move(digits_by_position)) {
    if (digits_.empty()) {
      throw error(errc::invalid_code, "factoradic code needs width >= 1");
    }
    for (int i = 0; i < width(); ++i) {
      if (digits_[i] < 0 || digits_[i] > i) {
        throw error(errc::invalid_code,
                    "digit " + std::to_string(digits_[i]) + " at position " +
                        std::to_string(i) + " violates bound 0.." +
                        std::to_string(i));
      }
    }
  }

  // Builds from the rendering order f_{n-1} ... f_0.
  static FactoradicCode from_msd(std::vector<int> digits_msd) {
    std::reverse(digits_msd.begin(), digits_msd.end());
    return FactoradicCode(std::move(digits_msd));
  }

  int width() const { return static_cast<int>(digits_.size()); }

  // Indexed by factorial position: digit(i) multiplies i!.
  int digit(int position) const { return digits_.at(position); }

  const std::vector<int>& digits() const { return digits_; }

  std::vector<int> msd_digits() const {
    return std::vector<int>(digits_.rbegin(), digits_.rend());
  }

  friend bool operator==(const FactoradicCode&, const FactoradicCode&) = default;

 private:
  std::vector<int> digits_;
};

// One-line notation over the objects 1..n: entries()[i] is the value at
// 1-based position i+1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = width();
    if (n < 1) {
      throw error(errc::invalid_permutation, "permutation needs width >= 1");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int value : entries_) {
      if (value < 1 || value > n) {
        throw error(errc::invalid_permutation,
                    "entry " + std::to_string(value) + " outside 1.." +
                        std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(value - 1)]) {
        throw error(errc::invalid_permutation,
                    "entry " + std::to_string(value) + " appears twice");
      }
      seen[static_cast<std::size_t>(value - 1)] = true;
    }
  }

  static Permutation identity(int n) {
    if (n < 1) {
      throw error(errc::invalid_permutation, "permutation needs width >= 1");
    }
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    return Permutation(std::move(entries));
  }

  int width() const { return static_cast<int>(entries_.size()); }

  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// Sum of digit(i) * i!, evaluated by Horner over the rendering order.
inline Seed integer_from_code(const FactoradicCode& code) {
  const std::vector<int>& digits = code.digits();
  const int n = code.width();
  Seed value = digits[static_cast<std::size_t>(n - 1)];
  for (int i = n - 1; i >= 1; --i) {
    value = value * i + digits[static_cast<std::size_t>(i - 1)];
  }
  return value;
}

// Standard factoradic of s: repeated division by 1, 2, ..., width. Note this
// is distinct from unrank(s, width) in general: the standard code of 6 at
// width 4 is [1,0,0,0] while unrank(6, 4) is [1,2,1,0].
inline FactoradicCode code_from_integer(const Seed& s, int width) {
  if (width < 1) {
    throw error(errc::invalid_argument, "width must be >= 1");
  }
  if (s < 0) {
    throw error(errc::invalid_argument, "seed must be non-negative");
  }
  std::vector<int> digits(static_cast<std::size_t>(width));
  Seed rest = s;
  for (int i = 1; i <= width; ++i) {
    digits[static_cast<std::size_t>(i - 1)] = static_cast<int>(rest % i);
    rest /= i;
  }
  if (rest != 0) {
    throw error(errc::width_too_small,
                to_decimal(s) + " does not fit in " + std::to_string(width) +
                    " factoradic digits");
  }
  return FactoradicCode(std::move(digits));
}

// Removal decode: walk the digits most-significant-first, each one selecting
// (0-based) the next element of the shrinking ordered pool (1, ..., n).
inline Permutation decode_permutation(const FactoradicCode& code) {
  const int n = code.width();
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const int index = code.digits()[static_cast<std::size_t>(i)];
    out.push_back(pool[static_cast<std::size_t>(index)]);
    pool.erase(pool.begin() + index);
  }
  return Permutation(std::move(out));
}

// Exact inverse of decode_permutation: each digit is the index of the next
// entry within the not-yet-consumed pool.
inline FactoradicCode encode_permutation(const Permutation& perm) {
  const int n = perm.width();
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    const int value = perm.entries()[static_cast<std::size_t>(step)];
    const auto it = std::find(pool.begin(), pool.end(), value);
    digits[static_cast<std::size_t>(n - 1 - step)] =
        static_cast<int>(it - pool.begin());
    pool.erase(it);
  }
  return FactoradicCode(std::move(digits));
}

}  // namespace transorder
