#pragma once

#include <cassert>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "transorder/factoradic.hpp"
#include "transorder/seed.hpp"

namespace transorder {

// One loop iteration of the unranking recurrence, k = n down to 1. f is the
// digit emitted for factorial position k-1.
struct UnrankStep {
  int k;
  int x;  // floor((s mod k!) / (k-1)!), the standard factoradic digit of s
  int d;  // correction term, always in [0, k]
  int f;  // (x - floor(s/k!) - d) mod k, Euclidean remainder
};

// Exactly one step per digit; doubles as the structural O(n) witness.
struct UnrankTrace {
  std::vector<UnrankStep> steps;
};

namespace detail {

template <class Int>
void div_mod(const Int& a, const Int& b, Int& quotient, Int& remainder) {
  if constexpr (std::is_integral_v<Int>) {
    quotient = a / b;
    remainder = a % b;
  } else {
    boost::multiprecision::divide_qr(a, b, quotient, remainder);
  }
}

// Shared by the machine-word and arbitrary-precision paths. Going down from
// k = n the loop maintains
//   rem  = s mod k!        (one divmod by (k-1)! peels the next digit)
//   quot = floor(s / k!)   (advanced by quot*k + x, no further division)
// so each step costs a constant number of Int multiplications/divisions.
// The d recurrence uses quot + (k+1)*d_up in place of the textbook
// (s + d_up*(k+1)!)/k!; the two agree exactly because d_up*(k+1)! is a
// multiple of k!.
template <class Int>
std::vector<int> unrank_digits(const Int& s, int n, UnrankTrace* trace) {
  std::vector<Int> fact(static_cast<std::size_t>(n) + 1);
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;

  std::vector<int> digits(static_cast<std::size_t>(n));
  if (trace) {
    trace->steps.clear();
    trace->steps.reserve(static_cast<std::size_t>(n));
  }

  Int rem = s;   // s mod n!, given s <= n!-1
  Int quot = 0;  // floor(s / n!)
  int d_up = 0;  // d_{k+1}, starting from d_{n+1} = 0
  Int step_quot, step_rem;

  for (int k = n; k >= 1; --k) {
    div_mod(rem, fact[k - 1], step_quot, step_rem);
    const int x = static_cast<int>(step_quot);
    rem = std::move(step_rem);

    const long long m = static_cast<long long>(k + 1) * (k + 1);
    const long long window =
        static_cast<long long>(quot % m) + static_cast<long long>(k + 1) * d_up;
    const int d = static_cast<int>(window % m / (k + 2));

#ifndef NDEBUG
    if constexpr (!std::is_integral_v<Int>) {
      // Literal form of the d recurrence, feasible without overflow here.
      if (k < n) {
        assert((s + fact[k + 1] * d_up) / fact[k] == quot + Int((k + 1) * d_up));
      }
    }
    assert(x >= 0 && x <= k - 1);
    assert(d >= 0 && d <= k);
#endif

    int f = (x - static_cast<int>(quot % k) - d) % k;
    if (f < 0) f += k;  // the dividend is frequently negative; stay Euclidean

    digits[static_cast<std::size_t>(k - 1)] = f;
    if (trace) trace->steps.push_back(UnrankStep{k, x, d, f});

    quot = quot * k + x;  // floor(s / (k-1)!) for the next step
    assert(quot == s / fact[k - 1]);
    d_up = d;
  }
  return digits;
}

// Inversion runs the same recurrence forward: before step k the digits
// already recovered determine Q_k = floor(s/k!), which together with d_{k+1}
// fixes d_k, and then x_k = (f_{k-1} + Q_k + d_k) mod k because x_k lies in
// [0, k). The x_k are the standard factoradic digits of s, and the running
// Q update doubles as their Horner evaluation: Q_0 = s.
template <class Int>
Int rank_value(const std::vector<int>& digits_by_position) {
  const int n = static_cast<int>(digits_by_position.size());
  Int quot = 0;  // Q_n = floor(s / n!) = 0
  int d_up = 0;
  for (int k = n; k >= 1; --k) {
    const long long m = static_cast<long long>(k + 1) * (k + 1);
    const long long window =
        static_cast<long long>(quot % m) + static_cast<long long>(k + 1) * d_up;
    const int d = static_cast<int>(window % m / (k + 2));
    const int x = (digits_by_position[static_cast<std::size_t>(k - 1)] +
                   static_cast<int>(quot % k) + d) %
                  k;
    quot = quot * k + x;
    d_up = d;
  }
  return quot;
}

inline void require_in_range(const Seed& s, int n) {
  if (n < 1) {
    throw error(errc::invalid_argument,
                "width must be >= 1, got " + std::to_string(n));
  }
  if (s < 0) {
    throw error(errc::invalid_argument, "seed must be non-negative");
  }
  if (s >= factorial(n)) {
    throw error(errc::out_of_range, "seed " + to_decimal(s) + " exceeds " +
                                        std::to_string(n) + "! - 1");
  }
}

}  // namespace detail

// Smallest n >= 1 with s <= n! - 1.
inline int minimal_width(const Seed& s) {
  if (s < 0) {
    throw error(errc::invalid_argument, "seed must be non-negative");
  }
  int n = 1;
  Seed fact = 1;
  while (s > fact - 1) {
    ++n;
    fact *= n;
  }
  return n;
}

// Seed -> factoradic code at the given width. Pass a trace to capture the
// per-step x/d/f values.
inline FactoradicCode unrank(const Seed& s, int n, UnrankTrace* trace = nullptr) {
  detail::require_in_range(s, n);
  std::vector<int> digits =
      n <= detail::kNativeWidth
          ? detail::unrank_digits(s.convert_to<std::uint64_t>(), n, trace)
          : detail::unrank_digits(s, n, trace);
  return FactoradicCode(std::move(digits));
}

inline Permutation unrank_permutation(const Seed& s, int n) {
  return decode_permutation(unrank(s, n));
}

// Inverse of unrank at the code's own width: rank(unrank(s, n)) == s and
// unrank(rank(c), width(c)) == c.
inline Seed rank(const FactoradicCode& code) {
  if (code.width() <= detail::kNativeWidth) {
    return Seed(detail::rank_value<std::uint64_t>(code.digits()));
  }
  return detail::rank_value<Seed>(code.digits());
}

}  // namespace transorder
