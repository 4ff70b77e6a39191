#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "transorder/error.hpp"

namespace transorder {

// Seeds are arbitrary-precision non-negative integers; decimal strings are
// the interchange format. Widths small enough that every intermediate fits a
// machine word take an internal fast path with identical results by contract.
using Seed = boost::multiprecision::cpp_int;

namespace detail {

// Largest width whose factorial fits 64 bits: 20! < 2^63.
inline constexpr int kNativeWidth = 20;

inline constexpr std::array<std::uint64_t, kNativeWidth + 1> kFactorial64 = [] {
  std::array<std::uint64_t, kNativeWidth + 1> fact{};
  fact[0] = 1;
  for (int i = 1; i <= kNativeWidth; ++i) {
    fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  }
  return fact;
}();

}  // namespace detail

inline Seed factorial(int n) {
  if (n < 0) {
    throw error(errc::invalid_argument,
                "factorial of negative width " + std::to_string(n));
  }
  if (n <= detail::kNativeWidth) return Seed(detail::kFactorial64[n]);
  Seed result = detail::kFactorial64[detail::kNativeWidth];
  for (int i = detail::kNativeWidth + 1; i <= n; ++i) result *= i;
  return result;
}

inline Seed parse_seed(std::string_view text) {
  if (text.empty()) {
    throw error(errc::invalid_argument, "seed must be a decimal string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw error(errc::invalid_argument,
                  "seed must be a non-negative decimal string, got \"" +
                      std::string(text) + "\"");
    }
  }
  return Seed(std::string(text));
}

inline std::string to_decimal(const Seed& s) { return s.str(); }

}  // namespace transorder
