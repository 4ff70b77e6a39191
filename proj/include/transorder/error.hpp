#pragma once

#include <stdexcept>
#include <string>

namespace transorder {

// Failure categories surfaced by the library. Every exception thrown here is
// a transorder::error carrying one of these codes.
enum class errc {
  invalid_code,               // factoradic digit exceeds its positional bound
  width_too_small,            // integer does not fit in the requested digit count
  invalid_permutation,        // entries are not a bijection of 1..n
  out_of_range,               // seed exceeds n!-1 for the chosen width
  incompatible_permutations,  // operands have different widths
  oracle_size_exceeded,       // exhaustive oracle asked to go beyond its guard
  not_adjacent,               // permutations differ in neither 0 nor 2 positions
  invalid_argument,           // malformed input (negative seed, zero chunks, ...)
};

inline const char* errc_label(errc code) {
  switch (code) {
    case errc::invalid_code: return "invalid-code";
    case errc::width_too_small: return "width-too-small";
    case errc::invalid_permutation: return "invalid-permutation";
    case errc::out_of_range: return "out-of-range";
    case errc::incompatible_permutations: return "incompatible-permutations";
    case errc::oracle_size_exceeded: return "oracle-size-exceeded";
    case errc::not_adjacent: return "not-adjacent";
    case errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace transorder
