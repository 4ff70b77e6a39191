#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "transorder/factoradic.hpp"

using namespace transorder;

namespace {

// Enumerate every valid width-n code by counting through the mixed radix.
std::vector<FactoradicCode> all_codes(int n) {
  std::vector<FactoradicCode> codes;
  std::vector<int> digits(n, 0);
  while (true) {
    codes.push_back(FactoradicCode(digits));
    int i = 1;
    while (i < n) {
      if (++digits[i] <= i) break;
      digits[i] = 0;
      ++i;
    }
    if (i >= n) break;
  }
  return codes;
}

}  // namespace

TEST_CASE("integer_from_code evaluates the factorial-base sum", "[factoradic]") {
  CHECK(integer_from_code(FactoradicCode::from_msd({0, 2, 0, 0})) == 4);
  CHECK(integer_from_code(FactoradicCode::from_msd({1, 2, 1, 0})) == 11);
  CHECK(integer_from_code(FactoradicCode::from_msd({0, 0, 0, 0, 0})) == 0);
  CHECK(integer_from_code(FactoradicCode::from_msd({0})) == 0);
}

TEST_CASE("code_from_integer produces the standard factoradic", "[factoradic]") {
  CHECK(code_from_integer(Seed(4), 4) == FactoradicCode::from_msd({0, 2, 0, 0}));
  CHECK(code_from_integer(Seed(0), 6) ==
        FactoradicCode::from_msd({0, 0, 0, 0, 0, 0}));
  CHECK(code_from_integer(Seed(6), 4) == FactoradicCode::from_msd({1, 0, 0, 0}));
}

TEST_CASE("code_from_integer rejects seeds that do not fit", "[factoradic]") {
  CHECK_THROWS_MATCHES(code_from_integer(Seed(24), 4), error,
                       Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::width_too_small;
                       }));
  CHECK_THROWS_AS(code_from_integer(Seed(-1), 4), error);
  CHECK_THROWS_AS(code_from_integer(Seed(0), 0), error);
}

TEST_CASE("invalid codes are rejected naming the offending position",
          "[factoradic]") {
  try {
    FactoradicCode({0, 1, 3});  // position 2 allows at most 2
    FAIL("expected invalid_code");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_code);
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
  CHECK_THROWS_AS(FactoradicCode({1}), error);           // digits[0] must be 0
  CHECK_THROWS_AS(FactoradicCode({0, -1}), error);       // negative digit
  CHECK_THROWS_AS(FactoradicCode(std::vector<int>{}), error);  // width 0
}

TEST_CASE("decode_permutation applies the removal procedure", "[factoradic]") {
  CHECK(decode_permutation(FactoradicCode::from_msd({0, 2, 0, 0})) ==
        Permutation({1, 4, 2, 3}));
  CHECK(decode_permutation(FactoradicCode::from_msd({2, 1, 2, 2, 0, 0})) ==
        Permutation({3, 2, 5, 6, 1, 4}));
  CHECK(decode_permutation(FactoradicCode::from_msd({0, 0, 0, 0, 0})) ==
        Permutation::identity(5));
}

TEST_CASE("encode_permutation inverts the removal procedure", "[factoradic]") {
  CHECK(encode_permutation(Permutation({1, 4, 2, 3})) ==
        FactoradicCode::from_msd({0, 2, 0, 0}));
  CHECK(encode_permutation(Permutation({3, 2, 5, 1, 6, 4})) ==
        FactoradicCode::from_msd({2, 1, 2, 0, 1, 0}));
  CHECK(encode_permutation(Permutation::identity(7)) ==
        FactoradicCode(std::vector<int>(7, 0)));
}

TEST_CASE("invalid permutations are rejected", "[factoradic]") {
  CHECK_THROWS_MATCHES(Permutation({1, 2, 2}), error,
                       Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::invalid_permutation;
                       }));
  CHECK_THROWS_AS(Permutation({1, 2, 4}), error);  // 4 outside 1..3
  CHECK_THROWS_AS(Permutation({0, 1, 2}), error);  // entries are 1-based
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), error);
}

TEST_CASE("round trips hold exhaustively through width 7", "[factoradic]") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> perms_seen;
    std::uint64_t count = 0;
    for (const FactoradicCode& code : all_codes(n)) {
      CHECK(code_from_integer(integer_from_code(code), n) == code);
      const Permutation perm = decode_permutation(code);
      CHECK(encode_permutation(perm) == code);
      perms_seen.insert(perm.entries());
      ++count;
    }
    // decode is a bijection onto all n! permutations
    CHECK(count == detail::kFactorial64[n]);
    CHECK(perms_seen.size() == detail::kFactorial64[n]);
  }
}

TEST_CASE("digit at position zero is structurally zero", "[factoradic]") {
  for (const FactoradicCode& code : all_codes(5)) {
    REQUIRE(code.digit(0) == 0);
  }
}
