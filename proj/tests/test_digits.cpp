#include "vpal/digits.hpp"

#include <cstdint>

#include "doctest.h"

using vpal::BaseDigits;
using vpal::Nat;

// verifies: digit-expansion
TEST_CASE("to_digits canonical forms") {
  CHECK(vpal::to_digits(6, 4).digits == std::vector<std::uint64_t>{1, 2});
  CHECK(vpal::to_digits(0, 7).digits == std::vector<std::uint64_t>{0});
  CHECK(vpal::to_digits(102, 4).digits == std::vector<std::uint64_t>{1, 2, 1, 2});
  CHECK(vpal::to_digits(175, 2).digits == std::vector<std::uint64_t>{1, 0, 1, 0, 1, 1, 1, 1});
  CHECK(vpal::to_digits(109, 16).digits == std::vector<std::uint64_t>{6, 13});
  CHECK_THROWS(vpal::to_digits(5, 1));
}

TEST_CASE("from_digits and round trips") {
  CHECK(vpal::from_digits({10, {1, 8}}) == 18);
  CHECK(vpal::from_digits({16, {6, 13}}) == 109);
  CHECK(vpal::from_digits({16, {13, 6}}) == 214);
  CHECK(vpal::from_digits({5, {1}}) == 1);
  CHECK(vpal::from_digits({10, {0, 1, 8}}) == 18);  // leading zeros tolerated
  CHECK_THROWS(vpal::from_digits({10, {3, 10}}));   // digit out of range
  CHECK_THROWS(vpal::from_digits({10, {}}));

  for (std::uint64_t b = 2; b <= 16; ++b)
    for (std::uint64_t n = 0; n <= 3000; n += 7)
      CHECK(vpal::from_digits(vpal::to_digits(n, b)) == n);
}

// verifies: digit-reversal
TEST_CASE("reverse on frozen points") {
  CHECK(vpal::reverse(18, 10) == 81);
  CHECK(vpal::reverse(200, 10) == 2);
  CHECK(vpal::reverse(2, 2) == 1);
  CHECK(vpal::reverse(10, 6) == 25);
  CHECK(vpal::reverse(109, 16) == 214);
  CHECK_THROWS(vpal::reverse(0, 10));
}

// verifies: reverse-involution
TEST_CASE("reverse is an involution off multiples of the base") {
  for (std::uint64_t b : {2, 3, 7, 10, 16})
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      if (n % b == 0) continue;
      CHECK(vpal::reverse(vpal::reverse(n, b), b) == n);
    }
}

// verifies: lemma-reverse-2n
TEST_CASE("reverse of 2n in base n+1 is n squared") {
  for (std::uint64_t n = 2; n <= 10000; ++n) CHECK(vpal::reverse(2 * n, n + 1) == Nat(n) * n);
}

// verifies: digit-sum
TEST_CASE("sum_digits") {
  CHECK(vpal::sum_digits(198, 10) == 18);
  CHECK(vpal::sum_digits(0, 10) == 0);
  CHECK(vpal::sum_digits(109, 16) == 19);
}

// verifies: palindrome-predicate
TEST_CASE("is_palindrome") {
  CHECK(vpal::is_palindrome(121, 10));
  CHECK_FALSE(vpal::is_palindrome(18, 10));
  CHECK(vpal::is_palindrome(5, 10));
  CHECK_FALSE(vpal::is_palindrome(102, 4));  // digits (1,2,1,2)
}

TEST_CASE("is_palindrome across bases") {
  // 45 = 101101 in base 2, a palindrome there but not in base 10
  CHECK(vpal::is_palindrome(45, 2));
  CHECK_FALSE(vpal::is_palindrome(45, 10));
}

// verifies: concat-closed-form
TEST_CASE("concat_copies closed form equals digit splicing") {
  CHECK(vpal::concat_copies(18, 3, 10) == 181818);
  CHECK(vpal::concat_copies(201, 4, 10) == Nat("201201201201"));
  CHECK(vpal::concat_copies(42, 1, 10) == 42);

  for (std::uint64_t b : {2, 5, 10, 13})
    for (std::uint64_t n : {1ull, 7ull, 18ull, 100ull, 3071ull})
      for (std::uint64_t k = 1; k <= 5; ++k) {
        BaseDigits d = vpal::to_digits(n, b);
        BaseDigits spliced{b, {}};
        for (std::uint64_t i = 0; i < k; ++i)
          spliced.digits.insert(spliced.digits.end(), d.digits.begin(), d.digits.end());
        CHECK(vpal::concat_copies(n, k, b) == vpal::from_digits(spliced));
      }
}

// verifies: repunit-closed-form
TEST_CASE("repunit") {
  CHECK(vpal::repunit(3, 4) == 21);
  CHECK(vpal::repunit(1, 7) == 1);
  CHECK(vpal::repunit(2, 10) == 11);
  CHECK(vpal::repunit(6, 10) == 111111);
}

// verifies: alternating-block-sum
TEST_CASE("rho_k2 values and congruence") {
  CHECK(vpal::rho_k2(3, 2) == 17);
  CHECK(vpal::rho_k2(5, 1) == 1);
  CHECK(vpal::rho_k2(3, 3) == 273);
  CHECK(vpal::rho_k2(3, 3) % 3 == 0);

  for (std::uint64_t p : {3, 5, 7, 11, 13})
    for (std::uint64_t k = 1; k <= 40; ++k) {
      Nat r = vpal::rho_k2(p, k);
      CHECK(r % 2 == 1);
      CHECK(r % p == k % p);
    }
}

TEST_CASE("long and short digit strings of the concatenation lemma") {
  // (1, n, ..., n, n-1) with k middle digits, base n+1, equals 2n * repunit(k+1)
  // (n-1, n, ..., n, 1) equals n^2 * repunit(k+1)
  for (std::uint64_t n : {2, 3, 5, 9, 12})
    for (std::uint64_t k = 0; k <= 6; ++k) {
      BaseDigits lo{n + 1, {1}}, hi{n + 1, {n - 1}};
      for (std::uint64_t i = 0; i < k; ++i) {
        lo.digits.push_back(n);
        hi.digits.push_back(n);
      }
      lo.digits.push_back(n - 1);
      hi.digits.push_back(1);
      Nat rep = vpal::repunit(k + 1, n + 1);
      CHECK(vpal::from_digits(lo) == 2 * n * rep);
      CHECK(vpal::from_digits(hi) == Nat(n) * n * rep);
    }
}

// verifies: reverse-multiplier-solutions
TEST_CASE("find_reverse_multiples") {
  auto four = vpal::find_reverse_multiples(10, 4);
  REQUIRE(four.size() == 2);
  CHECK(four[0] == std::pair<std::uint64_t, Nat>{9, 1089});
  CHECK(four[1] == std::pair<std::uint64_t, Nat>{4, 2178});

  auto five = vpal::find_reverse_multiples(10, 5);
  REQUIRE(five.size() == 4);
  CHECK(five[2] == std::pair<std::uint64_t, Nat>{9, 10989});
  CHECK(five[3] == std::pair<std::uint64_t, Nat>{4, 21978});

  CHECK(vpal::find_reverse_multiples(2, 6).empty());

  for (const auto& [k, n] : five) CHECK(Nat(k) < n);
}
