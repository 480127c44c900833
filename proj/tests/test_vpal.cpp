#include "vpal/vpal.hpp"

#include <cstdint>
#include <map>

#include "doctest.h"

using vpal::ArithFn;
using vpal::Condition;
using vpal::Nat;
using vpal::Verdict;

namespace {

// Independent oracle: trial-division v plus direct digit loops.
std::uint64_t oracle_v(std::uint64_t n) {
  std::uint64_t acc = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t e = 0;
    while (n % p == 0) n /= p, ++e;
    acc += e >= 2 ? p + e : p;
  }
  if (n > 1) acc += n;
  return acc;
}

std::uint64_t oracle_reverse(std::uint64_t n, std::uint64_t b) {
  std::uint64_t r = 0;
  while (n) r = r * b + n % b, n /= b;
  return r;
}

bool oracle_member(std::uint64_t n, std::uint64_t b) {
  if (n % b == 0) return false;
  std::uint64_t r = oracle_reverse(n, b);
  return r != n && oracle_v(n) == oracle_v(r);
}

}  // namespace

// verifies: vpal-membership-conditions
TEST_CASE("verdicts on frozen points") {
  auto a = vpal::is_v_palindrome(198, 10);
  CHECK(a.value == Verdict::yes);
  CHECK(a.v_left.value() == 18);
  CHECK(a.v_right.value() == 18);
  CHECK_FALSE(a.probable);

  auto b = vpal::is_v_palindrome(100, 10);
  CHECK(b.value == Verdict::no);
  CHECK(b.failed_condition == Condition::divisibility);
  CHECK_FALSE(b.v_left.has_value());

  auto c = vpal::is_v_palindrome(121, 10);
  CHECK(c.value == Verdict::no);
  CHECK(c.failed_condition == Condition::palindromic);
  CHECK_FALSE(c.v_left.has_value());

  CHECK(vpal::is_v_palindrome(109, 16).value == Verdict::yes);
  CHECK(vpal::is_v_palindrome(18, 10).value == Verdict::yes);
  CHECK(vpal::is_v_palindrome(19, 10).value == Verdict::no);
  CHECK(vpal::is_v_palindrome(19, 10).failed_condition == Condition::v_mismatch);
}

// verifies: f-palindrome-generalization
TEST_CASE("f-palindrome variants") {
  CHECK(vpal::is_f_palindrome(198, 10, ArithFn::v).value == Verdict::yes);
  CHECK(vpal::is_f_palindrome(200, 10, ArithFn::A).failed_condition ==
        Condition::divisibility);

  auto a18 = vpal::is_f_palindrome(18, 10, ArithFn::A);
  CHECK(a18.value == Verdict::no);
  CHECK(a18.v_left.value() == 8);
  CHECK(a18.v_right.value() == 12);

  // A-palindromes and psi-palindromes below 500 in base ten
  std::vector<Nat> a_members, psi_members;
  for (std::uint64_t n = 1; n <= 500; ++n) {
    if (vpal::is_f_palindrome(n, 10, ArithFn::A).yes()) a_members.emplace_back(n);
    if (vpal::is_f_palindrome(n, 10, ArithFn::psi).yes()) psi_members.emplace_back(n);
  }
  CHECK(a_members == std::vector<Nat>{45, 54, 495});
  CHECK(psi_members == std::vector<Nat>{18, 81, 198});
}

TEST_CASE("verdict is unknown when factoring gives out") {
  vpal::FactorEngine tight({.trial_limit = 10, .rho_iterations = 4, .rho_attempts = 1});
  Nat p("1208925819614629174706189");
  Nat q("1208925819614629174706111");
  Nat hard = p * q;
  REQUIRE(hard % 10 != 0);
  REQUIRE(hard != vpal::reverse(hard, 10));
  auto verdict = vpal::is_v_palindrome(hard, 10, tight);
  CHECK(verdict.value == Verdict::unknown);
  CHECK_FALSE(verdict.failed_condition.has_value());
}

// verifies: base10-enumeration
TEST_CASE("enumeration matches frozen prefixes") {
  auto small = vpal::enumerate_v_palindromes(10, 100);
  CHECK(small.members == std::vector<Nat>{18, 81});
  CHECK(small.unknowns.empty());

  CHECK(vpal::enumerate_v_palindromes(4, 5).members.empty());

  auto b10 = vpal::enumerate_v_palindromes(10, 2000);
  CHECK(b10.members == std::vector<Nat>{18, 81, 198, 576, 675, 819, 891, 918, 1131, 1304,
                                        1311, 1818, 1998});

  auto b4 = vpal::enumerate_v_palindromes(4, 120);
  CHECK(b4.members == std::vector<Nat>{6, 9, 30, 45, 102});
}

TEST_CASE("parallel enumeration is deterministic") {
  auto solo = vpal::enumerate_v_palindromes(10, 300000, 1);
  auto multi = vpal::enumerate_v_palindromes(10, 300000, 4);
  CHECK(solo.members == multi.members);
  CHECK(std::is_sorted(solo.members.begin(), solo.members.end()));
}

TEST_CASE("enumerate equals the pointwise predicate") {
  auto got = vpal::enumerate_v_palindromes(7, 3000);
  std::vector<Nat> expect;
  for (std::uint64_t n = 1; n <= 3000; ++n)
    if (vpal::is_v_palindrome(n, 7).yes()) expect.emplace_back(n);
  CHECK(got.members == expect);
}

// verifies: table1-smallest
TEST_CASE("smallest member per base matches the survey") {
  const std::map<std::uint64_t, std::uint64_t> table{
      {2, 175}, {3, 1280}, {4, 6},    {5, 288},  {6, 10},  {7, 731},
      {8, 14},  {9, 93},   {10, 18},  {11, 135}, {12, 22}, {13, 63},
      {14, 26}, {15, 291}, {16, 109}, {17, 581}, {18, 34}, {19, 144}};
  for (const auto& [base, expect] : table)
    CHECK(vpal::smallest_v_palindrome(base, 2000).value() == Nat(expect));
  CHECK_FALSE(vpal::smallest_v_palindrome(10, 17).has_value());
}

// verifies: gap-199-377
TEST_CASE("longest gap") {
  auto g = vpal::longest_gap(10, 600);
  CHECK(g.start == 199);
  CHECK(g.length == 377);

  auto h = vpal::longest_gap(10, 17);
  CHECK(h.start == 1);
  CHECK(h.length == 17);

  auto i = vpal::longest_gap(4, 5);
  CHECK(i.start == 1);
  CHECK(i.length == 5);
}

// verifies: prime-members
TEST_CASE("prime v-palindromes") {
  CHECK(vpal::find_prime_v_palindromes(16, 1000) == std::vector<Nat>{109});
  auto b276 = vpal::find_prime_v_palindromes(276, 1000);
  CHECK(std::find(b276.begin(), b276.end(), Nat(467)) != b276.end());
  auto b10 = vpal::find_prime_v_palindromes(10, 100000);
  CHECK(b10.empty());
  // any base-ten find must have the shape 5*10^m - 1
  for (const auto& q : b10) CHECK((q + 1) % 5 == 0);
}

// verifies: base10-prime-candidate-form
TEST_CASE("base-ten prime candidate shapes") {
  CHECK(vpal::base10_prime_candidates(6).empty());
  CHECK_THROWS(vpal::base10_prime_candidates(0));
}

// verifies: conjecture3-unique-49
TEST_CASE("scan for fixed points of v after reversal") {
  CHECK(vpal::conjecture3_scan(10).empty());
  CHECK(vpal::conjecture3_scan(100) == std::vector<Nat>{49});
  CHECK(vpal::conjecture3_scan(20000) == std::vector<Nat>{49});
}

// verifies: conjecture2-squarefree-scan
TEST_CASE("squarefree members") {
  CHECK(vpal::squarefree_v_palindromes(10, 600).empty());
  CHECK(vpal::squarefree_v_palindromes(10, 10000) ==
        std::vector<Nat>{1131, 1311, 2262, 2622, 4154, 4514, 8749, 9478});
  CHECK(vpal::squarefree_v_palindromes(4, 10).empty());
}

TEST_CASE("membership is symmetric under reversal when both sides qualify") {
  for (std::uint64_t b = 2; b <= 10; ++b)
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      if (n % b == 0) continue;
      std::uint64_t r = oracle_reverse(n, b);
      if (r % b == 0) continue;
      CHECK(vpal::is_v_palindrome(n, b).yes() == vpal::is_v_palindrome(r, b).yes());
    }
}

TEST_CASE("predicate agrees with the independent oracle") {
  for (std::uint64_t b = 2; b <= 12; ++b)
    for (std::uint64_t n = 1; n <= 10000; ++n)
      CHECK(vpal::is_v_palindrome(n, b).yes() == oracle_member(n, b));
}
