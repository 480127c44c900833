#include "vpal/periodic.hpp"

#include <cstdint>
#include <numeric>

#include "doctest.h"

using vpal::Bit;
using vpal::CValue;
using vpal::Nat;
using vpal::Term;

namespace {

std::vector<Bit> bits(std::initializer_list<int> vals) {
  std::vector<Bit> out;
  for (int v : vals) out.push_back(v ? Bit::one : Bit::zero);
  return out;
}

}  // namespace

// verifies: membership-indicator
TEST_CASE("indicator entries on frozen points") {
  CHECK(vpal::indicator(18, 10, 3) == Bit::one);
  CHECK(vpal::indicator(6, 4, 1) == Bit::one);
  CHECK(vpal::indicator(6, 4, 3) == Bit::zero);
  CHECK_THROWS(vpal::indicator(5, 10, 3));   // palindromic block
  CHECK_THROWS(vpal::indicator(20, 10, 2));  // base divides n
}

TEST_CASE("indicator windows match frozen patterns") {
  CHECK(vpal::indicator_window(6, 4, 9).window == bits({1, 1, 0, 1, 1, 0, 1, 1, 0}));
  CHECK(vpal::indicator_window(18, 10, 12).window ==
        bits({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(vpal::indicator_window(10, 6, 10).window == bits({1, 1, 1, 1, 0, 1, 1, 1, 1, 0}));
  CHECK(vpal::indicator_window(14, 8, 14).window ==
        bits({1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0}));
  CHECK(vpal::indicator_window(12, 10, 12).window ==
        bits({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(vpal::indicator_window(13, 10, 12).window ==
        bits({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("budget exhaustion yields unknown entries, never guesses") {
  vpal::FactorEngine tight({.trial_limit = 10, .rho_iterations = 4, .rho_attempts = 1});
  Nat p("1208925819614629174706189");
  Nat q("1208925819614629174706111");
  CHECK(vpal::indicator(p * q, 10, 2, tight) == Bit::unknown);
  // entries stay exact whenever the block itself factors: the repetition
  // factor is never factored, its prime content is read off by division
  CHECK(vpal::indicator(6, 4, 1, tight) == Bit::one);
  CHECK(vpal::indicator(6, 4, 31, tight) == Bit::one);
  CHECK(vpal::indicator(6, 4, 33, tight) == Bit::zero);
}

// verifies: indicator-periodicity
TEST_CASE("detect_period finds the smallest consistent period") {
  CHECK(vpal::detect_period(bits({1, 1, 1, 1, 1})) == 1);
  CHECK(vpal::detect_period(bits({1, 1, 0, 1, 1, 0})) == 3);
  CHECK(vpal::detect_period(bits({1, 0, 1, 0})) == 2);
  CHECK_THROWS(vpal::detect_period({}));
  CHECK_THROWS(vpal::detect_period({Bit::one, Bit::unknown}));
}

// verifies: indicator-decomposition
TEST_CASE("decompose inverts the window over the divisor lattice") {
  CHECK(vpal::decompose(bits({1, 1, 1}), 1) == std::vector<Term>{{1, 1}});
  CHECK(vpal::decompose(bits({1, 1, 0, 1, 1, 0}), 3) ==
        std::vector<Term>{{1, 1}, {3, -1}});
  CHECK(vpal::decompose(bits({0, 1, 0, 1}), 2) == std::vector<Term>{{2, 1}});
  CHECK(vpal::decompose(bits({0, 0, 0, 0}), 1).empty());
  // consistent at shift 3 but not of the gcd form: a false period
  CHECK_THROWS_AS(vpal::decompose(bits({1, 0, 0, 1}), 3), std::runtime_error);
}

TEST_CASE("analyze reconstructs every window entry") {
  for (auto [n, b, K] : {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{6, 4, 9},
                         {18, 10, 12},
                         {10, 6, 10},
                         {14, 8, 14},
                         {12, 10, 12}}) {
    auto prof = vpal::analyze(n, b, K);
    REQUIRE(prof.decomposition.has_value());
    REQUIRE(prof.candidate_period.has_value());
    auto g = [&](std::uint64_t d) { return prof.window[d - 1] == Bit::one; };
    std::uint64_t lcm_a = 1;
    for (const Term& t : *prof.decomposition) {
      CHECK(t.lambda != 0);
      CHECK(*prof.candidate_period % t.a == 0);
      lcm_a = std::lcm(lcm_a, t.a);
    }
    CHECK(lcm_a == *prof.candidate_period);
    for (std::uint64_t k = 1; k <= prof.window.size(); ++k) {
      // gcd dependence and exact reconstruction
      CHECK((prof.window[k - 1] == Bit::one) ==
            g(std::gcd(k, *prof.candidate_period)));
      std::int64_t sum = 0;
      for (const Term& t : *prof.decomposition)
        if (k % t.a == 0) sum += t.lambda;
      CHECK(sum == (prof.window[k - 1] == Bit::one ? 1 : 0));
    }
  }
}

// verifies: smallest-period-lcm
TEST_CASE("omega0 on frozen cases") {
  CHECK(vpal::omega0(18, 10, 12).value() == 1);
  CHECK(vpal::omega0(6, 4, 9).value() == 3);
  CHECK(vpal::omega0(10, 6, 10).value() == 5);
  CHECK(vpal::omega0(14, 8, 14).value() == 7);
}

TEST_CASE("two-term decomposition for doubled primes") {
  for (std::uint64_t p : {3, 5, 7}) {
    auto prof = vpal::analyze(2 * p, p + 1, 2 * p);
    REQUIRE(prof.decomposition.has_value());
    CHECK(*prof.candidate_period == p);
    CHECK(*prof.decomposition == std::vector<Term>{{1, 1}, {p, -1}});
  }
}

// verifies: first-membership-index
TEST_CASE("c values") {
  auto a = vpal::c_value(18, 10, 12);
  CHECK(a.kind == CValue::Kind::finite);
  CHECK(a.value == 1);

  auto b = vpal::c_value(6, 4, 9);
  CHECK(b.kind == CValue::Kind::finite);
  CHECK(b.value == 1);

  auto c = vpal::c_value(12, 10, 12);
  CHECK(c.kind == CValue::Kind::infinite);
}

// verifies: one-implies-infinitely-many
TEST_CASE("members replicate along the period") {
  auto ten = vpal::one_implies_infinitely_many(18, 10, 3);
  CHECK(ten == std::vector<Nat>{18, 1818, 181818});

  auto four = vpal::one_implies_infinitely_many(6, 4, 2);
  CHECK(four == std::vector<Nat>{6, 26214});

  auto fig = vpal::one_implies_infinitely_many(198, 10, 1);
  CHECK(fig == std::vector<Nat>{198});

  CHECK_THROWS(vpal::one_implies_infinitely_many(12, 10, 2));  // not a member

  for (const Nat& m : four) CHECK(vpal::is_v_palindrome(m, 4).yes());
}
