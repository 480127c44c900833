#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vpal/arith.hpp"
#include "vpal/digits.hpp"

namespace vpal {

enum class Verdict { yes, no, unknown };

/// The three membership conditions, in evaluation order:
/// divisibility (base divides n), palindromic (n equals its reversal),
/// v_mismatch (the arithmetic function disagrees across the reversal).
enum class Condition { divisibility, palindromic, v_mismatch };

enum class ArithFn { v, A, psi };

struct VPalVerdict {
  Verdict value = Verdict::no;
  std::optional<Condition> failed_condition;
  std::optional<Nat> v_left, v_right;
  bool probable = false;  // a prime on either side certified only probabilistically

  bool yes() const { return value == Verdict::yes; }
};

/// Membership of n in V_b: base does not divide n, n is not a base-b
/// palindrome, and v(n) = v(reverse(n, b)). Unknown only when the factoring
/// budget ran out on either side.
VPalVerdict is_v_palindrome(const Nat& n, std::uint64_t base,
                            const FactorEngine& engine = default_engine());

/// Same conditions with f in place of v, f one of v, A, psi.
VPalVerdict is_f_palindrome(const Nat& n, std::uint64_t base, ArithFn f,
                            const FactorEngine& engine = default_engine());

struct Enumeration {
  std::vector<Nat> members;   // ascending
  std::vector<Nat> unknowns;  // ascending; factoring budget exceeded, never dropped
};

/// All members of V_b up to limit, ascending. Workers partition the range;
/// the merge is deterministic.
Enumeration enumerate_v_palindromes(std::uint64_t base, std::uint64_t limit,
                                    unsigned threads = 1);

/// min(V_b) when it is <= cap.
std::optional<Nat> smallest_v_palindrome(std::uint64_t base, std::uint64_t cap);

struct Gap {
  Nat start;
  Nat length;
};

/// Longest run of consecutive non-members within 1..limit; earliest start wins ties.
Gap longest_gap(std::uint64_t base, std::uint64_t limit);

/// Primes q <= limit that are v-palindromes in the given base.
std::vector<Nat> find_prime_v_palindromes(std::uint64_t base, std::uint64_t limit);

/// Values 5*10^m - 1 for m <= m_max where both 5*10^m - 1 and 5*10^m - 3 are
/// prime: the only possible shapes of base-ten prime v-palindromes.
std::vector<Nat> base10_prime_candidates(std::uint32_t m_max);

/// All n <= limit with n != reverse(n, 10) and n = v(reverse(n, 10)).
std::vector<Nat> conjecture3_scan(std::uint64_t limit);

/// Members of V_b up to limit where n and reverse(n, b) are both squarefree.
std::vector<Nat> squarefree_v_palindromes(std::uint64_t base, std::uint64_t limit);

}  // namespace vpal
