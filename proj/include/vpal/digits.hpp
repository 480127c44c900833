#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vpal/arith.hpp"

namespace vpal {

/// Canonical base-b representation, most-significant digit first.
/// Leading digit is nonzero unless the value itself is 0.
struct BaseDigits {
  std::uint64_t base = 10;
  std::vector<std::uint64_t> digits;
  bool operator==(const BaseDigits&) const = default;
};

/// b >= 2. to_digits(0, b) yields [0].
BaseDigits to_digits(const Nat& n, std::uint64_t base);

/// Accepts non-canonical digit strings (leading zeros); rejects digits >= base.
Nat from_digits(const BaseDigits& d);

/// Digit reversal r_b(n). n >= 1; leading zeros of the reversal drop out.
Nat reverse(const Nat& n, std::uint64_t base);

Nat sum_digits(const Nat& n, std::uint64_t base);

/// n >= 1: true iff n equals its own base-b reversal.
bool is_palindrome(const Nat& n, std::uint64_t base);

/// k copies of n's base-b digit string: n * (b^(Lk) - 1) / (b^L - 1).
Nat concat_copies(const Nat& n, std::uint64_t k, std::uint64_t base);

/// 1 + b + ... + b^(k-1), the k-digit repunit.
Nat repunit(std::uint64_t k, std::uint64_t base);

/// Sum of (p+1)^(2i) for i in [0, k); congruent to k mod p.
Nat rho_k2(std::uint64_t p, std::uint64_t k);

/// All (k, n) with k * n = reverse(n, b), k >= 2, and n spanning 2..max_digits
/// base-b digits; sorted by n.
std::vector<std::pair<std::uint64_t, Nat>> find_reverse_multiples(std::uint64_t base,
                                                                  std::uint32_t max_digits);

}  // namespace vpal
