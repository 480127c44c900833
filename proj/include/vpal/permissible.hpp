#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vpal/arith.hpp"

namespace vpal {

using Rat = boost::multiprecision::cpp_rational;

/// Exact solution of the two-digit system a*b + c = m1*t, c*b + a = m2*t.
struct RationalPair {
  Rat a;
  Rat c;
};

/// Digits (a, c) of a two-digit member n = (a,c)_b with n = m1*t and
/// reversal m2*t. Invariants: 1 <= a < c < base, gcd(t, rad(m1*m2)) = 1.
struct PermissibleTriple {
  std::uint64_t base = 10;
  std::uint64_t a = 0;
  std::uint64_t c = 0;
  Nat t;
  bool operator==(const PermissibleTriple&) const = default;
};

/// The machinery generalizes from (5, 6) to any pair with a common v-value;
/// every operation below validates m1 < m2 and v(m1) = v(m2). The coprimality
/// condition generalizes conservatively to gcd(t, rad(m1*m2)) = 1.

/// a = t(m1*b - m2)/(b^2 - 1), c = t(m2*b - m1)/(b^2 - 1), exactly.
RationalPair solve_system(std::uint64_t base, const Nat& t, std::uint64_t m1 = 5,
                          std::uint64_t m2 = 6);

/// Smallest t making both digits integral: the lcm of (b^2-1)/gcd(m1*b - m2, b^2-1)
/// and (b^2-1)/gcd(m2*b - m1, b^2-1). Divides b^2 - 1.
Nat f_of_b(std::uint64_t base, std::uint64_t m1 = 5, std::uint64_t m2 = 6);

/// All admissible t for the base: multiples of f_of_b coprime to rad(m1*m2)
/// with t * (m2*b - m1) < b * (b^2 - 1), i.e. the digit c stays below b.
std::vector<Nat> S_of_b(std::uint64_t base, std::uint64_t m1 = 5, std::uint64_t m2 = 6);

/// One triple per t in S_of_b, each re-verified against the membership
/// predicate; a failure there is a hard error.
std::vector<PermissibleTriple> permissible_triples(std::uint64_t base, std::uint64_t m1 = 5,
                                                   std::uint64_t m2 = 6,
                                                   const FactorEngine& engine = default_engine());

/// Closed-form triple ((150k-6)/11, (180k-5)/11, (900k^2-1)/11) for base 30k,
/// defined exactly when k = 4 (mod 11); validated like permissible_triples.
PermissibleTriple triple_for_30k(std::uint64_t k, const FactorEngine& engine = default_engine());

/// Bases b <= limit with S_of_b nonempty. Contains every b = 120 (mod 330).
std::vector<std::uint64_t> bases_with_triples(std::uint64_t limit, std::uint64_t m1 = 5,
                                              std::uint64_t m2 = 6);

/// Record (b, a, c, t, n = (a,c)_b, v), one "key: value" line per field.
std::string serialize(const PermissibleTriple& triple,
                      const FactorEngine& engine = default_engine());

}  // namespace vpal
