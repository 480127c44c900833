#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace vpal {

/// Arbitrary-precision nonnegative integer. Operations taking a Nat reject
/// negative values at the boundary.
using Nat = boost::multiprecision::cpp_int;

struct NatHash {
  std::size_t operator()(const Nat& n) const { return boost::hash<Nat>{}(n); }
};

struct PrimePower {
  Nat prime;
  std::uint32_t exponent = 1;
  bool operator==(const PrimePower&) const = default;
};

/// Multiset of (prime, exponent) pairs, ascending by prime. When the
/// factoring budget runs out, `unfactored` holds the composite remainder
/// and the factorization is incomplete ("unknown" downstream, never a
/// silently wrong value).
struct Factorization {
  std::vector<PrimePower> factors;
  Nat unfactored = 1;
  bool probable = false;  // some prime certified only probabilistically

  bool complete() const { return unfactored == 1; }
  Nat value() const;
};

struct FactorBudget {
  std::uint32_t trial_limit = 100'000;      // trial division by primes below this
  std::uint64_t rho_iterations = 3'000'000; // Brent iterations per attempt, big cofactors
  std::uint32_t rho_attempts = 6;
};

struct Primality {
  bool prime = false;
  bool certain = true;  // deterministic below 2^64; composite verdicts always certain
};

/// Factorization engine: trial division by a precomputed prime table, then
/// Pollard rho with Brent cycle detection under an iteration budget.
/// All queries are pure; the memo cache allows concurrent reads with
/// serialized insertion, so one engine can be shared across workers.
class FactorEngine {
 public:
  explicit FactorEngine(FactorBudget budget = {});

  /// n >= 1. n == 1 yields the empty factorization.
  Factorization factorize(const Nat& n) const;

  /// Batch-factor [lo, hi] with a segmented sieve and keep the results as
  /// the active lookup window. Later factorize() calls inside the window
  /// are answered from it. Readers see either the old or the new window.
  void prefetch(std::uint64_t lo, std::uint64_t hi) const;

  const FactorBudget& budget() const { return budget_; }

 private:
  struct Segment;

  Factorization factor_big(const Nat& n) const;

  FactorBudget budget_;
  mutable std::shared_ptr<const Segment> window_;
  mutable std::shared_mutex window_mutex_;
  mutable std::unordered_map<Nat, Factorization, NatHash> cache_;
  mutable std::shared_mutex cache_mutex_;
};

/// Shared process-wide engine with default budget.
const FactorEngine& default_engine();

Factorization factorize(const Nat& n);

Primality classify_prime(const Nat& n);
bool is_prime(const Nat& n);

/// v(n): over the prime factorization, sum prime+exponent for exponents >= 2
/// plus the bare primes with exponent 1. v(1) = 0. Additive over coprime
/// arguments. nullopt when the factorization is incomplete.
std::optional<Nat> v_of(const Nat& n, const FactorEngine& engine = default_engine());

/// A(n) = sum of prime*exponent over the factorization. A(1) = 0.
std::optional<Nat> alladi_a(const Nat& n, const FactorEngine& engine = default_engine());

/// psi(n) = product of prime*exponent over the factorization. psi(1) = 1.
std::optional<Nat> mullin_psi(const Nat& n, const FactorEngine& engine = default_engine());

/// true iff every exponent equals 1. n = 1 is squarefree.
std::optional<bool> is_squarefree(const Nat& n, const FactorEngine& engine = default_engine());

/// Fast path used by enumeration loops; always complete.
std::uint64_t v_u64(std::uint64_t n);

/// Ascending primes below 2^20 (shared immutable table).
const std::vector<std::uint32_t>& small_primes();

/// n >= 2: the pair (c, m) with n = c^m and m maximal (m = 1 when n is not
/// a perfect power).
std::pair<Nat, unsigned> primitive_root_power(const Nat& n);

/// Moebius function of m >= 1.
int mobius_u64(std::uint64_t m);

/// Ascending divisors of m >= 1.
std::vector<std::uint64_t> divisors_u64(std::uint64_t m);

/// Value of the d-th cyclotomic polynomial at x >= 2, via the exact quotient
/// of products of x^e - 1 over e | d.
Nat cyclotomic_value(std::uint64_t d, const Nat& x);

}  // namespace vpal
