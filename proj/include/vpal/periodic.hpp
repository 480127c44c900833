#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vpal/arith.hpp"
#include "vpal/vpal.hpp"

namespace vpal {

/// One indicator entry: membership of the k-fold concatenation, or unknown
/// when its factorization blew the budget.
enum class Bit : std::uint8_t { zero, one, unknown };

/// One term of the decomposition: lambda times the indicator of multiples of a.
struct Term {
  std::uint64_t a = 1;
  std::int64_t lambda = 0;
  bool operator==(const Term&) const = default;
};

struct CValue {
  enum class Kind { finite, infinite, undetermined };
  Kind kind = Kind::undetermined;
  std::uint64_t value = 0;  // smallest k with entry 1, when finite
};

/// Empirical profile of the indicator sequence k -> [n(k) in V_b].
/// Periods and decompositions are candidates at this window size, never
/// proofs; unknown entries disable only what they touch.
struct IndicatorProfile {
  Nat n;
  std::uint64_t base = 10;
  std::vector<Bit> window;  // index k-1 holds entry k
  std::optional<std::uint64_t> candidate_period;
  std::optional<std::vector<Term>> decomposition;  // present and empty = zero function
  CValue c;
};

inline constexpr std::uint64_t kDefaultWindow = 120;

/// Entry k of the indicator. Requires the standing hypotheses: base does not
/// divide n and n is not a base-b palindrome.
Bit indicator(const Nat& n, std::uint64_t base, std::uint64_t k,
              const FactorEngine& engine = default_engine());

/// Entries 1..K. Shares one factorization of each repetition factor across
/// the whole window.
IndicatorProfile indicator_window(const Nat& n, std::uint64_t base, std::uint64_t K,
                                  const FactorEngine& engine = default_engine());

/// Smallest period consistent with a fully-known window. Rejects windows
/// containing unknown entries.
std::uint64_t detect_period(const std::vector<Bit>& window);

/// Moebius inversion of the window values over the divisors of omega.
/// Requires window length >= omega and no unknowns; throws when the window
/// is not reproduced by g(gcd(k, omega)), which signals a false period.
std::vector<Term> decompose(const std::vector<Bit>& window, std::uint64_t omega);

/// Full pipeline: window, candidate period, decomposition, c. Tries each
/// window-consistent period in ascending order until one reproduces every
/// known entry; leaves fields unset when none does.
IndicatorProfile analyze(const Nat& n, std::uint64_t base, std::uint64_t K = kDefaultWindow,
                         const FactorEngine& engine = default_engine());

/// lcm of the a-values of a consistent decomposition; nullopt when
/// undetermined at this window size.
std::optional<std::uint64_t> omega0(const Nat& n, std::uint64_t base,
                                    std::uint64_t K = kDefaultWindow,
                                    const FactorEngine& engine = default_engine());

CValue c_value(const Nat& n, std::uint64_t base, std::uint64_t K = kDefaultWindow,
               const FactorEngine& engine = default_engine());

/// Starting from a member n, emit the members n(1), n(1+w), n(1+2w), ...
/// Every emitted value is re-verified; a verification failure is a hard
/// error since it falsifies the candidate period.
std::vector<Nat> one_implies_infinitely_many(const Nat& n, std::uint64_t base,
                                             std::uint32_t count,
                                             const FactorEngine& engine = default_engine());

}  // namespace vpal
