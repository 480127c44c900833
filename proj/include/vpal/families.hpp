#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vpal/arith.hpp"
#include "vpal/digits.hpp"
#include "vpal/vpal.hpp"

namespace vpal {

enum class FamilyTheorem {
  base10_18rho,   // 18 * rho in base ten, rho a palindrome over {0,1}
  two_p,          // 2p in base p+1
  two_p_concat,   // k-fold concatenation of 2p in base p+1
  two_p_repunit,  // 2p times the (k+1)-digit repunit in base p+1
  p2_rho,         // 2p^2 * rho in base p^2+1, rho a palindrome over {0,1}
  p2_concat,      // k-fold concatenation of 2p^2 in base p^2+1
  p2_repunit,     // 2p^2 times the (k+1)-digit repunit in base p^2+1
};

/// Verified witness that a constructed number is a member. v-values are
/// absent only when the exact values exceed the factoring budget; the
/// verdict itself is exact regardless (shared factors cancel).
struct FamilyCertificate {
  FamilyTheorem theorem_id = FamilyTheorem::two_p;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> k;
  std::optional<Nat> rho;
  Nat number;
  std::uint64_t base = 10;
  Nat reversal;
  std::optional<Nat> v_left, v_right;
  bool verified = false;
  bool probable = false;
};

/// Outcome of the one family theorem stated as an iff: a certificate when
/// p does not divide k, otherwise a refusal carrying the negative verdict.
struct ConcatOutcome {
  std::optional<FamilyCertificate> certificate;
  VPalVerdict verdict;
};

/// Stable lower-case name of a family theorem, e.g. "2p-concat".
const char* theorem_name(FamilyTheorem id);

/// Structured text record: theorem id, parameters, number in base ten and in
/// base b, v-values, verdict. One "key: value" line per field.
std::string serialize(const FamilyCertificate& cert);

/// Base-ten palindromes over the digits {0,1} with at most max_len digits,
/// ascending, leading digit 1.
std::vector<Nat> binary_palindromes(std::uint32_t max_len);

/// Certificate for 18 * rho in base ten. rho must be a base-ten palindrome
/// over the digits {0,1}.
FamilyCertificate base10_18rho(const Nat& rho, const FactorEngine& engine = default_engine());

/// Certificate for 2p in base p+1; the reversal is p^2.
FamilyCertificate construct_2p(std::uint64_t p, const FactorEngine& engine = default_engine());

/// The k-fold concatenation of 2p in base p+1 is a member exactly when p
/// does not divide k; both directions are checked against the predicate and
/// a disagreement is a hard error.
ConcatOutcome construct_2p_concat(std::uint64_t p, std::uint64_t k,
                                  const FactorEngine& engine = default_engine());

/// Certificate for 2p times the (k+1)-digit repunit in base p+1, with digit
/// shape (1, p, ..., p, p-1) holding k middle digits. Requires p not
/// dividing k+1.
FamilyCertificate construct_2p_repunit(std::uint64_t p, std::uint64_t k,
                                       const FactorEngine& engine = default_engine());

/// Certificate for 2p^2 * rho in base p^2+1. rho is passed as digits to keep
/// "the integer 11" and "digits (1,1)" unambiguous; its base must equal
/// p^2+1 and its digits must form a palindrome over {0,1}.
FamilyCertificate construct_p2_rho(std::uint64_t p, const BaseDigits& rho,
                                   const FactorEngine& engine = default_engine());

/// k-fold concatenation of 2p^2 in base p^2+1, i.e. rho alternating
/// 1,0,1,...,1 of length 2k-1.
FamilyCertificate construct_p2_concat(std::uint64_t p, std::uint64_t k,
                                      const FactorEngine& engine = default_engine());

/// 2p^2 times the (k+1)-digit repunit in base p^2+1; no coprimality
/// condition applies here.
FamilyCertificate construct_p2_repunit(std::uint64_t p, std::uint64_t k,
                                       const FactorEngine& engine = default_engine());

}  // namespace vpal
