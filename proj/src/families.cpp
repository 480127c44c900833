#include "vpal/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vpal {

const char* theorem_name(FamilyTheorem id) {
  switch (id) {
    case FamilyTheorem::base10_18rho: return "18rho";
    case FamilyTheorem::two_p: return "2p";
    case FamilyTheorem::two_p_concat: return "2p-concat";
    case FamilyTheorem::two_p_repunit: return "2p-repunit";
    case FamilyTheorem::p2_rho: return "p2-rho";
    case FamilyTheorem::p2_concat: return "p2-concat";
    case FamilyTheorem::p2_repunit: return "p2-repunit";
  }
  return "?";
}

std::string serialize(const FamilyCertificate& cert) {
  std::ostringstream out;
  out << "theorem: " << theorem_name(cert.theorem_id) << '\n';
  if (cert.p) out << "p: " << *cert.p << '\n';
  if (cert.k) out << "k: " << *cert.k << '\n';
  if (cert.rho) out << "rho: " << *cert.rho << '\n';
  out << "base: " << cert.base << '\n';
  out << "number: " << cert.number << '\n';
  out << "digits: (";
  const auto digits = to_digits(cert.number, cert.base).digits;
  for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
  out << ")\n";
  out << "reversal: " << cert.reversal << '\n';
  out << "v_left: " << (cert.v_left ? cert.v_left->str() : "unknown") << '\n';
  out << "v_right: " << (cert.v_right ? cert.v_right->str() : "unknown") << '\n';
  out << "verified: " << (cert.verified ? "yes" : "no") << '\n';
  out << "probable: " << (cert.probable ? "yes" : "no") << '\n';
  return out.str();
}

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("p must be an odd prime");
}

bool zero_one_palindrome(const BaseDigits& d) {
  for (std::uint64_t a : d.digits)
    if (a > 1) return false;
  return d.digits.front() == 1 &&
         std::equal(d.digits.begin(), d.digits.begin() + d.digits.size() / 2,
                    d.digits.rbegin());
}

FamilyCertificate certify(FamilyTheorem id, std::optional<std::uint64_t> p,
                          std::optional<std::uint64_t> k, std::optional<Nat> rho,
                          const Nat& number, std::uint64_t base, const FactorEngine& engine) {
  const VPalVerdict verdict = is_v_palindrome(number, base, engine);
  if (verdict.value == Verdict::unknown)
    throw std::runtime_error("certificate verification inconclusive: factoring budget exceeded");
  if (verdict.value == Verdict::no)
    throw std::runtime_error("certificate verification failed: constructed number is not a member");
  FamilyCertificate cert;
  cert.theorem_id = id;
  cert.p = p;
  cert.k = k;
  cert.rho = std::move(rho);
  cert.number = number;
  cert.base = base;
  cert.reversal = reverse(number, base);
  cert.v_left = verdict.v_left;
  cert.v_right = verdict.v_right;
  cert.verified = true;
  cert.probable = verdict.probable;
  return cert;
}

}  // namespace

std::vector<Nat> binary_palindromes(std::uint32_t max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  std::vector<Nat> out;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    const std::uint32_t half = (len + 1) / 2;
    const std::uint32_t free_bits = half - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << free_bits); ++mask) {
      std::vector<std::uint64_t> digits(len, 0);
      digits[0] = 1;
      for (std::uint32_t j = 0; j < free_bits; ++j)
        digits[1 + j] = (mask >> (free_bits - 1 - j)) & 1;
      for (std::uint32_t i = 0; i < len / 2; ++i) digits[len - 1 - i] = digits[i];
      out.push_back(from_digits({10, digits}));
    }
  }
  return out;
}

FamilyCertificate base10_18rho(const Nat& rho, const FactorEngine& engine) {
  if (rho < 1) throw std::invalid_argument("rho must be at least 1");
  if (!zero_one_palindrome(to_digits(rho, 10)))
    throw std::invalid_argument("rho must be a base-ten palindrome over the digits 0 and 1");
  return certify(FamilyTheorem::base10_18rho, std::nullopt, std::nullopt, rho, 18 * rho, 10,
                 engine);
}

FamilyCertificate construct_2p(std::uint64_t p, const FactorEngine& engine) {
  require_odd_prime(p);
  auto cert = certify(FamilyTheorem::two_p, p, std::nullopt, std::nullopt, Nat(2) * p, p + 1,
                      engine);
  if (cert.reversal != Nat(p) * p)
    throw std::logic_error("reversal of 2p in base p+1 is not p^2");
  return cert;
}

ConcatOutcome construct_2p_concat(std::uint64_t p, std::uint64_t k, const FactorEngine& engine) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const Nat number = concat_copies(Nat(2) * p, k, p + 1);
  if (number != Nat(2) * p * rho_k2(p, k))
    throw std::logic_error("concatenation does not equal 2p times the repetition factor");

  ConcatOutcome out;
  out.verdict = is_v_palindrome(number, p + 1, engine);
  if (out.verdict.value == Verdict::unknown)
    throw std::runtime_error("membership inconclusive: factoring budget exceeded");
  const bool expected = k % p != 0;
  if (out.verdict.yes() != expected)
    throw std::runtime_error("predicate disagrees with the divisibility criterion");
  if (expected) {
    FamilyCertificate cert;
    cert.theorem_id = FamilyTheorem::two_p_concat;
    cert.p = p;
    cert.k = k;
    cert.number = number;
    cert.base = p + 1;
    cert.reversal = reverse(number, p + 1);
    cert.v_left = out.verdict.v_left;
    cert.v_right = out.verdict.v_right;
    cert.verified = true;
    cert.probable = out.verdict.probable;
    out.certificate = std::move(cert);
  }
  return out;
}

FamilyCertificate construct_2p_repunit(std::uint64_t p, std::uint64_t k,
                                       const FactorEngine& engine) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if ((k + 1) % p == 0) throw std::invalid_argument("p must not divide k+1");
  const Nat number = Nat(2) * p * repunit(k + 1, p + 1);

  const auto digits = to_digits(number, p + 1).digits;
  bool shape = digits.size() == k + 2 && digits.front() == 1 && digits.back() == p - 1;
  for (std::size_t i = 1; shape && i + 1 < digits.size(); ++i) shape = digits[i] == p;
  if (!shape) throw std::logic_error("digit shape is not (1, p, ..., p, p-1)");

  return certify(FamilyTheorem::two_p_repunit, p, k, std::nullopt, number, p + 1, engine);
}

FamilyCertificate construct_p2_rho(std::uint64_t p, const BaseDigits& rho,
                                   const FactorEngine& engine) {
  require_odd_prime(p);
  if (p >= (std::uint64_t(1) << 32)) throw std::invalid_argument("p^2+1 exceeds the base range");
  const std::uint64_t base = p * p + 1;
  if (rho.base != base) throw std::invalid_argument("rho digits must be given in base p^2+1");
  if (rho.digits.empty() || !zero_one_palindrome(rho))
    throw std::invalid_argument("rho must be a palindrome over the digits 0 and 1");
  const Nat rho_value = from_digits(rho);
  return certify(FamilyTheorem::p2_rho, p, std::nullopt, rho_value,
                 Nat(2) * p * p * rho_value, base, engine);
}

FamilyCertificate construct_p2_concat(std::uint64_t p, std::uint64_t k,
                                      const FactorEngine& engine) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (p >= (std::uint64_t(1) << 32)) throw std::invalid_argument("p^2+1 exceeds the base range");
  BaseDigits rho{p * p + 1, std::vector<std::uint64_t>(2 * k - 1, 0)};
  for (std::size_t i = 0; i < rho.digits.size(); i += 2) rho.digits[i] = 1;
  auto cert = construct_p2_rho(p, rho, engine);
  cert.theorem_id = FamilyTheorem::p2_concat;
  cert.k = k;
  return cert;
}

FamilyCertificate construct_p2_repunit(std::uint64_t p, std::uint64_t k,
                                       const FactorEngine& engine) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (p >= (std::uint64_t(1) << 32)) throw std::invalid_argument("p^2+1 exceeds the base range");
  BaseDigits rho{p * p + 1, std::vector<std::uint64_t>(k + 1, 1)};
  auto cert = construct_p2_rho(p, rho, engine);
  cert.theorem_id = FamilyTheorem::p2_repunit;
  cert.k = k;
  return cert;
}

}  // namespace vpal
