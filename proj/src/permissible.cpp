#include "vpal/permissible.hpp"

#include <sstream>
#include <stdexcept>

#include "vpal/vpal.hpp"

namespace vpal {

namespace {

void validate_pair(std::uint64_t m1, std::uint64_t m2) {
  if (m1 < 2 || m2 <= m1) throw std::invalid_argument("pair must satisfy 2 <= m1 < m2");
  if (v_u64(m1) != v_u64(m2)) throw std::invalid_argument("pair must share a common v-value");
}

void validate_base(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
}

// rad(m1*m2): the generalized coprimality modulus (30 for the pair (5,6)).
std::uint64_t pair_radical(std::uint64_t m1, std::uint64_t m2) {
  Nat rad = 1;
  for (const auto& [p, e] : factorize(Nat(m1) * m2).factors) rad *= p;
  return rad.convert_to<std::uint64_t>();
}

Nat as_integer(const Rat& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error(std::string(what) + " is not integral for an admissible t");
  return boost::multiprecision::numerator(r);
}

}  // namespace

RationalPair solve_system(std::uint64_t base, const Nat& t, std::uint64_t m1, std::uint64_t m2) {
  validate_base(base);
  validate_pair(m1, m2);
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  const Nat D = Nat(base) * base - 1;
  return {Rat(t * (Nat(m1) * base - m2), D), Rat(t * (Nat(m2) * base - m1), D)};
}

Nat f_of_b(std::uint64_t base, std::uint64_t m1, std::uint64_t m2) {
  validate_base(base);
  validate_pair(m1, m2);
  const Nat D = Nat(base) * base - 1;
  const Nat n1 = boost::multiprecision::abs(Nat(m1) * base - Nat(m2));
  const Nat n2 = Nat(m2) * base - m1;
  return boost::multiprecision::lcm(D / boost::multiprecision::gcd(n1, D),
                                    D / boost::multiprecision::gcd(n2, D));
}

std::vector<Nat> S_of_b(std::uint64_t base, std::uint64_t m1, std::uint64_t m2) {
  validate_base(base);
  validate_pair(m1, m2);
  std::vector<Nat> out;
  if (Nat(m1) * base <= m2) return out;  // the digit a cannot be positive
  const Nat D = Nat(base) * base - 1;
  const Nat f = f_of_b(base, m1, m2);
  const std::uint64_t rad = pair_radical(m1, m2);
  const Nat slope = Nat(m2) * base - m1;
  for (Nat t = f; t * slope < base * D; t += f)
    if (boost::multiprecision::gcd(t, Nat(rad)) == 1) out.push_back(t);
  return out;
}

std::vector<PermissibleTriple> permissible_triples(std::uint64_t base, std::uint64_t m1,
                                                   std::uint64_t m2, const FactorEngine& engine) {
  std::vector<PermissibleTriple> out;
  for (const Nat& t : S_of_b(base, m1, m2)) {
    const RationalPair pair = solve_system(base, t, m1, m2);
    const Nat a = as_integer(pair.a, "digit a");
    const Nat c = as_integer(pair.c, "digit c");
    if (a < 1 || a >= c || c >= base) throw std::logic_error("triple violates 1 <= a < c < b");
    if (a * base + c != t * m1 || c * base + a != t * m2)
      throw std::logic_error("triple does not satisfy the two-digit system");
    const Nat n = a * base + c;
    const VPalVerdict verdict = is_v_palindrome(n, base, engine);
    if (verdict.value == Verdict::unknown)
      throw std::runtime_error("triple verification inconclusive: factoring budget exceeded");
    if (verdict.value == Verdict::no)
      throw std::runtime_error("emitted triple fails the membership predicate");
    out.push_back({base, a.convert_to<std::uint64_t>(), c.convert_to<std::uint64_t>(), t});
  }
  return out;
}

PermissibleTriple triple_for_30k(std::uint64_t k, const FactorEngine& engine) {
  if (k % 11 != 4) throw std::invalid_argument("k must be 4 modulo 11");
  const std::uint64_t base = 30 * k;
  const Nat t = (Nat(900) * k * k - 1) / 11;
  PermissibleTriple triple{base, (150 * k - 6) / 11, (180 * k - 5) / 11, t};
  if (Nat(triple.a) * base + triple.c != 5 * t || Nat(triple.c) * base + triple.a != 6 * t)
    throw std::logic_error("closed form does not satisfy the two-digit system");
  if (boost::multiprecision::gcd(t, Nat(30)) != 1)
    throw std::logic_error("closed-form t is not coprime to 30");
  const VPalVerdict verdict = is_v_palindrome(Nat(triple.a) * base + triple.c, base, engine);
  if (!verdict.yes()) throw std::runtime_error("closed-form triple fails the membership predicate");
  return triple;
}

std::vector<std::uint64_t> bases_with_triples(std::uint64_t limit, std::uint64_t m1,
                                              std::uint64_t m2) {
  validate_base(limit);
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 2; b <= limit; ++b)
    if (!S_of_b(b, m1, m2).empty()) out.push_back(b);
  return out;
}

std::string serialize(const PermissibleTriple& triple, const FactorEngine& engine) {
  const Nat n = Nat(triple.a) * triple.base + triple.c;
  const auto v = v_of(n, engine);
  std::ostringstream out;
  out << "b: " << triple.base << '\n'
      << "a: " << triple.a << '\n'
      << "c: " << triple.c << '\n'
      << "t: " << triple.t << '\n'
      << "n: " << n << '\n'
      << "v: " << (v ? v->str() : "unknown") << '\n';
  return out.str();
}

}  // namespace vpal
