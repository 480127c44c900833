#include "vpal/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace vpal {

namespace {

void require_base(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
}

}  // namespace

BaseDigits to_digits(const Nat& n, std::uint64_t base) {
  require_base(base);
  if (n < 0) throw std::invalid_argument("negative value");
  BaseDigits out{base, {}};
  if (n == 0) {
    out.digits.push_back(0);
    return out;
  }
  Nat rest = n;
  while (rest > 0) {
    out.digits.push_back(static_cast<std::uint64_t>(rest % base));
    rest /= base;
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

Nat from_digits(const BaseDigits& d) {
  require_base(d.base);
  if (d.digits.empty()) throw std::invalid_argument("empty digit string");
  Nat acc = 0;
  for (std::uint64_t a : d.digits) {
    if (a >= d.base) throw std::invalid_argument("digit out of range");
    acc = acc * d.base + a;
  }
  return acc;
}

Nat reverse(const Nat& n, std::uint64_t base) {
  if (n < 1) throw std::invalid_argument("reverse requires n >= 1");
  BaseDigits d = to_digits(n, base);
  std::reverse(d.digits.begin(), d.digits.end());
  // leading zeros of the reversed string contribute nothing
  return from_digits(d);
}

Nat sum_digits(const Nat& n, std::uint64_t base) {
  Nat acc = 0;
  for (std::uint64_t a : to_digits(n, base).digits) acc += a;
  return acc;
}

bool is_palindrome(const Nat& n, std::uint64_t base) {
  if (n < 1) throw std::invalid_argument("is_palindrome requires n >= 1");
  const auto& d = to_digits(n, base).digits;
  return std::equal(d.begin(), d.begin() + d.size() / 2, d.rbegin());
}

Nat concat_copies(const Nat& n, std::uint64_t k, std::uint64_t base) {
  if (n < 1) throw std::invalid_argument("concat_copies requires n >= 1");
  if (k < 1) throw std::invalid_argument("concat_copies requires k >= 1");
  const std::size_t L = to_digits(n, base).digits.size();
  const Nat block = boost::multiprecision::pow(Nat(base), static_cast<unsigned>(L));
  // n * (b^(Lk) - 1) / (b^L - 1)
  return n * (boost::multiprecision::pow(block, static_cast<unsigned>(k)) - 1) / (block - 1);
}

Nat repunit(std::uint64_t k, std::uint64_t base) {
  if (k < 1) throw std::invalid_argument("repunit requires k >= 1");
  require_base(base);
  return (boost::multiprecision::pow(Nat(base), static_cast<unsigned>(k)) - 1) / (Nat(base) - 1);
}

Nat rho_k2(std::uint64_t p, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("rho_k2 requires k >= 1");
  // sum of (p+1)^(2i) is the k-digit repunit in base (p+1)^2
  Nat sq = Nat(p + 1) * (p + 1);
  Nat acc = 0, pw = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc += pw;
    pw *= sq;
  }
  return acc;
}

std::vector<std::pair<std::uint64_t, Nat>> find_reverse_multiples(std::uint64_t base,
                                                                  std::uint32_t max_digits) {
  require_base(base);
  if (max_digits < 2) throw std::invalid_argument("max_digits must be at least 2");
  std::vector<std::pair<std::uint64_t, Nat>> out;
  const Nat hi = boost::multiprecision::pow(Nat(base), max_digits);
  for (Nat n = base; n < hi; ++n) {
    Nat r = reverse(n, base);
    if (r < 2 * n || r % n != 0) continue;
    out.emplace_back(static_cast<std::uint64_t>(r / n), n);
  }
  return out;
}

}  // namespace vpal
