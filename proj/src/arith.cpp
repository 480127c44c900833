#include "vpal/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace vpal {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = m == 1 ? 0 : 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with this base set.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent cycle finding; n odd composite, not a prime power of a tiny prime.
u64 pollard_brent_u64(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
    const u64 m = 128;
    for (u64 r = 1; d == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      // backtrack one step at a time
      do {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_u64_into(u64 n, std::vector<std::pair<u64, std::uint32_t>>& out) {
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p * p > n) break;
    if (n % p == 0) {
      std::uint32_t e = 0;
      do n /= p, ++e;
      while (n % p == 0);
      out.emplace_back(p, e);
    }
  }
  if (n == 1) return;
  if (miller_rabin_u64(n)) {
    out.emplace_back(n, 1);
    return;
  }
  // 41 <= spf(n) <= n^(1/2); recurse on a rho split
  std::vector<u64> stack{n};
  std::vector<u64> primes;
  while (!stack.empty()) {
    u64 m = stack.back();
    stack.pop_back();
    if (miller_rabin_u64(m)) {
      primes.push_back(m);
      continue;
    }
    u64 d = pollard_brent_u64(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    out.emplace_back(primes[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }
}

std::vector<std::pair<u64, std::uint32_t>> factor_u64(u64 n) {
  std::vector<std::pair<u64, std::uint32_t>> out;
  factor_u64_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- big-number helpers ----

bool fits_u64(const Nat& n) { return n >= 0 && n <= Nat(std::numeric_limits<u64>::max()); }

Nat powmod_big(Nat base, Nat exp, const Nat& m) {
  Nat r = m == 1 ? 0 : 1;
  base %= m;
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0)) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

// Fixed prime bases; probabilistic above 2^64 (flagged by callers).
bool miller_rabin_big(const Nat& n) {
  static const std::uint32_t bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  Nat d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) d >>= 1, ++s;
  for (std::uint32_t a : bases) {
    if (n == a) return true;
    Nat x = powmod_big(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Nontrivial factor, or 0 when the iteration budget runs out.
Nat pollard_brent_big(const Nat& n, const FactorBudget& budget) {
  for (std::uint32_t attempt = 0; attempt < budget.rho_attempts; ++attempt) {
    const Nat c = 1 + 2 * attempt;
    auto f = [&](const Nat& x) { return (x * x + c) % n; };
    Nat x = 2, y = 2, d = 1, q = 1, ys = 0;
    const u64 m = 128;
    u64 spent = 0;
    for (u64 r = 1; d == 1 && spent < budget.rho_iterations; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * (x > y ? x - y : y - x) % n;
        }
        d = boost::multiprecision::gcd(q, n);
        spent += m;
      }
    }
    if (d == n) {
      do {
        ys = f(ys);
        d = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != 1 && d != n) return d;
  }
  return 0;
}

// Smallest k >= 2 with n = r^k, if any.
std::optional<std::pair<Nat, unsigned>> perfect_power(const Nat& n) {
  const unsigned maxk = boost::multiprecision::msb(n) + 1;
  for (unsigned k = 2; k <= maxk; ++k) {
    Nat lo = 2, hi = Nat(1) << (maxk / k + 1);
    while (lo <= hi) {
      Nat mid = (lo + hi) / 2;
      Nat p = boost::multiprecision::pow(mid, k);
      if (p == n) return std::make_pair(mid, k);
      if (p < n)
        lo = mid + 1;
      else
        hi = mid - 1;
    }
  }
  return std::nullopt;
}

constexpr std::uint32_t kPrimeTableLimit = 1u << 20;

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = sieve_primes(kPrimeTableLimit);
  return table;
}

Nat Factorization::value() const {
  Nat prod = unfactored;
  for (const auto& [p, e] : factors) prod *= boost::multiprecision::pow(p, e);
  return prod;
}

// Segmented sieve window: complete factorizations of [lo, hi] in one arena.
struct FactorEngine::Segment {
  u64 lo = 0, hi = 0;
  std::vector<std::uint32_t> offsets;                  // per index, into pairs
  std::vector<std::pair<u64, std::uint32_t>> pairs;    // (prime, exponent)
};

FactorEngine::FactorEngine(FactorBudget budget) : budget_(budget) {}

void FactorEngine::prefetch(std::uint64_t lo, std::uint64_t hi) const {
  if (lo < 1) lo = 1;
  if (hi < lo) return;
  if (hi - lo >= (1u << 24)) throw std::invalid_argument("prefetch window too large");
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);

  std::vector<u64> rem(len);
  for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;
  std::vector<std::vector<std::pair<u64, std::uint32_t>>> facs(len);

  for (std::uint32_t p : small_primes()) {
    if (u128(p) * p > hi) break;
    u64 start = (lo + p - 1) / p * p;
    for (u64 m = start; m <= hi; m += p) {
      std::size_t i = static_cast<std::size_t>(m - lo);
      std::uint32_t e = 0;
      while (rem[i] % p == 0) rem[i] /= p, ++e;
      if (e) facs[i].emplace_back(p, e);
    }
  }

  auto seg = std::make_shared<Segment>();
  seg->lo = lo;
  seg->hi = hi;
  seg->offsets.reserve(len + 1);
  seg->offsets.push_back(0);
  for (std::size_t i = 0; i < len; ++i) {
    // leftover is prime when hi < table_limit^2; factor it properly otherwise
    if (rem[i] > 1) factor_u64_into(rem[i], facs[i]);
    seg->pairs.insert(seg->pairs.end(), facs[i].begin(), facs[i].end());
    seg->offsets.push_back(static_cast<std::uint32_t>(seg->pairs.size()));
  }

  std::unique_lock lock(window_mutex_);
  window_ = std::move(seg);
}

Factorization FactorEngine::factorize(const Nat& n) const {
  if (n <= 0) throw std::invalid_argument("factorize requires n >= 1");
  Factorization out;
  if (n == 1) return out;

  if (fits_u64(n)) {
    const u64 m = n.convert_to<u64>();
    {
      std::shared_lock lock(window_mutex_);
      if (window_ && m >= window_->lo && m <= window_->hi) {
        const auto& seg = *window_;
        std::size_t i = static_cast<std::size_t>(m - seg.lo);
        for (std::uint32_t j = seg.offsets[i]; j < seg.offsets[i + 1]; ++j)
          out.factors.push_back({Nat(seg.pairs[j].first), seg.pairs[j].second});
        return out;
      }
    }
    for (const auto& [p, e] : factor_u64(m)) out.factors.push_back({Nat(p), e});
    return out;
  }
  return factor_big(n);
}

Factorization FactorEngine::factor_big(const Nat& n) const {
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  }

  std::vector<std::pair<Nat, std::uint32_t>> found;
  Nat c = n;
  for (std::uint32_t p : small_primes()) {
    if (p >= budget_.trial_limit) break;
    if (c % p == 0) {
      std::uint32_t e = 0;
      do c /= p, ++e;
      while (c % p == 0);
      found.emplace_back(p, e);
    }
    if (c == 1) break;
  }

  Factorization out;
  // Pending composites; each resolves to primes or lands in `unfactored`.
  std::vector<std::pair<Nat, std::uint32_t>> pending;
  if (c > 1) pending.emplace_back(c, 1);
  while (!pending.empty()) {
    auto [m, mult] = pending.back();
    pending.pop_back();
    if (fits_u64(m)) {
      for (const auto& [p, e] : factor_u64(m.convert_to<u64>())) found.emplace_back(p, e * mult);
      continue;
    }
    if (miller_rabin_big(m)) {
      found.emplace_back(m, mult);
      out.probable = true;
      continue;
    }
    if (auto pp = perfect_power(m)) {
      pending.emplace_back(pp->first, mult * pp->second);
      continue;
    }
    Nat d = pollard_brent_big(m, budget_);
    if (d == 0) {
      for (std::uint32_t i = 0; i < mult; ++i) out.unfactored *= m;
      continue;
    }
    pending.emplace_back(d, mult);
    pending.emplace_back(m / d, mult);
  }

  std::sort(found.begin(), found.end());
  for (std::size_t i = 0; i < found.size();) {
    std::size_t j = i;
    std::uint32_t e = 0;
    while (j < found.size() && found[j].first == found[i].first) e += found[j++].second;
    out.factors.push_back({found[i].first, e});
    i = j;
  }

  {
    std::unique_lock lock(cache_mutex_);
    cache_.emplace(n, out);
  }
  return out;
}

const FactorEngine& default_engine() {
  static const FactorEngine engine;
  return engine;
}

Factorization factorize(const Nat& n) { return default_engine().factorize(n); }

Primality classify_prime(const Nat& n) {
  if (n < 2) return {false, true};
  if (fits_u64(n)) return {miller_rabin_u64(n.convert_to<u64>()), true};
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
    if (n % p == 0) return {false, true};
  bool prime = miller_rabin_big(n);
  return {prime, !prime};
}

bool is_prime(const Nat& n) { return classify_prime(n).prime; }

namespace {

template <typename Fold>
std::optional<Nat> fold_factorization(const Nat& n, const FactorEngine& engine, Nat init,
                                      Fold fold) {
  if (n <= 0) throw std::invalid_argument("requires n >= 1");
  Factorization f = engine.factorize(n);
  if (!f.complete()) return std::nullopt;
  Nat acc = std::move(init);
  for (const auto& [p, e] : f.factors) fold(acc, p, e);
  return acc;
}

}  // namespace

std::optional<Nat> v_of(const Nat& n, const FactorEngine& engine) {
  return fold_factorization(n, engine, 0, [](Nat& acc, const Nat& p, std::uint32_t e) {
    acc += e >= 2 ? p + e : p;
  });
}

std::optional<Nat> alladi_a(const Nat& n, const FactorEngine& engine) {
  return fold_factorization(n, engine, 0,
                            [](Nat& acc, const Nat& p, std::uint32_t e) { acc += p * e; });
}

std::optional<Nat> mullin_psi(const Nat& n, const FactorEngine& engine) {
  return fold_factorization(n, engine, 1,
                            [](Nat& acc, const Nat& p, std::uint32_t e) { acc *= p * e; });
}

std::optional<bool> is_squarefree(const Nat& n, const FactorEngine& engine) {
  if (n <= 0) throw std::invalid_argument("requires n >= 1");
  Factorization f = engine.factorize(n);
  for (const auto& [p, e] : f.factors)
    if (e >= 2) return false;
  // an unfactored remainder could hide a square
  if (!f.complete()) return std::nullopt;
  return true;
}

std::uint64_t v_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("requires n >= 1");
  u64 acc = 0;
  for (const auto& [p, e] : factor_u64(n)) acc += e >= 2 ? p + e : p;
  return acc;
}

std::pair<Nat, unsigned> primitive_root_power(const Nat& n) {
  if (n < 2) throw std::invalid_argument("requires n >= 2");
  Nat c = n;
  unsigned m = 1;
  while (auto pp = perfect_power(c)) {
    c = pp->first;
    m *= pp->second;
  }
  return {c, m};
}

int mobius_u64(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("requires m >= 1");
  int parity = 0;
  for (u64 p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    ++parity;
  }
  if (m > 1) ++parity;
  return parity % 2 ? -1 : 1;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("requires m >= 1");
  std::vector<u64> out;
  for (u64 i = 1; i * i <= m; ++i) {
    if (m % i) continue;
    out.push_back(i);
    if (i != m / i) out.push_back(m / i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Nat cyclotomic_value(std::uint64_t d, const Nat& x) {
  if (d == 0 || x < 2) throw std::invalid_argument("requires d >= 1, x >= 2");
  Nat num = 1, den = 1;
  for (u64 e : divisors_u64(d)) {
    const Nat part = boost::multiprecision::pow(x, static_cast<unsigned>(e)) - 1;
    switch (mobius_u64(d / e)) {
      case 1: num *= part; break;
      case -1: den *= part; break;
      default: break;
    }
  }
  return num / den;
}

}  // namespace vpal
