#include "vpal/vpal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

namespace vpal {

namespace {

using ExpMap = std::map<Nat, std::uint64_t>;

Nat fn_term(ArithFn fn, const Nat& q, std::uint64_t e) {
  switch (fn) {
    case ArithFn::v: return e >= 2 ? q + e : q;
    case ArithFn::A: return q * e;
    case ArithFn::psi: return q * e;
  }
  throw std::logic_error("unreachable");
}

Nat fold_map(const ExpMap& m, ArithFn fn) {
  Nat acc = fn == ArithFn::psi ? 1 : 0;
  for (const auto& [q, e] : m) {
    if (fn == ArithFn::psi)
      acc *= fn_term(fn, q, e);
    else
      acc += fn_term(fn, q, e);
  }
  return acc;
}

Nat fold_fn(const Factorization& f, ArithFn fn) {
  Nat acc = fn == ArithFn::psi ? 1 : 0;
  for (const auto& [p, e] : f.factors) {
    if (fn == ArithFn::psi)
      acc *= fn_term(fn, p, e);
    else
      acc += fn_term(fn, p, e);
  }
  return acc;
}

ExpMap exponents(const Factorization& f) {
  ExpMap m;
  for (const auto& [p, e] : f.factors) m[p] += e;
  return m;
}

// Maximal repetition structure of a digit string: n is `copies` splices of a
// primitive block. copies >= 2 when present.
struct Repetition {
  Nat block, rblock;
  std::uint64_t block_len = 0, copies = 0;
};

std::optional<Repetition> detect_repetition(const BaseDigits& d) {
  const auto& D = d.digits;
  const std::size_t T = D.size();
  for (std::size_t t = 1; t < T; ++t) {
    if (T % t) continue;
    bool periodic = true;
    for (std::size_t i = t; i < T && periodic; ++i) periodic = D[i] == D[i - t];
    if (!periodic) continue;
    BaseDigits head{d.base, {D.begin(), D.begin() + t}};
    BaseDigits rhead = head;
    std::reverse(rhead.digits.begin(), rhead.digits.end());
    return Repetition{from_digits(head), from_digits(rhead), t, T / t};
  }
  return std::nullopt;
}

// Verdict for n = block(copies). Both sides share the repetition factor R,
// so equality of f across the reversal depends only on the primes of the
// block and its reversal: everything else cancels. The exact f-values are
// additionally recovered when the cyclotomic parts of R factor completely.
VPalVerdict structured_verdict(const Repetition& rep, std::uint64_t base, ArithFn fn,
                               const FactorEngine& engine) {
  VPalVerdict out;
  Factorization fb = engine.factorize(rep.block);
  Factorization frb = engine.factorize(rep.rblock);
  out.probable = fb.probable || frb.probable;
  if (!fb.complete() || !frb.complete()) {
    out.value = Verdict::unknown;
    return out;
  }

  const Nat bpow = boost::multiprecision::pow(Nat(base), static_cast<unsigned>(rep.block_len));
  const Nat R =
      (boost::multiprecision::pow(bpow, static_cast<unsigned>(rep.copies)) - 1) / (bpow - 1);

  ExpMap eb = exponents(fb), erb = exponents(frb);
  ExpMap eR;
  for (const auto& kv : eb) eR.emplace(kv.first, 0);
  for (const auto& kv : erb) eR.emplace(kv.first, 0);
  for (auto& [q, cnt] : eR) {
    Nat t = R;
    while (t % q == 0) {
      t /= q;
      ++cnt;
    }
  }

  auto partial = [&](const ExpMap& own) {
    Nat acc = fn == ArithFn::psi ? 1 : 0;
    for (const auto& [q, er] : eR) {
      auto it = own.find(q);
      const std::uint64_t e = er + (it == own.end() ? 0 : it->second);
      if (e == 0) continue;
      if (fn == ArithFn::psi)
        acc *= fn_term(fn, q, e);
      else
        acc += fn_term(fn, q, e);
    }
    return acc;
  };
  const bool equal = partial(eb) == partial(erb);
  if (equal) {
    out.value = Verdict::yes;
  } else {
    out.value = Verdict::no;
    out.failed_condition = Condition::v_mismatch;
  }

  // exact values when R's cyclotomic parts all factor within budget
  const auto [root, rootexp] = primitive_root_power(base);
  const std::uint64_t E = std::uint64_t(rootexp) * rep.block_len;
  const std::uint64_t top = E * rep.copies;
  std::vector<Factorization> parts;
  bool complete = true;
  Nat product = 1;
  for (std::uint64_t d : divisors_u64(top)) {
    if (E % d == 0) continue;
    parts.push_back(engine.factorize(cyclotomic_value(d, root)));
    complete = complete && parts.back().complete();
    out.probable = out.probable || parts.back().probable;
    product *= parts.back().value();
  }
  if (product != R) throw std::logic_error("cyclotomic split does not multiply back to R");
  if (complete) {
    ExpMap left = eb, right = erb;
    for (const auto& f : parts)
      for (const auto& [p, e] : f.factors) {
        left[p] += e;
        right[p] += e;
      }
    out.v_left = fold_map(left, fn);
    out.v_right = fold_map(right, fn);
    if ((*out.v_left == *out.v_right) != equal)
      throw std::logic_error("cancellation and direct evaluation disagree");
  }
  return out;
}

// Overflow-safe only when callers keep n * base within range; enumeration
// entry points enforce that bound.
std::uint64_t reverse_u64(std::uint64_t n, std::uint64_t base) {
  std::uint64_t r = 0;
  while (n) {
    r = r * base + n % base;
    n /= base;
  }
  return r;
}

bool fast_path_ok(std::uint64_t limit, std::uint64_t base) {
  return limit <= std::numeric_limits<std::uint64_t>::max() / base;
}

// u64 membership; factorizations below 2^64 always complete, so no unknowns.
bool member_u64(std::uint64_t n, std::uint64_t base, const FactorEngine& engine) {
  if (n % base == 0) return false;
  const std::uint64_t r = reverse_u64(n, base);
  if (r == n) return false;
  Nat left = fold_fn(engine.factorize(n), ArithFn::v);
  return left == fold_fn(factorize(r), ArithFn::v);
}

void require_base(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
}

constexpr std::uint64_t kWindow = 1 << 16;

// Scan [lo, hi] with a windowed engine, invoking sink(n) on members.
template <typename Sink>
void scan_members(std::uint64_t lo, std::uint64_t hi, std::uint64_t base, Sink sink) {
  FactorEngine engine;
  for (std::uint64_t wlo = lo; wlo <= hi; wlo += kWindow) {
    const std::uint64_t whi = std::min(hi, wlo + kWindow - 1);
    engine.prefetch(wlo, whi);
    for (std::uint64_t n = wlo; n <= whi; ++n)
      if (member_u64(n, base, engine)) sink(n);
  }
}

}  // namespace

VPalVerdict is_f_palindrome(const Nat& n, std::uint64_t base, ArithFn fn,
                            const FactorEngine& engine) {
  require_base(base);
  if (n < 1) throw std::invalid_argument("requires n >= 1");

  VPalVerdict out;
  if (n % base == 0) {
    out.value = Verdict::no;
    out.failed_condition = Condition::divisibility;
    return out;
  }
  const Nat r = reverse(n, base);
  if (r == n) {
    out.value = Verdict::no;
    out.failed_condition = Condition::palindromic;
    return out;
  }

  if (auto rep = detect_repetition(to_digits(n, base)))
    return structured_verdict(*rep, base, fn, engine);

  Factorization fl = engine.factorize(n);
  Factorization fr = engine.factorize(r);
  out.probable = fl.probable || fr.probable;
  if (fl.complete()) out.v_left = fold_fn(fl, fn);
  if (fr.complete()) out.v_right = fold_fn(fr, fn);
  if (!out.v_left || !out.v_right) {
    out.value = Verdict::unknown;
    return out;
  }
  if (*out.v_left == *out.v_right) {
    out.value = Verdict::yes;
  } else {
    out.value = Verdict::no;
    out.failed_condition = Condition::v_mismatch;
  }
  return out;
}

VPalVerdict is_v_palindrome(const Nat& n, std::uint64_t base, const FactorEngine& engine) {
  return is_f_palindrome(n, base, ArithFn::v, engine);
}

Enumeration enumerate_v_palindromes(std::uint64_t base, std::uint64_t limit, unsigned threads) {
  require_base(base);
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  Enumeration out;

  if (!fast_path_ok(limit, base)) {
    for (Nat n = 1; n <= limit; ++n) {
      auto verdict = is_v_palindrome(n, base);
      if (verdict.value == Verdict::yes) out.members.push_back(n);
      if (verdict.value == Verdict::unknown) out.unknowns.push_back(n);
    }
    return out;
  }

  if (threads <= 1 || limit < 4 * kWindow) {
    scan_members(1, limit, base, [&](std::uint64_t n) { out.members.emplace_back(n); });
    return out;
  }

  const unsigned workers = std::min<unsigned>(threads, std::thread::hardware_concurrency());
  std::vector<std::vector<Nat>> parts(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (limit + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = 1 + w * chunk;
      const std::uint64_t hi = std::min(limit, lo + chunk - 1);
      if (lo > hi) return;
      scan_members(lo, hi, base, [&](std::uint64_t n) { parts[w].emplace_back(n); });
    });
  }
  for (auto& t : pool) t.join();
  for (auto& part : parts)
    out.members.insert(out.members.end(), part.begin(), part.end());
  return out;
}

std::optional<Nat> smallest_v_palindrome(std::uint64_t base, std::uint64_t cap) {
  require_base(base);
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  std::optional<Nat> found;
  if (fast_path_ok(cap, base)) {
    FactorEngine engine;
    for (std::uint64_t n = 1; n <= cap; ++n)
      if (member_u64(n, base, engine)) return Nat(n);
    return std::nullopt;
  }
  for (Nat n = 1; n <= cap; ++n)
    if (is_v_palindrome(n, base).yes()) return n;
  return std::nullopt;
}

Gap longest_gap(std::uint64_t base, std::uint64_t limit) {
  require_base(base);
  if (limit < 2) throw std::invalid_argument("limit must be at least 2");
  std::uint64_t best_start = 1, best_len = 0, run_start = 1, run_len = 0;
  FactorEngine engine;
  for (std::uint64_t wlo = 1; wlo <= limit; wlo += kWindow) {
    const std::uint64_t whi = std::min(limit, wlo + kWindow - 1);
    engine.prefetch(wlo, whi);
    for (std::uint64_t n = wlo; n <= whi; ++n) {
      if (member_u64(n, base, engine)) {
        run_len = 0;
      } else {
        if (run_len == 0) run_start = n;
        if (++run_len > best_len) {
          best_len = run_len;
          best_start = run_start;
        }
      }
    }
  }
  return {Nat(best_start), Nat(best_len)};
}

std::vector<Nat> find_prime_v_palindromes(std::uint64_t base, std::uint64_t limit) {
  require_base(base);
  if (limit < 2) throw std::invalid_argument("limit must be at least 2");
  std::vector<Nat> out;
  FactorEngine engine;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (!is_prime(q)) continue;
    if (member_u64(q, base, engine)) out.emplace_back(q);
  }
  return out;
}

std::vector<Nat> base10_prime_candidates(std::uint32_t m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  std::vector<Nat> out;
  Nat pw = 10;
  for (std::uint32_t m = 1; m <= m_max; ++m, pw *= 10) {
    Nat hi = 5 * pw - 1;
    if (is_prime(hi) && is_prime(hi - 2)) out.push_back(hi);
  }
  return out;
}

std::vector<Nat> conjecture3_scan(std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  std::vector<Nat> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const std::uint64_t r = reverse_u64(n, 10);
    if (r == n) continue;
    if (v_u64(r) == n) out.emplace_back(n);
  }
  return out;
}

std::vector<Nat> squarefree_v_palindromes(std::uint64_t base, std::uint64_t limit) {
  require_base(base);
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  std::vector<Nat> out;
  FactorEngine engine;
  auto squarefree = [&](std::uint64_t n) {
    for (const auto& [p, e] : engine.factorize(n).factors)
      if (e >= 2) return false;
    return true;
  };
  for (std::uint64_t wlo = 1; wlo <= limit; wlo += kWindow) {
    const std::uint64_t whi = std::min(limit, wlo + kWindow - 1);
    engine.prefetch(wlo, whi);
    for (std::uint64_t n = wlo; n <= whi; ++n)
      if (member_u64(n, base, engine) && squarefree(n) && squarefree(reverse_u64(n, base)))
        out.emplace_back(n);
  }
  return out;
}

}  // namespace vpal
