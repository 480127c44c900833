#include "vpal/periodic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "vpal/digits.hpp"

namespace vpal {

namespace {

// Evaluates window entries exactly by cancellation: the k-fold concatenation
// and its reversal share the repetition factor R_k, so v agrees across the
// reversal iff the contributions of the primes of n and reverse(n) agree
// once their exponents inside R_k are added. No factorization of R_k is
// needed; entries are unknown only if n or reverse(n) exceeds the budget.
class ProfileBuilder {
 public:
  ProfileBuilder(const Nat& n, std::uint64_t base, const FactorEngine& engine) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    if (n < 1) throw std::invalid_argument("requires n >= 1");
    if (n % base == 0) throw std::invalid_argument("base divides n");
    const Nat r = reverse(n, base);
    if (r == n) throw std::invalid_argument("n is a palindrome in this base");
    Factorization left = engine.factorize(n);
    Factorization right = engine.factorize(r);
    usable_ = left.complete() && right.complete();
    if (!usable_) return;
    for (const auto& [p, e] : left.factors) exp_[p].first = e;
    for (const auto& [p, e] : right.factors) exp_[p].second = e;
    const std::size_t L = to_digits(n, base).digits.size();
    block_ = boost::multiprecision::pow(Nat(base), static_cast<unsigned>(L));
  }

  Bit entry(std::uint64_t k) const {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!usable_) return Bit::unknown;
    const Nat R =
        (boost::multiprecision::pow(block_, static_cast<unsigned>(k)) - 1) / (block_ - 1);
    auto w = [](const Nat& q, std::uint64_t e) -> Nat {
      if (e == 0) return 0;
      return e >= 2 ? q + e : q;
    };
    Nat left = 0, right = 0;
    for (const auto& [q, onsides] : exp_) {
      std::uint64_t shared = 0;
      Nat t = R;
      while (t % q == 0) {
        t /= q;
        ++shared;
      }
      left += w(q, onsides.first + shared);
      right += w(q, onsides.second + shared);
    }
    return left == right ? Bit::one : Bit::zero;
  }

 private:
  bool usable_ = false;
  std::map<Nat, std::pair<std::uint64_t, std::uint64_t>> exp_;
  Nat block_;
};

bool known(Bit b) { return b != Bit::unknown; }

// Entries k and k+omega agree wherever both are inside the window.
bool consistent_period(const std::vector<Bit>& window, std::uint64_t omega) {
  for (std::size_t k = 0; k + omega < window.size(); ++k)
    if (window[k] != window[k + omega]) return false;
  return true;
}

}  // namespace

Bit indicator(const Nat& n, std::uint64_t base, std::uint64_t k, const FactorEngine& engine) {
  return ProfileBuilder(n, base, engine).entry(k);
}

IndicatorProfile indicator_window(const Nat& n, std::uint64_t base, std::uint64_t K,
                                  const FactorEngine& engine) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  ProfileBuilder builder(n, base, engine);
  IndicatorProfile out;
  out.n = n;
  out.base = base;
  out.window.reserve(K);
  for (std::uint64_t k = 1; k <= K; ++k) out.window.push_back(builder.entry(k));
  return out;
}

std::uint64_t detect_period(const std::vector<Bit>& window) {
  if (window.empty()) throw std::invalid_argument("empty window");
  for (Bit b : window)
    if (!known(b)) throw std::invalid_argument("window contains unknown entries");
  for (std::uint64_t omega = 1;; ++omega)
    if (consistent_period(window, omega)) return omega;
}

std::vector<Term> decompose(const std::vector<Bit>& window, std::uint64_t omega) {
  if (omega < 1 || window.size() < omega)
    throw std::invalid_argument("window shorter than the period");
  for (Bit b : window)
    if (!known(b)) throw std::invalid_argument("window contains unknown entries");

  const auto divs = divisors_u64(omega);
  auto g = [&](std::uint64_t d) { return window[d - 1] == Bit::one ? 1 : 0; };

  std::vector<Term> terms;
  for (std::uint64_t a : divs) {
    std::int64_t lambda = 0;
    for (std::uint64_t d : divisors_u64(a)) lambda += mobius_u64(a / d) * g(d);
    if (lambda != 0) terms.push_back({a, lambda});
  }

  for (std::size_t k = 1; k <= window.size(); ++k) {
    const bool rebuilt = g(std::gcd<std::uint64_t>(k, omega)) == 1;
    if (rebuilt != (window[k - 1] == Bit::one))
      throw std::runtime_error("window inconsistent with the candidate period");
  }
  return terms;
}

IndicatorProfile analyze(const Nat& n, std::uint64_t base, std::uint64_t K,
                         const FactorEngine& engine) {
  IndicatorProfile out = indicator_window(n, base, K, engine);

  // c by direct observation: valid only while no unknown can hide a smaller 1
  for (std::size_t k = 0; k < out.window.size(); ++k) {
    if (out.window[k] == Bit::zero) continue;
    if (out.window[k] == Bit::one) out.c = {CValue::Kind::finite, k + 1};
    break;
  }

  std::size_t prefix = 0;
  while (prefix < out.window.size() && known(out.window[prefix])) ++prefix;
  if (prefix == 0) return out;
  const std::vector<Bit> head(out.window.begin(), out.window.begin() + prefix);

  for (std::uint64_t omega = 1; omega <= prefix; ++omega) {
    if (!consistent_period(head, omega)) continue;
    std::vector<Term> terms;
    try {
      terms = decompose(head, omega);
    } catch (const std::runtime_error&) {
      continue;  // false period; try the next candidate
    }
    auto g = [&](std::uint64_t d) { return head[d - 1] == Bit::one; };
    bool confirmed = true;
    for (std::size_t k = prefix + 1; k <= out.window.size() && confirmed; ++k) {
      if (!known(out.window[k - 1])) continue;
      confirmed = g(std::gcd<std::uint64_t>(k, omega)) == (out.window[k - 1] == Bit::one);
    }
    if (!confirmed) continue;

    std::uint64_t lcm_a = 1;
    for (const Term& t : terms) lcm_a = std::lcm(lcm_a, t.a);
    if (lcm_a != omega) throw std::logic_error("decomposition lcm differs from the period");

    out.candidate_period = omega;
    out.decomposition = std::move(terms);
    if (out.decomposition->empty())
      out.c = {CValue::Kind::infinite, 0};
    else if (out.c.kind == CValue::Kind::undetermined)
      out.c = {CValue::Kind::finite, out.decomposition->front().a};
    return out;
  }
  return out;
}

std::optional<std::uint64_t> omega0(const Nat& n, std::uint64_t base, std::uint64_t K,
                                    const FactorEngine& engine) {
  IndicatorProfile p = analyze(n, base, K, engine);
  return p.candidate_period;
}

CValue c_value(const Nat& n, std::uint64_t base, std::uint64_t K, const FactorEngine& engine) {
  return analyze(n, base, K, engine).c;
}

std::vector<Nat> one_implies_infinitely_many(const Nat& n, std::uint64_t base,
                                             std::uint32_t count, const FactorEngine& engine) {
  if (!is_v_palindrome(n, base, engine).yes())
    throw std::invalid_argument("n is not a member in this base");
  if (count == 0) return {};

  auto omega = omega0(n, base, 12, engine);
  if (!omega) throw std::runtime_error("period undetermined at this window size");

  std::vector<Nat> out;
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint64_t k = 1 + std::uint64_t(i) * *omega;
    Nat m = concat_copies(n, k, base);
    if (!is_v_palindrome(m, base, engine).yes())
      throw std::runtime_error("emitted member failed verification: false period");
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace vpal
