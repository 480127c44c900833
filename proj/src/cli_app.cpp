#include "vpal/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vpal/families.hpp"
#include "vpal/periodic.hpp"
#include "vpal/permissible.hpp"
#include "vpal/seqcheck.hpp"
#include "vpal/vpal.hpp"

namespace vpal {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct Ctx {
  bool json = false;
  bool digits = false;
};

std::string tuple(const Nat& n, std::uint64_t base) {
  const auto d = to_digits(n, base).digits;
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  out += ")_" + std::to_string(base);
  return out;
}

void emit(const Ctx& ctx, const ordered_json& record, const std::string& human) {
  if (ctx.json)
    std::cout << record.dump() << '\n';
  else
    std::cout << human;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::divisibility: return "divisibility";
    case Condition::palindromic: return "palindrome";
    case Condition::v_mismatch: return "v-mismatch";
  }
  return "?";
}

ordered_json json_or_null(const std::optional<Nat>& v) {
  return v ? ordered_json(v->str()) : ordered_json(nullptr);
}

std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("VPAL_CACHE_DIR")) return env;
  return std::filesystem::temp_directory_path() / "vpal-oeis";
}

// Budget exhaustion and missing data exit 3; failed verification exits 1.
int classify_failure(const std::string& message) {
  return message.find("budget") != std::string::npos ||
                 message.find("unavailable") != std::string::npos ||
                 message.find("inconclusive") != std::string::npos
             ? kUnknown
             : kVerifyFail;
}

ordered_json certificate_json(const FamilyCertificate& cert, const Ctx& ctx) {
  ordered_json j;
  j["theorem"] = theorem_name(cert.theorem_id);
  j["p"] = cert.p ? ordered_json(*cert.p) : ordered_json(nullptr);
  j["k"] = cert.k ? ordered_json(*cert.k) : ordered_json(nullptr);
  j["rho"] = cert.rho ? ordered_json(cert.rho->str()) : ordered_json(nullptr);
  j["number"] = cert.number.str();
  j["base"] = cert.base;
  if (ctx.digits) j["digits"] = tuple(cert.number, cert.base);
  j["reversal"] = cert.reversal.str();
  j["v_left"] = json_or_null(cert.v_left);
  j["v_right"] = json_or_null(cert.v_right);
  j["verified"] = cert.verified;
  j["probable"] = cert.probable;
  return j;
}

ordered_json triple_json(const PermissibleTriple& tr, const Ctx& ctx) {
  const Nat n = Nat(tr.a) * tr.base + tr.c;
  ordered_json j;
  j["b"] = tr.base;
  j["a"] = tr.a;
  j["c"] = tr.c;
  j["t"] = tr.t.str();
  j["n"] = n.str();
  if (ctx.digits) j["digits"] = tuple(n, tr.base);
  j["v"] = json_or_null(v_of(n));
  return j;
}

Nat parse_nat(const std::string& text) {
  try {
    return Nat(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a natural number: " + text);
  }
}

int cmd_check(const Ctx& ctx, const std::string& n_str, std::uint64_t base,
              const std::string& fn_name) {
  const Nat n = parse_nat(n_str);
  const ArithFn fn = fn_name == "A"   ? ArithFn::A
                     : fn_name == "psi" ? ArithFn::psi
                                        : ArithFn::v;
  const VPalVerdict verdict = is_f_palindrome(n, base, fn);

  ordered_json j;
  j["command"] = "check";
  j["parameters"] = {{"n", n.str()}, {"base", base}, {"fn", fn_name}};
  ordered_json r;
  r["verdict"] = verdict_name(verdict.value);
  r["failed_condition"] =
      verdict.failed_condition ? ordered_json(condition_name(*verdict.failed_condition))
                               : ordered_json(nullptr);
  r["v_left"] = json_or_null(verdict.v_left);
  r["v_right"] = json_or_null(verdict.v_right);
  r["probable"] = verdict.probable;
  if (ctx.digits) r["digits"] = tuple(n, base);
  j["results"] = r;

  std::string human = n.str() + " in base " + std::to_string(base);
  if (ctx.digits) human += " = " + tuple(n, base);
  human += ": " + std::string(verdict_name(verdict.value));
  if (verdict.value == Verdict::yes)
    human += " (" + fn_name + " = " + verdict.v_left->str() + " on both sides)";
  else if (verdict.failed_condition)
    human += " (fails " + std::string(condition_name(*verdict.failed_condition)) + ")";
  human += '\n';
  emit(ctx, j, human);

  if (verdict.value == Verdict::unknown) return kUnknown;
  return verdict.yes() ? kOk : kVerifyFail;
}

int cmd_enumerate(const Ctx& ctx, std::uint64_t base, std::uint64_t limit, unsigned threads) {
  const Enumeration e = enumerate_v_palindromes(base, limit, threads);

  ordered_json j;
  j["command"] = "enumerate";
  j["parameters"] = {{"base", base}, {"limit", limit}};
  ordered_json members = ordered_json::array(), unknowns = ordered_json::array();
  for (const Nat& m : e.members) members.push_back(m.str());
  for (const Nat& u : e.unknowns) unknowns.push_back(u.str());
  j["results"] = {{"count", e.members.size()}, {"members", members}, {"unknowns", unknowns}};

  std::string human;
  for (const Nat& m : e.members) {
    human += m.str();
    if (ctx.digits) human += " = " + tuple(m, base);
    human += '\n';
  }
  human += std::to_string(e.members.size()) + " members of V_" + std::to_string(base) +
           " up to " + std::to_string(limit) + "\n";
  for (const Nat& u : e.unknowns) human += "unknown: " + u.str() + "\n";
  emit(ctx, j, human);
  return e.unknowns.empty() ? kOk : kUnknown;
}

int cmd_smallest(const Ctx& ctx, std::uint64_t base, std::uint64_t cap) {
  const auto s = smallest_v_palindrome(base, cap);

  ordered_json j;
  j["command"] = "smallest";
  j["parameters"] = {{"base", base}, {"cap", cap}};
  j["results"] = {{"smallest", s ? ordered_json(s->str()) : ordered_json(nullptr)}};

  std::string human = s ? "min(V_" + std::to_string(base) + ") = " + s->str() +
                              (ctx.digits ? " = " + tuple(*s, base) : "") + "\n"
                        : "no member of V_" + std::to_string(base) + " up to " +
                              std::to_string(cap) + "\n";
  emit(ctx, j, human);
  return kOk;
}

int cmd_gap(const Ctx& ctx, std::uint64_t base, std::uint64_t limit) {
  const Gap g = longest_gap(base, limit);

  ordered_json j;
  j["command"] = "gap";
  j["parameters"] = {{"base", base}, {"limit", limit}};
  j["results"] = {{"start", g.start.str()}, {"length", g.length.str()}};
  emit(ctx, j,
       "longest gap in V_" + std::to_string(base) + " up to " + std::to_string(limit) +
           ": start " + g.start.str() + ", length " + g.length.str() + "\n");
  return kOk;
}

int cmd_primes(const Ctx& ctx, std::uint64_t base, std::uint64_t limit) {
  const auto primes = find_prime_v_palindromes(base, limit);

  ordered_json j;
  j["command"] = "primes";
  j["parameters"] = {{"base", base}, {"limit", limit}};
  ordered_json arr = ordered_json::array();
  for (const Nat& p : primes) arr.push_back(p.str());
  j["results"] = {{"count", primes.size()}, {"primes", arr}};

  std::string human;
  for (const Nat& p : primes) {
    human += p.str();
    if (ctx.digits) human += " = " + tuple(p, base);
    human += '\n';
  }
  human += std::to_string(primes.size()) + " prime members of V_" + std::to_string(base) +
           " up to " + std::to_string(limit) + "\n";
  emit(ctx, j, human);
  return kOk;
}

int cmd_period(const Ctx& ctx, const std::string& n_str, std::uint64_t base, std::uint64_t K) {
  const IndicatorProfile profile = analyze(parse_nat(n_str), base, K);

  std::string bits;
  for (Bit b : profile.window)
    bits += b == Bit::one ? '1' : b == Bit::zero ? '0' : '?';

  ordered_json j;
  j["command"] = "period";
  j["parameters"] = {{"n", n_str}, {"base", base}, {"window", K}};
  ordered_json r;
  r["window"] = bits;
  r["candidate_period"] = profile.candidate_period ? ordered_json(*profile.candidate_period)
                                                   : ordered_json(nullptr);
  if (profile.decomposition) {
    ordered_json terms = ordered_json::array();
    for (const Term& t : *profile.decomposition)
      terms.push_back({{"a", t.a}, {"lambda", t.lambda}});
    r["decomposition"] = terms;
  } else {
    r["decomposition"] = nullptr;
  }
  switch (profile.c.kind) {
    case CValue::Kind::finite:
      r["c"] = {{"kind", "finite"}, {"value", profile.c.value}};
      break;
    case CValue::Kind::infinite: r["c"] = {{"kind", "infinite"}}; break;
    case CValue::Kind::undetermined: r["c"] = {{"kind", "undetermined"}}; break;
  }
  j["results"] = r;

  std::string human = "indicator of " + n_str + " in base " + std::to_string(base) +
                      ", window " + std::to_string(K) + ":\n  " + bits + "\n";
  if (profile.candidate_period)
    human += "candidate period: " + std::to_string(*profile.candidate_period) + "\n";
  if (profile.decomposition) {
    human += "decomposition:";
    if (profile.decomposition->empty()) human += " zero function";
    for (const Term& t : *profile.decomposition)
      human += std::string(" ") + (t.lambda >= 0 ? "+" : "") + std::to_string(t.lambda) +
               "*[" + std::to_string(t.a) + "|k]";
    human += '\n';
  }
  switch (profile.c.kind) {
    case CValue::Kind::finite: human += "c = " + std::to_string(profile.c.value) + "\n"; break;
    case CValue::Kind::infinite: human += "c = infinity\n"; break;
    case CValue::Kind::undetermined: human += "c undetermined at this window\n"; break;
  }
  emit(ctx, j, human);
  return profile.candidate_period ? kOk : kUnknown;
}

int cmd_family(const Ctx& ctx, const std::string& id, std::uint64_t p, std::uint64_t k,
               const std::string& rho_str) {
  auto need = [&](bool have, const char* what) {
    if (!have) throw std::invalid_argument("family " + id + " requires " + std::string(what));
  };
  auto parse_digit_rho = [&](std::uint64_t base) {
    BaseDigits rho{base, {}};
    std::istringstream in(rho_str);
    std::string piece;
    while (std::getline(in, piece, ',')) rho.digits.push_back(std::stoull(piece));
    return rho;
  };

  std::optional<FamilyCertificate> cert;
  std::optional<VPalVerdict> refusal;
  if (id == "18rho") {
    need(!rho_str.empty(), "--rho");
    cert = base10_18rho(Nat(rho_str));
  } else if (id == "2p") {
    need(p != 0, "--p");
    cert = construct_2p(p);
  } else if (id == "2p-concat") {
    need(p != 0 && k != 0, "--p and --k");
    ConcatOutcome out = construct_2p_concat(p, k);
    if (out.certificate)
      cert = std::move(out.certificate);
    else
      refusal = out.verdict;
  } else if (id == "2p-repunit") {
    need(p != 0 && k != 0, "--p and --k");
    cert = construct_2p_repunit(p, k);
  } else if (id == "p2-rho") {
    need(p != 0 && !rho_str.empty(), "--p and --rho (comma-separated digits)");
    cert = construct_p2_rho(p, parse_digit_rho(p * p + 1));
  } else if (id == "p2-concat") {
    need(p != 0 && k != 0, "--p and --k");
    cert = construct_p2_concat(p, k);
  } else if (id == "p2-repunit") {
    need(p != 0 && k != 0, "--p and --k");
    cert = construct_p2_repunit(p, k);
  } else {
    throw std::invalid_argument("unknown family id: " + id);
  }

  ordered_json j;
  j["command"] = "family";
  j["parameters"] = {{"id", id}};
  if (p) j["parameters"]["p"] = p;
  if (k) j["parameters"]["k"] = k;
  if (!rho_str.empty()) j["parameters"]["rho"] = rho_str;
  if (cert) {
    j["results"] = {{"certificate", certificate_json(*cert, ctx)}};
    emit(ctx, j, serialize(*cert));
  } else {
    j["results"] = {{"certificate", nullptr}, {"verdict", verdict_name(refusal->value)}};
    emit(ctx, j,
         "refusal: p divides k, and the predicate confirms non-membership (verdict no)\n");
  }
  return kOk;
}

int cmd_triples(const Ctx& ctx, std::uint64_t base, std::uint64_t k, std::uint64_t m1,
                std::uint64_t m2) {
  std::vector<PermissibleTriple> triples;
  ordered_json params;
  if (base) {
    triples = permissible_triples(base, m1, m2);
    params = {{"base", base}, {"m1", m1}, {"m2", m2}};
  } else {
    triples.push_back(triple_for_30k(k));
    params = {{"k", k}};
  }

  ordered_json j;
  j["command"] = "triples";
  j["parameters"] = params;
  ordered_json arr = ordered_json::array();
  for (const auto& tr : triples) arr.push_back(triple_json(tr, ctx));
  j["results"] = {{"count", triples.size()}, {"triples", arr}};

  std::string human;
  for (const auto& tr : triples) human += serialize(tr) + "\n";
  human += std::to_string(triples.size()) + " permissible triple(s)\n";
  emit(ctx, j, human);
  return kOk;
}

int cmd_bases(const Ctx& ctx, std::uint64_t limit, std::uint64_t m1, std::uint64_t m2) {
  const auto bases = bases_with_triples(limit, m1, m2);

  ordered_json j;
  j["command"] = "bases";
  j["parameters"] = {{"limit", limit}, {"m1", m1}, {"m2", m2}};
  j["results"] = {{"count", bases.size()}, {"bases", bases}};

  std::string human;
  for (auto b : bases) human += std::to_string(b) + '\n';
  human += std::to_string(bases.size()) + " base(s) admitting permissible triples up to " +
           std::to_string(limit) + "\n";
  emit(ctx, j, human);
  return kOk;
}

int cmd_oeis(const Ctx& ctx, const std::string& id, bool verify, bool network,
             std::uint64_t limit) {
  const BFile file = fetch_bfile(id, cache_dir(), network);
  const Sequence seq = parse_bfile(file.text, id);
  const char* provenance = file.provenance == Provenance::cache     ? "cache"
                           : file.provenance == Provenance::fixture ? "fixture"
                                                                    : "network";

  ordered_json j;
  j["command"] = "oeis";
  j["parameters"] = {{"id", id}, {"verify", verify}, {"limit", limit}};
  ordered_json r;
  r["terms"] = seq.terms.size();
  r["offset"] = seq.offset;
  r["provenance"] = provenance;

  int code = kOk;
  std::string human = id + ": " + std::to_string(seq.terms.size()) + " terms (offset " +
                      std::to_string(seq.offset) + ", " + provenance + ")\n";
  if (verify) {
    std::vector<Nat> generated;
    if (id == "A338038") {
      const std::uint64_t n_max =
          std::min<std::uint64_t>(limit, seq.terms.back().first);
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        auto v = v_of(n);
        if (!v) throw std::runtime_error("factoring budget exceeded generating v");
        generated.push_back(*v);
      }
    } else if (id == "A338039") {
      Nat cap = seq.terms.back().second;
      if (Nat(limit) < cap) cap = limit;
      generated = enumerate_v_palindromes(10, cap.convert_to<std::uint64_t>()).members;
    } else {
      throw std::invalid_argument("no generator wired for " + id);
    }
    const CompareReport report = compare(seq, generated, 0);
    r["compared"] = report.compared;
    r["match"] = report.match();
    r["first_mismatch"] = report.first_mismatch ? ordered_json(*report.first_mismatch)
                                                : ordered_json(nullptr);
    human += report.match()
                 ? "verified: " + std::to_string(report.compared) + " terms match\n"
                 : "MISMATCH at index " + std::to_string(*report.first_mismatch) + "\n";
    if (!report.match()) code = kVerifyFail;
  }
  j["results"] = r;
  emit(ctx, j, human);
  return code;
}

int cmd_invariant(const Ctx& ctx, const std::string& which, std::uint64_t limit) {
  ReversalInvariant inv;
  if (which == "stern-base2")
    inv = ReversalInvariant::stern_base2;
  else if (which == "northshield-base3")
    inv = ReversalInvariant::northshield_base3;
  else
    throw std::invalid_argument("unknown invariant: " + which);
  const InvariantReport report = check_reversal_invariant(inv, limit);

  ordered_json j;
  j["command"] = "invariant";
  j["parameters"] = {{"which", which}, {"limit", limit}};
  j["results"] = {{"checked", report.checked},
                  {"first_violation", report.first_violation
                                          ? ordered_json(*report.first_violation)
                                          : ordered_json(nullptr)}};
  emit(ctx, j,
       report.ok() ? which + ": no violations up to " + std::to_string(limit) + "\n"
                   : which + ": VIOLATION at n = " + std::to_string(*report.first_violation) +
                         "\n");
  return report.ok() ? kOk : kVerifyFail;
}

int cmd_table1(const Ctx& ctx) {
  ordered_json j;
  j["command"] = "table1";
  j["parameters"] = ordered_json::object();
  ordered_json rows = ordered_json::array();
  std::string human = "base  min(V_b)\n";
  for (std::uint64_t b = 2; b <= 19; ++b) {
    const auto s = smallest_v_palindrome(b, 1'000'000);
    ordered_json row;
    row["base"] = b;
    row["smallest"] = s ? ordered_json(s->str()) : ordered_json(nullptr);
    if (ctx.digits && s) row["digits"] = tuple(*s, b);
    rows.push_back(row);
    human += std::to_string(b) + (b < 10 ? "     " : "    ") + (s ? s->str() : "-");
    if (ctx.digits && s) human += " = " + tuple(*s, b);
    human += '\n';
  }
  j["results"] = {{"rows", rows}};
  emit(ctx, j, human);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"v-palindrome toolkit: membership, enumeration, periodicity, families, triples"};
  app.require_subcommand(1);
  app.footer("exit codes: 0 success, 1 verification failure, 2 usage error, 3 unknown result");

  Ctx ctx;
  app.add_flag("--json", ctx.json, "line-delimited structured output");
  app.add_flag("--digits", ctx.digits, "also render numbers as base-b digit tuples");

  std::function<int()> action;

  {
    auto* c = app.add_subcommand("check", "membership verdict for one number");
    c->fallthrough();
    auto n = std::make_shared<std::string>();
    auto base = std::make_shared<std::uint64_t>(10);
    auto fn = std::make_shared<std::string>("v");
    c->add_option("n", *n, "the number, base ten")->required();
    c->add_option("--base", *base, "digit base (default 10)");
    c->add_option("--fn", *fn, "arithmetic function: v, A, or psi")
        ->check(CLI::IsMember({"v", "A", "psi"}));
    c->callback([&, n, base, fn] { action = [&, n, base, fn] { return cmd_check(ctx, *n, *base, *fn); }; });
  }
  {
    auto* c = app.add_subcommand("enumerate", "all members up to a limit");
    c->fallthrough();
    auto base = std::make_shared<std::uint64_t>();
    auto limit = std::make_shared<std::uint64_t>();
    auto threads = std::make_shared<unsigned>(1);
    c->add_option("--base", *base)->required();
    c->add_option("--limit", *limit)->required();
    c->add_option("--threads", *threads, "worker count (does not affect output)");
    c->callback([&, base, limit, threads] {
      action = [&, base, limit, threads] { return cmd_enumerate(ctx, *base, *limit, *threads); };
    });
  }
  {
    auto* c = app.add_subcommand("smallest", "least member of V_b");
    c->fallthrough();
    auto base = std::make_shared<std::uint64_t>();
    auto cap = std::make_shared<std::uint64_t>(1'000'000);
    c->add_option("--base", *base)->required();
    c->add_option("--cap", *cap, "search bound (default 10^6)");
    c->callback([&, base, cap] { action = [&, base, cap] { return cmd_smallest(ctx, *base, *cap); }; });
  }
  {
    auto* c = app.add_subcommand("gap", "longest run of consecutive non-members");
    c->fallthrough();
    auto base = std::make_shared<std::uint64_t>();
    auto limit = std::make_shared<std::uint64_t>();
    c->add_option("--base", *base)->required();
    c->add_option("--limit", *limit)->required();
    c->callback([&, base, limit] { action = [&, base, limit] { return cmd_gap(ctx, *base, *limit); }; });
  }
  {
    auto* c = app.add_subcommand("primes", "prime members up to a limit");
    c->fallthrough();
    auto base = std::make_shared<std::uint64_t>();
    auto limit = std::make_shared<std::uint64_t>();
    c->add_option("--base", *base)->required();
    c->add_option("--limit", *limit)->required();
    c->callback([&, base, limit] { action = [&, base, limit] { return cmd_primes(ctx, *base, *limit); }; });
  }
  {
    auto* c = app.add_subcommand("period", "indicator window, period, decomposition, c");
    c->fallthrough();
    auto n = std::make_shared<std::string>();
    auto base = std::make_shared<std::uint64_t>(10);
    auto window = std::make_shared<std::uint64_t>(kDefaultWindow);
    c->add_option("n", *n, "the number, base ten")->required();
    c->add_option("--base", *base, "digit base (default 10)");
    c->add_option("--window", *window, "window size (default 120)");
    c->callback([&, n, base, window] {
      action = [&, n, base, window] { return cmd_period(ctx, *n, *base, *window); };
    });
  }
  {
    auto* c = app.add_subcommand("family",
                                 "certificate from a family theorem: 18rho, 2p, 2p-concat, "
                                 "2p-repunit, p2-rho, p2-concat, p2-repunit");
    c->fallthrough();
    auto id = std::make_shared<std::string>();
    auto p = std::make_shared<std::uint64_t>(0);
    auto k = std::make_shared<std::uint64_t>(0);
    auto rho = std::make_shared<std::string>();
    c->add_option("id", *id, "family id")->required();
    c->add_option("--p", *p, "odd prime parameter");
    c->add_option("--k", *k, "repetition parameter");
    c->add_option("--rho", *rho, "palindrome over {0,1}: decimal for 18rho, comma-separated digits for p2-rho");
    c->callback([&, id, p, k, rho] {
      action = [&, id, p, k, rho] { return cmd_family(ctx, *id, *p, *k, *rho); };
    });
  }
  {
    auto* c = app.add_subcommand("triples", "permissible triples by base, or one by k = 4 (mod 11)");
    c->fallthrough();
    auto base = std::make_shared<std::uint64_t>(0);
    auto k = std::make_shared<std::uint64_t>(0);
    auto m1 = std::make_shared<std::uint64_t>(5);
    auto m2 = std::make_shared<std::uint64_t>(6);
    auto* ob = c->add_option("--base", *base, "emit every triple for this base");
    auto* ok = c->add_option("--k", *k, "emit the closed-form triple for base 30k");
    c->add_option("--m1", *m1, "pair element (default 5)");
    c->add_option("--m2", *m2, "pair element (default 6)");
    ob->excludes(ok);
    c->callback([&, base, k, m1, m2] {
      if (*base == 0 && *k == 0) throw CLI::ValidationError("triples requires --base or --k");
      action = [&, base, k, m1, m2] { return cmd_triples(ctx, *base, *k, *m1, *m2); };
    });
  }
  {
    auto* c = app.add_subcommand("bases", "bases admitting permissible triples");
    c->fallthrough();
    auto limit = std::make_shared<std::uint64_t>();
    auto m1 = std::make_shared<std::uint64_t>(5);
    auto m2 = std::make_shared<std::uint64_t>(6);
    c->add_option("--limit", *limit)->required();
    c->add_option("--m1", *m1, "pair element (default 5)");
    c->add_option("--m2", *m2, "pair element (default 6)");
    c->callback([&, limit, m1, m2] {
      action = [&, limit, m1, m2] { return cmd_bases(ctx, *limit, *m1, *m2); };
    });
  }
  {
    auto* c = app.add_subcommand("oeis", "fetch a b-file; --verify compares against the library");
    c->fallthrough();
    auto id = std::make_shared<std::string>();
    auto verify = std::make_shared<bool>(false);
    auto network = std::make_shared<bool>(false);
    auto limit = std::make_shared<std::uint64_t>(10'000);
    c->add_option("id", *id, "OEIS id, e.g. A338038")->required();
    c->add_flag("--verify", *verify, "compare terms against the library generator");
    c->add_flag("--network", *network, "allow an HTTP fetch on cache/fixture miss");
    c->add_option("--limit", *limit, "cap on generated terms (default 10^4)");
    c->callback([&, id, verify, network, limit] {
      action = [&, id, verify, network, limit] {
        return cmd_oeis(ctx, *id, *verify, *network, *limit);
      };
    });
  }
  {
    auto* c = app.add_subcommand("invariant", "reversal invariants: stern-base2, northshield-base3");
    c->fallthrough();
    auto which = std::make_shared<std::string>();
    auto limit = std::make_shared<std::uint64_t>(10'000);
    c->add_option("which", *which)->required();
    c->add_option("--limit", *limit, "check 1..limit (default 10^4)");
    c->callback([&, which, limit] {
      action = [&, which, limit] { return cmd_invariant(ctx, *which, *limit); };
    });
  }
  {
    auto* c = app.add_subcommand("table1", "smallest member for every base 2..19");
    c->fallthrough();
    c->callback([&] { action = [&] { return cmd_table1(ctx); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return classify_failure(e.what());
  }
}

}  // namespace vpal
