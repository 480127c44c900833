// Generates docs/trace_matrix.md from "// verifies: <id>" annotations in the
// test sources, and checks the committed document and the claim coverage.
//
//   trace_matrix --write <repo_root>   regenerate the document in place
//   trace_matrix --check <repo_root>   fail if coverage or the document drifted
//   trace_matrix <repo_root>           print the document to stdout

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Claim {
  const char* id;
  const char* operations;
  const char* summary;
};

// Every claim the library implements, in module order. The completeness test
// fails when any row has no covering test annotation.
constexpr Claim kClaims[] = {
    {"v-function-definition", "v_of, v_u64",
     "v sums prime+exponent over the repeated prime powers and the bare primes with exponent 1"},
    {"a-function-definition", "alladi_a", "fully additive companion summing prime times exponent"},
    {"psi-function-definition", "mullin_psi", "multiplicative companion taking products in place of sums"},
    {"squarefree-predicate", "is_squarefree",
     "square-free test from the factorization, unknown on budget exhaustion"},
    {"v-additive-coprime", "v_of", "v is additive across coprime factors"},
    {"digit-expansion", "to_digits, from_digits", "canonical base-b digit expansion and its inverse"},
    {"digit-reversal", "reverse", "digit reversal in base b, leading zeros dropped"},
    {"reverse-involution", "reverse", "reversal is an involution off multiples of the base"},
    {"lemma-reverse-2n", "reverse", "the reversal of 2n in base n+1 is n squared"},
    {"digit-sum", "sum_digits", "base-b digit sum"},
    {"palindrome-predicate", "is_palindrome", "a palindrome equals its own reversal"},
    {"concat-closed-form", "concat_copies",
     "repeated concatenation has a geometric-series closed form"},
    {"repunit-closed-form", "repunit", "repunits as geometric sums of base powers"},
    {"alternating-block-sum", "rho_k2", "alternating 1,0 blocks sum over squared-base powers"},
    {"reverse-multiplier-solutions", "find_reverse_multiples",
     "solutions of k*n equal to the reversal of n"},
    {"vpal-membership-conditions", "is_v_palindrome",
     "membership: base does not divide n, n is not a palindrome, v agrees on both sides"},
    {"f-palindrome-generalization", "is_f_palindrome",
     "membership generalized to the companion arithmetic functions"},
    {"base10-enumeration", "enumerate_v_palindromes", "ascending enumeration of the members"},
    {"table1-smallest", "smallest_v_palindrome", "smallest member per base, bases 2 through 19"},
    {"gap-199-377", "longest_gap",
     "longest run of consecutive non-members below 600 starts at 199 with length 377"},
    {"prime-members", "find_prime_v_palindromes",
     "prime members exist in some bases; none below 10^6 in base ten"},
    {"base10-prime-candidate-form", "base10_prime_candidates",
     "base-ten prime members must have the near-power digit shape"},
    {"conjecture3-unique-49", "conjecture3_scan",
     "49 is the only n below 10^6 equal to v of its own reversal"},
    {"conjecture2-squarefree-scan", "squarefree_v_palindromes",
     "members whose two sides are both square-free"},
    {"membership-indicator", "indicator", "indicator of membership of the k-fold concatenation"},
    {"indicator-periodicity", "detect_period", "the indicator is periodic in the repetition count"},
    {"indicator-decomposition", "decompose",
     "the indicator is an integer combination of divisibility indicators"},
    {"smallest-period-lcm", "omega0",
     "the smallest period is the lcm of the moduli in the decomposition"},
    {"first-membership-index", "c_value",
     "the first membership index is the smallest modulus, infinite when none"},
    {"period-gcd-dependence", "analyze",
     "within a period the indicator depends only on gcd(k, period)"},
    {"one-implies-infinitely-many", "one_implies_infinitely_many",
     "one concatenated member yields infinitely many along its residue class"},
    {"family-18rho", "base10_18rho", "18 times any 0/1 palindrome is a base-ten member"},
    {"family-2p", "construct_2p", "2p is a member in base p+1 for every odd prime p"},
    {"family-2p-concat-iff", "construct_2p_concat",
     "the k-fold block of 2p is a member exactly when p does not divide k"},
    {"family-2p-repunit", "construct_2p_repunit", "2p times a repunit is a member in base p+1"},
    {"family-p2-rho", "construct_p2_rho",
     "2p^2 times a 0/1 palindrome is a member in base p^2+1"},
    {"family-p2-concat", "construct_p2_concat",
     "repeated blocks of 2p^2 are members in base p^2+1"},
    {"family-p2-repunit", "construct_p2_repunit",
     "2p^2 times a repunit is a member in base p^2+1"},
    {"lemma-v2p-vp2", "v_of", "v(2p) equals v(p^2) for odd primes p"},
    {"triple-system-definition", "solve_system, permissible_triples",
     "permissible triples solve the paired two-digit equations"},
    {"triple-solution-form", "solve_system",
     "the linear system solves to rational multiples of t over b^2-1"},
    {"modulus-f-of-b", "f_of_b", "the least modulus forcing integral digits divides b^2-1"},
    {"admissible-t-set", "S_of_b",
     "admissible t: multiples of f(b) coprime to 30 below the digit bound"},
    {"triples-from-t-set", "permissible_triples",
     "the triples for b are exactly those generated by the admissible t"},
    {"closed-form-30k", "triple_for_30k",
     "closed-form triple for bases 30k with k = 4 modulo 11"},
    {"bases-congruence-120-330", "bases_with_triples", "bases 120 modulo 330 admit triples"},
    {"oeis-a338038-match", "fetch_bfile, parse_bfile, compare",
     "generated v values match the committed A338038 terms"},
    {"oeis-a338039-match", "enumerate_v_palindromes, compare",
     "the enumerated base-ten members match the committed A338039 terms"},
    {"stern-recurrence", "stern_s", "Stern's diatomic recurrence"},
    {"northshield-recurrence", "northshield_b",
     "Northshield's base-3 analogue over integers extended by sqrt(2)"},
    {"stern-reversal-invariant", "check_reversal_invariant",
     "Stern values are invariant under binary digit reversal"},
    {"northshield-reversal-invariant", "check_reversal_invariant",
     "Northshield values are invariant under base-3 digit reversal"},
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// "file: test name" references, per claim id, in scan order.
using Coverage = std::map<std::string, std::vector<std::string>>;

std::string quoted_name(const std::string& line) {
  const auto open = line.find('"');
  if (open == std::string::npos) return "";
  const auto close = line.find('"', open + 1);
  if (close == std::string::npos) return "";
  return line.substr(open + 1, close - open - 1);
}

std::string function_name(const std::string& line) {
  if (line.rfind("void ", 0) != 0) return "";
  const auto open = line.find('(');
  if (open == std::string::npos) return "";
  return trim(line.substr(5, open - 5));
}

void scan_file(const std::filesystem::path& path, Coverage& coverage,
               std::set<std::string>& unknown_ids) {
  std::ifstream in(path);
  std::string line;
  std::vector<std::string> pending;
  const std::string file = path.filename().string();
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.rfind("// verifies:", 0) == 0) {
      std::istringstream ids(stripped.substr(12));
      std::string id;
      while (std::getline(ids, id, ',')) {
        id = trim(id);
        if (!id.empty()) pending.push_back(id);
      }
      continue;
    }
    if (pending.empty()) continue;
    std::string test;
    if (stripped.rfind("TEST_CASE(", 0) == 0) test = quoted_name(stripped);
    if (test.empty()) test = function_name(stripped);
    if (test.empty()) continue;
    for (const auto& id : pending) {
      bool known = false;
      for (const auto& claim : kClaims) known = known || id == claim.id;
      if (!known) unknown_ids.insert(id);
      coverage[id].push_back(file + ": " + test);
    }
    pending.clear();
  }
}

std::string render(const Coverage& coverage) {
  std::ostringstream out;
  out << "# Claim-to-test traceability\n\n";
  out << "Generated by `tools/trace_matrix`; regenerate with `trace_matrix --write <repo_root>`.\n";
  out << "Each row ties one implemented claim to the operations realizing it and the tests\n";
  out << "covering it. The `trace_completeness` ctest entry fails when a claim loses its\n";
  out << "coverage or this document goes stale.\n\n";
  out << "| claim | summary | operations | covered by |\n";
  out << "|---|---|---|---|\n";
  for (const auto& claim : kClaims) {
    out << "| `" << claim.id << "` | " << claim.summary << " | `" << claim.operations << "` | ";
    const auto hit = coverage.find(claim.id);
    if (hit == coverage.end()) {
      out << "(none)";
    } else {
      for (std::size_t i = 0; i < hit->second.size(); ++i)
        out << (i ? "; " : "") << hit->second[i];
    }
    out << " |\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  std::string mode = "--print";
  std::string root_arg;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--write" || arg == "--check")
      mode = arg;
    else
      root_arg = arg;
  }
  if (root_arg.empty()) {
    std::cerr << "usage: trace_matrix [--write|--check] <repo_root>\n";
    return 2;
  }
  const fs::path root = root_arg;
  const fs::path tests = root / "tests";
  const fs::path doc = root / "docs" / "trace_matrix.md";
  if (!fs::is_directory(tests)) {
    std::cerr << "trace_matrix: no tests directory under " << root << "\n";
    return 2;
  }

  std::vector<fs::path> sources;
  for (const auto& entry : fs::directory_iterator(tests))
    if (entry.path().extension() == ".cpp") sources.push_back(entry.path());
  std::sort(sources.begin(), sources.end());

  Coverage coverage;
  std::set<std::string> unknown_ids;
  for (const auto& path : sources) scan_file(path, coverage, unknown_ids);

  int problems = 0;
  for (const auto& id : unknown_ids) {
    std::cerr << "trace_matrix: annotation references unknown claim '" << id << "'\n";
    ++problems;
  }
  for (const auto& claim : kClaims)
    if (!coverage.count(claim.id)) {
      std::cerr << "trace_matrix: claim '" << claim.id << "' has no covering test\n";
      ++problems;
    }
  if (problems) return 1;

  const std::string document = render(coverage);
  if (mode == "--write") {
    fs::create_directories(doc.parent_path());
    std::ofstream(doc) << document;
    std::cout << "wrote " << doc.string() << "\n";
    return 0;
  }
  if (mode == "--check") {
    std::ifstream in(doc);
    std::stringstream existing;
    existing << in.rdbuf();
    if (!in || existing.str() != document) {
      std::cerr << "trace_matrix: " << doc.string()
                << " is stale; regenerate with --write\n";
      return 1;
    }
    std::cout << "trace matrix: " << std::size(kClaims) << " claims covered, document current\n";
    return 0;
  }
  std::cout << document;
  return 0;
}
