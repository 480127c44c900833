#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vpal/arith.hpp"

namespace vpal {

/// One OEIS sequence. Indices are strictly increasing and contiguous from
/// offset; offset always equals the first term's index.
struct Sequence {
  std::string id;
  long long offset = 1;
  std::vector<std::pair<long long, Nat>> terms;
  bool operator==(const Sequence&) const = default;
};

/// x + y*sqrt(2), exactly.
struct QuadInt {
  Nat x;
  Nat y;

  bool operator==(const QuadInt&) const = default;
  QuadInt operator+(const QuadInt& o) const { return {x + o.x, y + o.y}; }
  QuadInt operator-(const QuadInt& o) const { return {x - o.x, y - o.y}; }
  QuadInt operator*(const QuadInt& o) const {
    return {x * o.x + 2 * y * o.y, x * o.y + y * o.x};
  }
  QuadInt times_sqrt2() const { return {2 * y, x}; }
};

/// Parses OEIS b-file text: "index value" lines, '#' comments and blank
/// lines ignored. Malformed lines and non-contiguous indices are reported
/// with their line number.
Sequence parse_bfile(const std::string& text, const std::string& id = "");

/// Canonical b-file text: one "index value" line per term.
std::string serialize_bfile(const Sequence& seq);

enum class Provenance { cache, fixture, network };

struct BFile {
  std::string text;
  Provenance provenance = Provenance::fixture;
};

/// Looks up the b-file for an OEIS id: cache directory first, then the
/// bundled fixtures, then (only when allow_network) an HTTP GET against
/// oeis.org, whose result is written back to the cache. No source available
/// is an explicit error naming the id.
BFile fetch_bfile(const std::string& id, const std::filesystem::path& cache_dir,
                  bool allow_network = false);

struct CompareReport {
  std::size_t compared = 0;
  std::optional<long long> first_mismatch;  // b-file index
  bool match() const { return !first_mismatch.has_value(); }
};

/// Compares the sequence against generated values. The caller states the
/// alignment: generated[pos_of_first_term] corresponds to the b-file's first
/// index (the b-file's own offset governs its side). Empty overlap rejected.
CompareReport compare(const Sequence& seq, const std::vector<Nat>& generated,
                      std::int64_t pos_of_first_term);

/// Stern's diatomic sequence: s(0)=0, s(1)=1, s(2n)=s(n),
/// s(2n+1)=s(n)+s(n+1); memoized.
Nat stern_s(std::uint64_t n);

/// Northshield's b: b(0)=0, b(1)=1, b(3n)=b(n), b(3n+1)=sqrt(2)b(n)+b(n+1),
/// b(3n+2)=b(n)+sqrt(2)b(n+1). Pair recursion over base-3 digits, O(log n).
QuadInt northshield_b(std::uint64_t n);

enum class ReversalInvariant { stern_base2, northshield_base3 };

struct InvariantReport {
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> first_violation;
  bool ok() const { return !first_violation.has_value(); }
};

/// Exhaustively checks f(n) = f(reverse(n)) over 1..limit for the chosen
/// pair: Stern in base 2 or Northshield in base 3.
InvariantReport check_reversal_invariant(ReversalInvariant which, std::uint64_t limit);

}  // namespace vpal
