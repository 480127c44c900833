#include "vpal/seqcheck.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "vpal/vpal.hpp"

using vpal::Nat;
using vpal::QuadInt;
using vpal::Sequence;

namespace {

std::filesystem::path fresh_cache_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("vpal-seqcheck-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("b-file parsing") {
  const Sequence two = vpal::parse_bfile("1 18\n2 81\n");
  CHECK(two.offset == 1);
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms[0] == std::pair<long long, Nat>{1, 18});
  CHECK(two.terms[1] == std::pair<long long, Nat>{2, 81});

  const Sequence commented = vpal::parse_bfile("# comment\n1 0\n");
  CHECK(commented.terms.size() == 1);

  CHECK(vpal::parse_bfile("0 5\n1 7\n").offset == 0);

  CHECK_THROWS_WITH_AS(vpal::parse_bfile("1 x\n"),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(vpal::parse_bfile("1 5\n3 7\n"),
                       doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_AS(vpal::parse_bfile("1 5 9\n"), std::runtime_error);
  CHECK_THROWS_AS(vpal::parse_bfile(""), std::runtime_error);
  CHECK_THROWS_AS(vpal::parse_bfile("# only comments\n"), std::runtime_error);
}

TEST_CASE("serialization round-trips canonical b-files") {
  const std::string canonical = "1 18\n2 81\n3 198\n";
  CHECK(vpal::serialize_bfile(vpal::parse_bfile(canonical)) == canonical);

  const auto fixture = vpal::fetch_bfile("A338039", fresh_cache_dir());
  const Sequence seq = vpal::parse_bfile(fixture.text, "A338039");
  CHECK(vpal::serialize_bfile(seq) == fixture.text);
  CHECK(vpal::parse_bfile(vpal::serialize_bfile(seq), "A338039") == seq);
}

TEST_CASE("b-file lookup order and provenance") {
  const auto cache = fresh_cache_dir();

  const auto fixture = vpal::fetch_bfile("A338038", cache);
  CHECK(fixture.provenance == vpal::Provenance::fixture);
  CHECK(vpal::parse_bfile(fixture.text).terms.size() == 10'000);

  std::filesystem::create_directories(cache);
  std::ofstream(cache / "b338038.txt") << "1 42\n";
  const auto cached = vpal::fetch_bfile("A338038", cache);
  CHECK(cached.provenance == vpal::Provenance::cache);
  CHECK(cached.text == "1 42\n");

  CHECK_THROWS_WITH_AS(vpal::fetch_bfile("A338371", cache),
                       doctest::Contains("A338371"), std::runtime_error);
  CHECK_THROWS_AS(vpal::fetch_bfile("nonsense", cache), std::invalid_argument);
  CHECK_THROWS_AS(vpal::fetch_bfile("A38", cache), std::invalid_argument);

  std::filesystem::remove_all(cache);
}

// verifies: oeis-a338038-match
TEST_CASE("comparison against generated terms") {
  const auto cache = fresh_cache_dir();
  const Sequence a338038 = vpal::parse_bfile(vpal::fetch_bfile("A338038", cache).text, "A338038");

  std::vector<Nat> values;
  for (std::uint64_t n = 1; n <= 2000; ++n) values.push_back(*vpal::v_of(n));

  SUBCASE("the v generator matches its sequence") {
    const auto report = vpal::compare(a338038, values, 0);
    CHECK(report.match());
    CHECK(report.compared == 2000);
  }

  SUBCASE("first mismatch is located by b-file index") {
    values[4] += 1;
    const auto report = vpal::compare(a338038, values, 0);
    CHECK_FALSE(report.match());
    CHECK(report.first_mismatch == 5);
  }

  SUBCASE("alignment shifts are honored") {
    std::vector<Nat> shifted{Nat(999)};
    shifted.insert(shifted.end(), values.begin(), values.end());
    const auto report = vpal::compare(a338038, shifted, 1);
    CHECK(report.match());
    CHECK(report.compared == 2000);
  }

  SUBCASE("empty overlap is an error") {
    CHECK_THROWS_AS(vpal::compare(a338038, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(vpal::compare(a338038, values, -20'000), std::invalid_argument);
  }
}

// verifies: oeis-a338039-match
TEST_CASE("the base-ten members match their sequence") {
  const auto cache = fresh_cache_dir();
  const Sequence a338039 = vpal::parse_bfile(vpal::fetch_bfile("A338039", cache).text, "A338039");
  const auto enumeration = vpal::enumerate_v_palindromes(10, 99'979);
  CHECK(enumeration.unknowns.empty());
  CHECK(enumeration.members.size() == 92);
  const auto report = vpal::compare(a338039, enumeration.members, 0);
  CHECK(report.match());
  CHECK(report.compared == 92);
}

// verifies: stern-recurrence
TEST_CASE("Stern's diatomic sequence") {
  const std::vector<Nat> expected{0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(vpal::stern_s(n) == expected[n]);
  CHECK(vpal::stern_s(6) == vpal::stern_s(3));

  SUBCASE("defining recurrences re-checked") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      CHECK(vpal::stern_s(2 * n) == vpal::stern_s(n));
      CHECK(vpal::stern_s(2 * n + 1) == vpal::stern_s(n) + vpal::stern_s(n + 1));
    }
  }
}

// verifies: northshield-recurrence
TEST_CASE("Northshield's b") {
  const std::vector<QuadInt> expected{{0, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 2},
                                      {3, 0}, {0, 1}, {3, 0}, {0, 2}};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(vpal::northshield_b(n) == expected[n]);
  CHECK(vpal::northshield_b(5) == vpal::northshield_b(7));  // 7 = reverse of 5 in base 3

  SUBCASE("quadratic integer arithmetic") {
    const QuadInt sqrt2{0, 1};
    CHECK(sqrt2 * sqrt2 == QuadInt{2, 0});
    CHECK(QuadInt{3, 2}.times_sqrt2() == QuadInt{4, 3});
    const QuadInt a{2, 3}, b{5, 1}, c{7, 4};
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a - a == QuadInt{0, 0});
  }
}

// verifies: stern-reversal-invariant, northshield-reversal-invariant
TEST_CASE("reversal invariants hold exhaustively") {
  const auto stern = vpal::check_reversal_invariant(vpal::ReversalInvariant::stern_base2, 10'000);
  CHECK(stern.ok());
  CHECK(stern.checked == 10'000);

  const auto north =
      vpal::check_reversal_invariant(vpal::ReversalInvariant::northshield_base3, 1'000);
  CHECK(north.ok());
  CHECK(north.checked == 1'000);

  CHECK(vpal::check_reversal_invariant(vpal::ReversalInvariant::stern_base2, 1).ok());
  CHECK_THROWS_AS(vpal::check_reversal_invariant(vpal::ReversalInvariant::stern_base2, 0),
                  std::invalid_argument);
}
