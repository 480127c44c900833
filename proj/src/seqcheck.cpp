#include "vpal/seqcheck.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "httplib.h"
#include "vpal/digits.hpp"

#ifndef VPAL_FIXTURE_DIR
#define VPAL_FIXTURE_DIR ""
#endif

namespace vpal {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw std::runtime_error("b-file parse error at line " + std::to_string(line) + ": " + what);
}

// "A338038" -> "338038"; the id grammar is A followed by at least six digits.
std::string id_digits(const std::string& id) {
  if (id.size() < 7 || id[0] != 'A') throw std::invalid_argument("malformed OEIS id: " + id);
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i])))
      throw std::invalid_argument("malformed OEIS id: " + id);
  return id.substr(1);
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Advisory lock on <cache_dir>/.lock held for the duration of a cache access.
class CacheLock {
 public:
  explicit CacheLock(const std::filesystem::path& dir) {
    fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~CacheLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }

 private:
  int fd_ = -1;
};

std::mutex fetch_mutex;

}  // namespace

Sequence parse_bfile(const std::string& text, const std::string& id) {
  Sequence seq;
  seq.id = id;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    long long index;
    std::string value;
    if (!(fields >> index >> value)) parse_error(lineno, "expected \"index value\"");
    std::string rest;
    if (fields >> rest) parse_error(lineno, "trailing content");
    Nat term;
    try {
      term = Nat(value);
    } catch (const std::exception&) {
      parse_error(lineno, "bad value " + value);
    }
    if (!seq.terms.empty() && index != seq.terms.back().first + 1)
      parse_error(lineno, "non-contiguous index " + std::to_string(index));
    seq.terms.emplace_back(index, std::move(term));
  }
  if (seq.terms.empty()) throw std::runtime_error("b-file has no terms");
  seq.offset = seq.terms.front().first;
  return seq;
}

std::string serialize_bfile(const Sequence& seq) {
  std::ostringstream out;
  for (const auto& [index, value] : seq.terms) out << index << ' ' << value << '\n';
  return out.str();
}

BFile fetch_bfile(const std::string& id, const std::filesystem::path& cache_dir,
                  bool allow_network) {
  const std::string name = "b" + id_digits(id) + ".txt";
  std::lock_guard guard(fetch_mutex);
  std::filesystem::create_directories(cache_dir);
  CacheLock lock(cache_dir);

  if (auto cached = read_file(cache_dir / name)) return {std::move(*cached), Provenance::cache};

  const std::filesystem::path fixture_dir = VPAL_FIXTURE_DIR;
  if (!fixture_dir.empty())
    if (auto fixture = read_file(fixture_dir / name))
      return {std::move(*fixture), Provenance::fixture};

  if (allow_network) {
    httplib::Client client("http://oeis.org");
    client.set_follow_location(true);
    if (auto res = client.Get("/" + id + "/" + name); res && res->status == 200) {
      std::ofstream out(cache_dir / name, std::ios::binary);
      out << res->body;
      return {res->body, Provenance::network};
    }
    throw std::runtime_error("b-file for " + id + " unavailable: no cache entry, no bundled fixture, and the network fetch failed");
  }
  throw std::runtime_error("b-file for " + id + " unavailable: no cache entry, no bundled fixture (network fetch disabled)");
}

CompareReport compare(const Sequence& seq, const std::vector<Nat>& generated,
                      std::int64_t pos_of_first_term) {
  CompareReport report;
  for (const auto& [index, value] : seq.terms) {
    const std::int64_t pos = pos_of_first_term + (index - seq.offset);
    if (pos < 0 || pos >= static_cast<std::int64_t>(generated.size())) continue;
    ++report.compared;
    if (!report.first_mismatch && generated[static_cast<std::size_t>(pos)] != value)
      report.first_mismatch = index;
  }
  if (report.compared == 0) throw std::invalid_argument("empty overlap between sequence and generated values");
  return report;
}

Nat stern_s(std::uint64_t n) {
  thread_local std::unordered_map<std::uint64_t, Nat> memo;
  if (n < 2) return n;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Nat result = stern_s(n / 2);
  if (n % 2) result += stern_s(n / 2 + 1);
  return memo.emplace(n, std::move(result)).first->second;
}

QuadInt northshield_b(std::uint64_t n) {
  if (n == 0) return {0, 0};
  std::vector<unsigned> digits;
  for (std::uint64_t m = n; m; m /= 3) digits.push_back(m % 3);
  // state (b(k), b(k+1)); appending digit d moves k to 3k+d
  QuadInt a{0, 0}, b{1, 0};
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const QuadInt mid = a.times_sqrt2() + b;      // b(3k+1)
    const QuadInt high = a + b.times_sqrt2();     // b(3k+2)
    switch (*it) {
      case 0: b = mid; break;                     // (b(3k), b(3k+1))
      case 1: a = mid, b = high; break;           // (b(3k+1), b(3k+2))
      default: a = high; break;                   // (b(3k+2), b(k+1))
    }
  }
  return a;
}

InvariantReport check_reversal_invariant(ReversalInvariant which, std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  InvariantReport report;
  const std::uint64_t base = which == ReversalInvariant::stern_base2 ? 2 : 3;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const std::uint64_t r = reverse(n, base).convert_to<std::uint64_t>();
    const bool ok = which == ReversalInvariant::stern_base2
                        ? stern_s(n) == stern_s(r)
                        : northshield_b(n) == northshield_b(r);
    ++report.checked;
    if (!ok) {
      report.first_violation = n;
      break;
    }
  }
  return report;
}

}  // namespace vpal
