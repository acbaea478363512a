#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "adcdse/arch.hpp"

using adcdse::Architecture;
using adcdse::StageSpec;

namespace {

// Fibonacci with F(1) = F(2) = 1; the enumeration count is F(2N-3) - 1.
std::uint64_t fib(int n) {
  std::uint64_t a = 1, b = 1;
  for (int i = 2; i < n; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return n <= 2 ? 1 : b;
}

// Independent counting oracle: compositions of the post-first-stage bit
// budget where a one-bit part is either a 1.5-bit stage or a full 2-bit
// stage, larger parts are single full stages, and the last part is a flash.
std::uint64_t tail_count(int remaining, std::map<int, std::uint64_t>& memo) {
  if (auto it = memo.find(remaining); it != memo.end()) return it->second;
  std::uint64_t n = 1;  // close with a flash of remaining+1 bits
  if (remaining >= 2) n += tail_count(remaining - 1, memo);  // 1.5-bit stage
  for (int part = 1; part < remaining; ++part) {             // full stage
    n += tail_count(remaining - part, memo);
  }
  memo[remaining] = n;
  return n;
}

std::uint64_t composition_count(int bits) {
  std::map<int, std::uint64_t> memo;
  std::uint64_t n = 0;
  for (int first = 2; first <= bits - 1; ++first) n += tail_count(bits - first, memo);
  return n;
}

}  // namespace

TEST_CASE("stage string parsing") {
  const Architecture a = Architecture::parse("2/9");
  REQUIRE(a.stage_count() == 2);
  CHECK(a.stages()[0] == StageSpec::full(2));
  CHECK(a.stages()[1] == StageSpec::full(9));
  CHECK(a.to_string() == "2/9");

  const Architecture b = Architecture::parse("3/1.5/1.5/1.5/1.5/1.5/1.5/2");
  CHECK(b.stage_count() == 8);
  CHECK(b.stages()[1].is_half());
  CHECK(b.to_string() == "3/1.5/1.5/1.5/1.5/1.5/1.5/2");
}

TEST_CASE("parse rejects invalid stage strings with the violated rule") {
  CHECK_THROWS_WITH_AS(Architecture::parse("1.5/2"),
                       doctest::Contains("first stage"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Architecture::parse("2/1.5"),
                       doctest::Contains("last stage"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Architecture::parse("2"),
                       doctest::Contains("at least 2 stages"), std::invalid_argument);
  CHECK_THROWS_AS(Architecture::parse("2//2"), std::invalid_argument);
  CHECK_THROWS_AS(Architecture::parse("2/x"), std::invalid_argument);
  CHECK_THROWS_AS(Architecture::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Architecture::parse("2/1"), std::invalid_argument);
  CHECK_THROWS_AS(Architecture::parse("17/2"), std::invalid_argument);
  CHECK_THROWS_AS(Architecture::parse("2/2.5/2"), std::invalid_argument);
}

TEST_CASE("effective bits bookkeeping") {
  CHECK(Architecture::parse("2/9").effective_bits() == 10);
  CHECK(Architecture::parse("2/2/2/7").effective_bits() == 10);
  CHECK(Architecture::parse("2/2").effective_bits() == 3);
  CHECK(Architecture::parse("3/1.5/1.5/1.5/1.5/1.5/1.5/2").effective_bits() == 10);
}

TEST_CASE("comparator counts") {
  CHECK(Architecture::parse("2/9").comparator_count() == 514);
  CHECK(Architecture::parse("2/2/2/2/2/2/2/2/2").comparator_count() == 27);
  CHECK(Architecture::parse("3/1.5/1.5/1.5/1.5/1.5/1.5/2").comparator_count() == 22);
  CHECK(Architecture::parse("4/1.5/1.5/2/1.5/1.5/2").comparator_count() == 29);
  CHECK(Architecture::parse("2/2/2/7").comparator_count() == 136);
}

TEST_CASE("enumeration of small resolutions") {
  const auto n3 = adcdse::enumerate_architectures(3);
  REQUIRE(n3.size() == 1);
  CHECK(n3[0].to_string() == "2/2");

  const auto n4 = adcdse::enumerate_architectures(4);
  std::set<std::string> got;
  for (const auto& a : n4) got.insert(a.to_string());
  CHECK(got == std::set<std::string>{"2/3", "2/1.5/2", "2/2/2", "3/2"});

  CHECK(adcdse::enumerate_architectures(6).size() == 33);
}

TEST_CASE("enumeration count matches the closed form and a counting oracle") {
  const std::uint64_t expected[] = {1, 4, 12, 33, 88, 232, 609, 1596};
  for (int bits = 3; bits <= 10; ++bits) {
    const std::uint64_t n = adcdse::count_architectures(bits);
    CHECK(n == expected[bits - 3]);
    CHECK(n == fib(2 * bits - 3) - 1);
    CHECK(n == composition_count(bits));
  }
  CHECK_THROWS_AS(adcdse::count_architectures(2), std::invalid_argument);
  CHECK_THROWS_AS(adcdse::count_architectures(17), std::invalid_argument);
}

TEST_CASE("every enumerated architecture is valid, unique and round-trips") {
  for (int bits : {5, 8}) {
    const auto archs = adcdse::enumerate_architectures(bits);
    std::set<std::string> seen;
    for (const auto& a : archs) {
      CHECK(a.effective_bits() == bits);
      CHECK(seen.insert(a.to_string()).second);
      CHECK(Architecture::parse(a.to_string()) == a);
    }
  }
}

TEST_CASE("enumeration order is canonical and reproducible") {
  const auto a = adcdse::enumerate_architectures(7);
  const auto b = adcdse::enumerate_architectures(7);
  CHECK(a == b);
  // lexicographic over stage sequences, 1.5-bit before any full stage
  CHECK(std::is_sorted(a.begin(), a.end(),
                       [](const Architecture& x, const Architecture& y) {
                         return x.stages() < y.stages();
                       }));
}

TEST_CASE("comparator extrema over the 10-bit space") {
  const auto archs = adcdse::enumerate_architectures(10);
  CHECK(archs.size() == 1596);
  int min_comp = archs[0].comparator_count(), max_comp = min_comp;
  std::set<std::string> at_min, at_max;
  for (const auto& a : archs) {
    const int c = a.comparator_count();
    if (c < min_comp) {
      min_comp = c;
      at_min.clear();
    }
    if (c == min_comp) at_min.insert(a.to_string());
    if (c > max_comp) {
      max_comp = c;
      at_max.clear();
    }
    if (c == max_comp) at_max.insert(a.to_string());
  }
  CHECK(min_comp == 20);
  CHECK(at_min == std::set<std::string>{"2/1.5/1.5/1.5/1.5/1.5/1.5/1.5/2"});
  CHECK(max_comp == 514);
  CHECK(at_max == std::set<std::string>{"2/9", "9/2"});
}

TEST_CASE("gain ledger") {
  const auto l1 = adcdse::gain_ledger(Architecture::parse("2/9"));
  CHECK(l1.gains == std::vector<double>{4.0});
  CHECK(l1.cumulative == std::vector<double>{1.0, 4.0});

  const auto l2 = adcdse::gain_ledger(Architecture::parse("3/1.5/2"));
  CHECK(l2.gains == std::vector<double>{8.0, 2.0});
  CHECK(l2.cumulative == std::vector<double>{1.0, 8.0, 16.0});

  const auto l3 = adcdse::gain_ledger(Architecture::parse("2/2"));
  CHECK(l3.gains == std::vector<double>{4.0});
  CHECK(l3.cumulative == std::vector<double>{1.0, 4.0});
}

TEST_CASE("cumulative gains increase strictly") {
  for (const auto& a : adcdse::enumerate_architectures(8)) {
    const auto ledger = adcdse::gain_ledger(a);
    for (std::size_t j = 1; j < ledger.cumulative.size(); ++j) {
      CHECK(ledger.cumulative[j] > ledger.cumulative[j - 1]);
    }
  }
}
