#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "adcdse/arch.hpp"
#include "adcdse/impair.hpp"
#include "adcdse/inl.hpp"
#include "adcdse/reference.hpp"
#include "adcdse/stage_model.hpp"

using adcdse::Architecture;
using adcdse::ImpairmentParams;
using adcdse::InlProfile;

namespace {

const ImpairmentParams kPaper{-0.015, 0.2};

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Test-side decomposition of the accumulation: the input-referred error of
// one stage along the ideal trajectory, in LSB.
std::vector<double> stage_contribution(const Architecture& a,
                                       const ImpairmentParams& p,
                                       std::size_t stage) {
  const int n = a.effective_bits();
  const double q = 2.0 / (1 << n);
  const auto ledger = adcdse::gain_ledger(a);
  const adcdse::StageErrorEval eval(p);
  std::vector<double> out((std::size_t(1) << n) - 1);
  for (std::size_t i = 1; i <= out.size(); ++i) {
    double u = -1.0 + static_cast<double>(i) * q;
    for (std::size_t j = 0; j + 1 < a.stages().size(); ++j) {
      const double r = adcdse::ideal_residue(a.stages()[j], j == 0, u);
      if (j == stage) out[i - 1] = -eval.error(r) / ledger.cumulative[j + 1] / q;
      u = r;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("zero impairments give an all-zero profile") {
  for (const char* cfg : {"2/2", "3/1.5/2", "2/1.5/1.5/2", "4/3"}) {
    const auto profile = adcdse::global_inl(Architecture::parse(cfg), {0.0, 0.0});
    CHECK(max_abs(profile.inl) == 0.0);
    CHECK(profile.inl.size() ==
          (std::size_t(1) << Architecture::parse(cfg).effective_bits()) - 1);
  }
}

TEST_CASE("a 9-bit front end keeps the profile nearly ideal") {
  const auto profile = adcdse::global_inl(Architecture::parse("9/2"), kPaper);
  CHECK(max_abs(profile.inl) <= 0.1);
}

TEST_CASE("a 2-bit front end ahead of a 9-bit flash degrades by LSBs") {
  const auto front2 = adcdse::global_inl(Architecture::parse("2/9"), kPaper);
  const auto front9 = adcdse::global_inl(Architecture::parse("9/2"), kPaper);
  CHECK(max_abs(front2.inl) >= 1.0);
  CHECK(max_abs(front2.inl) <= 5.0);
  CHECK(max_abs(front2.inl) > max_abs(front9.inl));
}

TEST_CASE("dnl derivation") {
  InlProfile zero = adcdse::ideal_profile(6);
  auto d = adcdse::dnl_from_inl(zero);
  CHECK(d.dnl.size() == zero.inl.size() - 1);
  CHECK(max_abs(d.dnl) == 0.0);
  CHECK_FALSE(d.non_monotonic);

  InlProfile constant = zero;
  std::fill(constant.inl.begin(), constant.inl.end(), 0.5);
  d = adcdse::dnl_from_inl(constant);
  CHECK(max_abs(d.dnl) == 0.0);

  const auto impaired = adcdse::global_inl(Architecture::parse("2/9"), kPaper);
  d = adcdse::dnl_from_inl(impaired);
  CHECK(d.dnl.size() == impaired.inl.size() - 1);

  InlProfile bad = zero;
  bad.inl[10] = 1.0;
  bad.inl[11] = -0.5;  // code 11 collapses: dnl = -1.5
  CHECK(adcdse::dnl_from_inl(bad).non_monotonic);
}

TEST_CASE("profile odd symmetry") {
  for (const char* cfg : {"2/9", "2/1.5/1.5/1.5/2", "3/2/2"}) {
    const auto profile = adcdse::global_inl(Architecture::parse(cfg), kPaper);
    const std::size_t m = profile.inl.size() + 1;  // 2^N
    for (std::size_t i = 1; i <= profile.inl.size(); ++i) {
      CHECK(profile.inl[i - 1] ==
            doctest::Approx(-profile.inl[m - i - 1]).epsilon(0).scale(1e-9));
    }
  }
}

TEST_CASE("profile is linear in the gain error when the tanh term is off") {
  const Architecture a = Architecture::parse("2/1.5/2");
  const auto small = adcdse::global_inl(a, {-0.01, 0.0});
  const auto big = adcdse::global_inl(a, {-0.02, 0.0});
  for (std::size_t i = 0; i < small.inl.size(); ++i) {
    CHECK(big.inl[i] == doctest::Approx(2.0 * small.inl[i]).epsilon(1e-9));
  }
}

TEST_CASE("the front stage dominates the profile of a front-heavy config") {
  const Architecture a = Architecture::parse("2/2/2");
  const auto ledger = adcdse::gain_ledger(a);
  const auto full = adcdse::global_inl(a, kPaper);
  const auto first = stage_contribution(a, kPaper, 0);
  const auto second = stage_contribution(a, kPaper, 1);
  // decomposition sanity: contributions add up to the profile
  for (std::size_t i = 0; i < full.inl.size(); ++i) {
    CHECK(full.inl[i] == doctest::Approx(first[i] + second[i]).epsilon(1e-12));
  }
  // the gain ledger predicts the referral advantage of the front stage
  const double predicted = ledger.cumulative[2] / ledger.cumulative[1];
  CHECK(max_abs(first) >= predicted * max_abs(second) * 0.99);
}

TEST_CASE("resolution guard") {
  CHECK_THROWS_AS(adcdse::global_inl(Architecture::parse("2/14"), kPaper),
                  std::invalid_argument);
  CHECK_NOTHROW(adcdse::global_inl(Architecture::parse("2/13"), kPaper));
}

TEST_CASE("parallel and serial accumulation agree bitwise") {
  for (const char* cfg : {"2/9", "3/1.5/1.5/1.5/1.5/1.5/1.5/2", "2/2/2/7"}) {
    const Architecture a = Architecture::parse(cfg);
    const auto par = adcdse::global_inl(a, kPaper);
    const auto ser = adcdse::reference::global_inl(a, kPaper);
    REQUIRE(par.inl.size() == ser.inl.size());
    for (std::size_t i = 0; i < par.inl.size(); ++i) {
      CHECK(par.inl[i] == ser.inl[i]);
    }
  }
}
