#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "adcdse/impair.hpp"

using adcdse::ImpairmentParams;
using adcdse::StageErrorEval;

// frozen from a 40-digit evaluation of atanh(tanh(0.2)*0.5)/0.2
static constexpr double kNl05Alpha02 = 0.4950496340303606879809;
// (1 - 0.015) * kNl05Alpha02 - 0.5
static constexpr double kErr05 = -0.01237611048009472233885;

TEST_CASE("nonlinear transfer fixed points and golden value") {
  CHECK(adcdse::nonlinear_tf(0.0, 0.2) == 0.0);
  CHECK(adcdse::nonlinear_tf(1.0, 0.2) == 1.0);
  CHECK(adcdse::nonlinear_tf(-1.0, 0.2) == -1.0);
  CHECK(adcdse::nonlinear_tf(0.5, 1e-12) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(adcdse::nonlinear_tf(0.5, 0.0) == 0.5);
  CHECK(adcdse::nonlinear_tf(0.5, 0.2) ==
        doctest::Approx(kNl05Alpha02).epsilon(1e-15));
}

TEST_CASE("gain transfer") {
  CHECK(adcdse::gain_tf(0.5, -0.015) == doctest::Approx(0.4925).epsilon(1e-15));
  CHECK(adcdse::gain_tf(1.0, 0.0) == 1.0);
  CHECK(adcdse::gain_tf(-1.0, -0.015) == doctest::Approx(-0.985).epsilon(1e-15));
}

TEST_CASE("stage error values") {
  const ImpairmentParams p{-0.015, 0.2};
  CHECK(adcdse::stage_error(0.0, p) == 0.0);
  CHECK(adcdse::stage_error(1.0, p) == -0.015);  // exact at the boundary
  CHECK(adcdse::stage_error(0.5, p) == doctest::Approx(kErr05).epsilon(1e-14));

  const ImpairmentParams ideal{0.0, 0.0};
  for (double u = -1.0; u <= 1.0; u += 0.125) {
    CHECK(adcdse::stage_error(u, ideal) == 0.0);
  }
}

TEST_CASE("stage error is exactly eps at full scale for any alpha") {
  for (double eps : {-0.015, 0.015, -0.2, 0.33}) {
    for (double alpha : {0.0, 1e-6, 0.2, 1.0}) {
      CHECK(adcdse::stage_error(1.0, {eps, alpha}) == eps);
      CHECK(adcdse::stage_error(-1.0, {eps, alpha}) == -eps);
    }
  }
}

TEST_CASE("odd symmetry over random inputs") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const ImpairmentParams p{-0.015, 0.2};
  for (int i = 0; i < 1000; ++i) {
    const double u = dist(rng);
    const double plus = adcdse::stage_error(u, p);
    const double minus = adcdse::stage_error(-u, p);
    CHECK(std::abs(plus + minus) <= 1e-16 * (1.0 + std::abs(plus)));
  }
}

TEST_CASE("nonlinear transfer is strictly increasing") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double alpha : {0.0, 0.05, 0.2, 1.0, 3.0}) {
    for (int i = 0; i < 300; ++i) {
      double a = dist(rng), b = dist(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      CHECK(adcdse::nonlinear_tf(a, alpha) < adcdse::nonlinear_tf(b, alpha));
    }
  }
}

TEST_CASE("small-alpha limit collapses to identity") {
  for (double alpha : {1e-4, 1e-6, 1e-9}) {
    for (double u = -1.0; u <= 1.0; u += 0.0625) {
      CHECK(std::abs(adcdse::nonlinear_tf(u, alpha) - u) <= 1e-7);
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ImpairmentParams{1.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ImpairmentParams{-1.5, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ImpairmentParams{0.0, -0.1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ImpairmentParams{std::nan(""), 0.2}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((ImpairmentParams{0.0, std::nan("")}.validate()),
                  std::invalid_argument);
  CHECK_NOTHROW((ImpairmentParams{-0.015, 0.2}.validate()));
  CHECK_NOTHROW((ImpairmentParams{0.0, 0.0}.validate()));
}

TEST_CASE("the cached evaluator matches the free functions") {
  const ImpairmentParams p{-0.015, 0.2};
  const StageErrorEval eval(p);
  for (double u = -1.0; u <= 1.0; u += 0.03125) {
    CHECK(eval.nonlinear(u) == adcdse::nonlinear_tf(u, p.alpha_nl));
    CHECK(eval.error(u) == adcdse::stage_error(u, p));
  }
  const StageErrorEval ideal(ImpairmentParams{0.0, 0.0});
  CHECK(ideal.nonlinear(0.3) == 0.3);
  CHECK(ideal.error(0.3) == 0.0);
  CHECK(ideal.impaired_residue(0.3) == 0.3);
}
