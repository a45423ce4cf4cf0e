#include "dicke/platform.hpp"

#include "reference_sequences.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dicke;
using Catch::Approx;

TEST_CASE("vdw_coupling power laws") {
  // choose c6 so that J/hbar = 1.5 MHz at r = 5 um
  const double r = 5e-6;
  const double j_target = 1.5e6 * kHBar;
  const double r6 = std::pow(r, 6);
  const PlatformParams p{4.0 * r6 * j_target, r};
  REQUIRE(vdw_coupling(p) == Approx(j_target).epsilon(1e-14));

  PlatformParams doubled = p;
  doubled.r *= 2.0;
  REQUIRE(vdw_coupling(doubled) == Approx(vdw_coupling(p) / 64.0).epsilon(1e-14));

  PlatformParams halved = p;
  halved.c6 *= 0.5;
  REQUIRE(vdw_coupling(halved) == Approx(vdw_coupling(p) / 2.0).epsilon(1e-14));

  REQUIRE_THROWS_AS(vdw_coupling(PlatformParams{-1.0, 1.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(vdw_coupling(PlatformParams{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("physical_duration") {
  const double coupling = 1.5e6 * kHBar;  // J/hbar = 1.5 MHz
  const double t3 = physical_duration(testing::known_optimum_n3(), coupling);
  REQUIRE(t3 == Approx(testing::known_duration_n3() / 1.5e6).epsilon(1e-14));
  REQUIRE(t3 <= 0.64e-6);

  REQUIRE(physical_duration(testing::zero_sequence(3, 2), coupling) == 0.0);

  const double t4 = physical_duration(testing::known_optimum_n4(), coupling);
  REQUIRE(t4 == Approx(0.987 / 1.5e6).epsilon(1e-12));

  // inverse scaling with the coupling
  REQUIRE(physical_duration(testing::known_optimum_n3(), 2.0 * coupling) ==
          Approx(t3 / 2.0).epsilon(1e-14));

  REQUIRE_THROWS_AS(physical_duration(testing::known_optimum_n3(), 0.0),
                    std::invalid_argument);
}
