#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psbraid/bounds.hpp"
#include "psbraid/curves.hpp"
#include "psbraid/io.hpp"

#include <cmath>
#include <string>

using namespace psbraid;

TEST_CASE("main upper bound branches") {
  CHECK(main_upper(2, 1) ==
        doctest::Approx(4.0 * std::log(4.0) + 4.0 * std::log(7.0)).epsilon(1e-15));
  CHECK(main_upper(2, 1) == doctest::Approx(13.32881804070082).epsilon(1e-14));
  for (std::int64_t g : {2, 5, 17}) {
    CHECK(main_upper(g, 2 * g) == doctest::Approx(4.0 * std::log(7.0)).epsilon(1e-15));
    CHECK(main_upper(g, 2 * g + 1) == doctest::Approx(4.0 * std::log(6.0)).epsilon(1e-15));
  }
  CHECK(main_upper(2, 5) == doctest::Approx(7.167037876912220).epsilon(1e-14));
  CHECK_THROWS_AS(main_upper(1, 1), std::domain_error);
  CHECK_THROWS_AS(main_upper(2, 0), std::domain_error);
}

TEST_CASE("constant and homology lower bounds") {
  CHECK(constant_lower() == 0.000155);
  CHECK(alm_lower(4, -3) == doctest::Approx(0.00031 * 5.0 / 3.0).epsilon(1e-15));
  CHECK(alm_lower(4, -3) == doctest::Approx(0.0005166666666667).epsilon(1e-10));
  CHECK(alm_lower(0, -1) == doctest::Approx(0.00031).epsilon(1e-15));
  CHECK_THROWS_AS(alm_lower(4, 0), std::domain_error);
  CHECK_THROWS_AS(alm_lower(4, 3), std::domain_error);
}

TEST_CASE("kappa lower bound") {
  CHECK(kappa_lower(2, 1) == 4);
  CHECK(kappa_lower(2, 6) == 5);
  for (std::int64_t g : {2, 3, 10}) CHECK(kappa_lower(g, 2 * g + 1) == 2 * g);
}

TEST_CASE("homology bound beats the constant on a wide integer grid") {
  // 2 (max{2g, n-1} + 1) > 2g + n - 2 in exact integers, so the evaluated
  // ratio is always above 1/2 and the bound above 0.000155.
  for (std::int64_t g = 2; g <= 128; ++g) {
    for (std::int64_t n = 1; n <= 2 * g + 64; ++n) {
      const std::int64_t kappa = kappa_lower(g, n);
      CHECK(2 * (kappa + 1) > 2 * g + n - 2);
      CHECK(alm_lower(kappa, 2 - 2 * g - n) >= constant_lower());
    }
  }
}

TEST_CASE("genus-growth lower bound variants") {
  CHECK(growth_lower(6, 1, BoundVariant::statement) ==
        doctest::Approx(0.004732253454963211).epsilon(1e-12));
  CHECK(growth_lower(100, 1, BoundVariant::proof) ==
        doctest::Approx(0.003082278623990796).epsilon(1e-12));
  // Inner numerator is negative up to g = 3e^2 + 2, where the proof variant clamps.
  for (std::int64_t g = 6; g <= 24; ++g) CHECK(growth_lower(g, 3, BoundVariant::proof) == 0.0);
  CHECK(growth_lower(25, 3, BoundVariant::proof) > 0.0);
  CHECK_THROWS_AS(growth_lower(5, 1, BoundVariant::proof), std::domain_error);
}

TEST_CASE("genus-growth bound is monotone in g and n") {
  for (std::int64_t n : {1, 2, 7}) {
    double previous = -1.0;
    for (std::int64_t g = 6; g <= 4000; g = g * 5 / 4 + 1) {
      const double value = growth_lower(g, n, BoundVariant::statement);
      CHECK(value >= previous);
      previous = value;
    }
  }
  {
    // The clamped proof variant is flat at zero and then increasing.
    double previous = -1.0;
    for (std::int64_t g = 6; g <= 4000; g = g * 5 / 4 + 1) {
      const double value = growth_lower(g, 2, BoundVariant::proof);
      CHECK(value >= previous);
      previous = value;
    }
  }
  for (std::int64_t g : {7, 26, 100}) {
    for (BoundVariant variant : {BoundVariant::statement, BoundVariant::proof}) {
      double previous = std::numeric_limits<double>::infinity();
      for (std::int64_t n = 1; n <= 64; ++n) {
        const double value = growth_lower(g, n, variant);
        CHECK(value <= previous);
        previous = value;
      }
    }
  }
}

TEST_CASE("distortion lower bound") {
  CHECK(kra_lower(0.0) == 0.0);
  CHECK(kra_lower(2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(kra_lower(6.0) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK_THROWS_AS(kra_lower(-0.5), std::domain_error);
  double previous = -1.0;
  for (double t = 0.0; t <= 32.0; t += 0.25) {
    const double value = kra_lower(t);
    CHECK(value > previous);
    previous = value;
  }
}

TEST_CASE("multi-twist intersection bounds") {
  const IvanovBounds empty = ivanov_bounds({{}, {}, {}, 5});
  CHECK((empty.lower == -5));
  CHECK((empty.upper == 5));

  const IvanovBounds g2 = ivanov_bounds({{3, -3}, {3, 3}, {3, 3}, 0});
  CHECK((g2.lower == 18));
  CHECK((g2.upper == 54));

  for (std::int64_t g = 2; g <= 100; ++g) {
    const std::int64_t i = 2 * g - 1;
    const IvanovBounds bounds = ivanov_bounds({{3, -3}, {i, i}, {i, i}, 0});
    CHECK((bounds.upper == 24 * WideInt(g) * g - 24 * g + 6));
    CHECK((bounds.lower <= bounds.upper));
  }

  CHECK_THROWS_AS(ivanov_bounds({{3}, {1, 2}, {1}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ivanov_bounds({{3}, {-1}, {1}, 0}), std::invalid_argument);
}

TEST_CASE("lower bound exceeds rho-gamma term only through the exponents") {
  // With all |s_i| >= 2 the sum is nonnegative, so lower >= -i(rho, gamma).
  const IvanovBounds bounds = ivanov_bounds({{2, -2, 5}, {1, 2, 3}, {4, 5, 6}, 7});
  CHECK((bounds.lower >= -7));
}

TEST_CASE("point-pushing bounds") {
  CHECK((pointpush_dilatation_upper(2) == 2918));
  CHECK((pointpush_dilatation_upper(3) == 22502));
  CHECK(pointpush_upper(2) == doctest::Approx(9.128696382935672).epsilon(1e-14));
  CHECK(std::log(2918.0) < pointpush_upper(2));
  for (std::int64_t g = 2; g <= 1000; ++g) {
    const WideInt lambda_bound = pointpush_dilatation_upper(g);
    CHECK(std::log(static_cast<double>(lambda_bound)) < pointpush_upper(g));
    CHECK((lambda_bound < 576 * WideInt(g) * g * g * g));
  }
  CHECK_THROWS_AS(pointpush_upper(1), std::domain_error);
}

TEST_CASE("context windows") {
  CHECK(penner_lower(2) == doctest::Approx(std::log(2.0) / 12.0).epsilon(1e-15));
  CHECK(penner_upper(2) == doctest::Approx(std::log(11.0) / 2.0).epsilon(1e-15));
  CHECK(dowdall_lower(2) == doctest::Approx(0.2772588722239781).epsilon(1e-14));
  CHECK(tsai_lower(3, 1.0) == doctest::Approx(std::log(3.0) / 3.0).epsilon(1e-15));
  CHECK(tsai_upper(3, 1.0) == doctest::Approx(std::log(3.0) / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(tsai_lower(2, 1.0), std::domain_error);
  CHECK_THROWS_AS(tsai_upper(3, 0.5), std::domain_error);
}

TEST_CASE("bound profile flags follow hypotheses and group transfer") {
  const BoundProfile at_n1 = bound_profile(2, 1);
  CHECK(at_n1.find("main_upper")->value == doctest::Approx(13.32881804070082));
  CHECK(at_n1.find("dowdall_lower")->valid);
  CHECK(at_n1.find("dowdall_lower")->value == doctest::Approx(0.2772588722239781));
  CHECK(at_n1.find("pointpush_upper")->valid);
  CHECK_FALSE(at_n1.find("thm61_proof")->valid);
  CHECK_FALSE(at_n1.find("penner_upper")->valid);
  CHECK_FALSE(at_n1.find("tsai_lower")->valid);

  const BoundProfile at_n5 = bound_profile(2, 5);
  CHECK(at_n5.find("main_upper")->value == doctest::Approx(4.0 * std::log(6.0)));
  CHECK_FALSE(at_n5.find("dowdall_lower")->valid);

  const BoundProfile with_tsai = bound_profile(7, 4, 2.5);
  CHECK(with_tsai.find("tsai_lower")->valid);
  CHECK_FALSE(with_tsai.find("tsai_upper")->valid);  // no transfer to the subgroup
  CHECK(with_tsai.find("thm61_proof")->valid);

  const BoundProfile no_cg = bound_profile(7, 4);
  CHECK_FALSE(no_cg.find("tsai_lower")->valid);
  CHECK(std::isnan(no_cg.find("tsai_lower")->value));
}

TEST_CASE("valid lower bounds never exceed valid upper bounds on the sweep grid") {
  for (std::int64_t g = 2; g <= 64; ++g) {
    for (std::int64_t n = 1; n <= 2 * g + 16; ++n) {
      const BoundProfile profile = bound_profile(g, n);
      for (const BoundEntry& lower : profile.entries) {
        if (!lower.valid || lower.side != BoundSide::lower) continue;
        for (const BoundEntry& upper : profile.entries) {
          if (!upper.valid || upper.side != BoundSide::upper) continue;
          CHECK(lower.value <= upper.value);
        }
      }
      const double proof = g > 5 ? growth_lower(g, n, BoundVariant::proof) : 0.0;
      CHECK(std::max(constant_lower(), proof) <= main_upper(g, n));
    }
  }
}

TEST_CASE("profile CSV and JSON serialization") {
  const BoundProfile profile = bound_profile(2, 1);
  const std::string header = bound_profile_csv_header(profile);
  CHECK(header.rfind("g,n,main_upper,constant_lower,alm_lower,thm61_statement,thm61_proof",
                     0) == 0);
  CHECK(header.find("main_upper_valid") != std::string::npos);
  const std::string row = bound_profile_csv_row(profile);
  CHECK(row.rfind("2,1,13.3288180407,", 0) == 0);
  CHECK(row.find(",true") != std::string::npos);

  const std::string json = bound_profile_json(profile);
  CHECK(json.find("\"genus\":2") != std::string::npos);
  CHECK(json.find("\"main_upper\":{\"value\":13.3288180407,\"valid\":true,\"side\":\"upper\"}") !=
        std::string::npos);
  // Invalid parametric entries serialize as null values.
  CHECK(json.find("\"tsai_lower\":{\"value\":null") != std::string::npos);
}

TEST_CASE("real formatting is fixed-width significant digits") {
  CHECK(format_real(13.328818040700816) == "13.3288180407");
  CHECK(format_real(0.000155) == "0.000155");
  CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_real(164.0) == "164");
}
