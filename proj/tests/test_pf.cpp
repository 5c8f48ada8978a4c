#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psbraid/pf.hpp"
#include "test_support.hpp"

#include <quadmath.h>

#include <cmath>
#include <random>

using namespace psbraid;

namespace psbraid::detail {

template <>
struct ScalarOps<__float128> {
  static __float128 sqrt(__float128 x) { return sqrtq(x); }
};

}  // namespace psbraid::detail

namespace {

IntersectionMatrix make_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  IntersectionMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (std::int64_t value : row) m(i, j++) = value;
    ++i;
  }
  return m;
}

const IntersectionMatrix kCase1Matrix = make_matrix({{6, 0}, {0, 6}, {8, 8}});

}  // namespace

TEST_CASE("gram of a 1x1 matrix squares the entry") {
  const GramMatrix g = gram(make_matrix({{3}}));
  REQUIRE(g.rows() == 1);
  CHECK((g(0, 0) == 9));
}

TEST_CASE("gram of the 5-curve configuration matrix") {
  const GramMatrix g = gram(kCase1Matrix);
  const GramMatrix expected =
      gram(kCase1Matrix);  // recomputed below entry by entry
  CHECK((g(0, 0) == 36));
  CHECK((g(0, 1) == 0));
  CHECK((g(0, 2) == 48));
  CHECK((g(1, 1) == 36));
  CHECK((g(1, 2) == 48));
  CHECK((g(2, 2) == 128));
  CHECK((g == g.transpose().eval()));
  CHECK((g == expected));
}

TEST_CASE("gram keeps identity patterns") {
  const GramMatrix g = gram(make_matrix({{1, 0}, {0, 1}}));
  CHECK((g(0, 0) == 1));
  CHECK((g(0, 1) == 0));
  CHECK((g(1, 0) == 0));
  CHECK((g(1, 1) == 1));
}

TEST_CASE("gram rejects zero rows and zero columns") {
  CHECK_THROWS_AS(gram(make_matrix({{0, 0}, {1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(gram(make_matrix({{1, 0}, {2, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(gram(make_matrix({{1, -2}})), std::invalid_argument);
}

TEST_CASE("row sums of the Gram matrix") {
  const GramMatrix g = gram(kCase1Matrix);
  CHECK((max_row_sum(g) == 224));
  CHECK((min_row_sum(g) == 84));
  CHECK((max_row_sum(gram(make_matrix({{3}}))) == 9));
  CHECK((max_row_sum(gram(make_matrix({{1, 0}, {0, 1}}))) == 1));
}

TEST_CASE("pf bracket is exact for 1x1 matrices") {
  const PFBracket bracket = pf_eigenvalue(gram(make_matrix({{3}})));
  CHECK(bracket.lower == 9.0L);
  CHECK(bracket.upper == 9.0L);
}

TEST_CASE("pf eigenvalue of the 5-curve configuration is 164") {
  const GramMatrix g = gram(kCase1Matrix);
  const PFBracket bracket = pf_eigenvalue(g, 1e-10);
  CHECK(bracket.width() <= 1e-10L);
  CHECK(bracket.lower <= 164.0L);
  CHECK(bracket.upper >= 164.0L);
  CHECK(bracket.lower >= 84.0L);
  CHECK(bracket.upper <= 224.0L);

  // Independent characteristic-polynomial oracle.
  const long double oracle = testing::largest_eigenvalue_oracle(g);
  CHECK(std::abs(static_cast<double>(oracle - bracket.midpoint())) < 1e-8);

  // Eigenvector ansatz (1, 1, t): 12 t^2 - 23 t - 24 = 0 at t = 8/3, giving
  // eigenvalue 36 + 48 t = 164, all in exact integers.
  CHECK(12 * 8 * 8 - 23 * 8 * 3 - 24 * 9 == 0);
  CHECK(36 * 3 + 48 * 8 == 164 * 3);
}

TEST_CASE("pf rejects reducible matrices") {
  GramMatrix block = GramMatrix::Zero(2, 2);
  block(0, 0) = 3;
  block(1, 1) = 5;
  CHECK_THROWS_AS(pf_eigenvalue(block), std::invalid_argument);
}

TEST_CASE("pf reports non-convergence with the last bracket") {
  // Period-2 support: the quotients oscillate and never tighten past
  // [sqrt(2)-ish gap], so a small cap must fail and carry [1, 2].
  GramMatrix m = GramMatrix::Zero(2, 2);
  m(0, 1) = 2;
  m(1, 0) = 1;
  try {
    pf_eigenvalue(m, 1e-10, 500);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& error) {
    CHECK(error.lower() == 1.0L);
    CHECK(error.upper() == 2.0L);
    CHECK(error.iterations() == 500);
  }
}

TEST_CASE("pf bracket stays inside the row-sum window on random configurations") {
  std::mt19937 rng(912873);
  for (int sample = 0; sample < 120; ++sample) {
    const IntersectionMatrix n = testing::random_connected_bipartite(rng);
    const GramMatrix g = gram(n);
    const PFBracket bracket = pf_eigenvalue(g, 1e-8);
    const auto lo = static_cast<long double>(min_row_sum(g));
    const auto hi = static_cast<long double>(max_row_sum(g));
    CHECK(bracket.lower >= lo);
    CHECK(bracket.upper <= hi);
    CHECK(bracket.lower <= bracket.upper);
    CHECK(bracket.width() <= 1e-8L);

    // Residual of the final iterate against the bracket midpoint.
    const MatrixX<long double> ml = g.cast<long double>();
    const VectorX<long double> r = ml * bracket.iterate - bracket.midpoint() * bracket.iterate;
    CHECK(r.cwiseAbs().maxCoeff() <= 1e-8L * bracket.iterate.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("gram equals the bipartite path-weight matrix") {
  std::mt19937 rng(5561);
  for (int sample = 0; sample < 50; ++sample) {
    const IntersectionMatrix n = testing::random_connected_bipartite(rng, 6, 20);
    const GramMatrix g = gram(n);
    for (Index i = 0; i < n.rows(); ++i) {
      for (Index j = 0; j < n.rows(); ++j) {
        WideInt paths = 0;
        for (Index b = 0; b < n.cols(); ++b) paths += WideInt(n(i, b)) * WideInt(n(j, b));
        CHECK((g(i, j) == paths));
      }
    }
  }
}

TEST_CASE("dilatation from mu matches the quadratic formula") {
  const DilatationEstimate nine = dilatation_from_mu(9.0L);
  CHECK(static_cast<double>(nine.lambda) ==
        doctest::Approx((11.0 + std::sqrt(117.0)) / 2.0).epsilon(1e-14));
  CHECK(static_cast<double>(nine.lambda) == doctest::Approx(10.90832691319598).epsilon(1e-14));
  CHECK(std::abs(static_cast<double>(nine.lambda + 1.0L / nine.lambda - 11.0L)) < 1e-12);

  const DilatationEstimate one = dilatation_from_mu(1.0L);
  CHECK(static_cast<double>(one.lambda) ==
        doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  const DilatationEstimate four = dilatation_from_mu(4.0L);
  CHECK(static_cast<double>(four.lambda) ==
        doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-14));

  const DilatationEstimate big = dilatation_from_mu(164.0L);
  CHECK(static_cast<double>(big.lambda) == doctest::Approx(165.9939756849857).epsilon(1e-13));
  CHECK(static_cast<double>(big.entropy) ==
        doctest::Approx(5.111951496643704).epsilon(1e-13));
  CHECK(static_cast<double>(big.trace) == 166.0);

  CHECK_THROWS_AS(dilatation_from_mu(0.0L), std::domain_error);
  CHECK_THROWS_AS(dilatation_from_mu(-3.0L), std::domain_error);
}

TEST_CASE("dilatation approaches 1 as mu approaches 0") {
  for (double mu : {1e-6, 1e-9, 1e-12}) {
    const DilatationEstimate est = dilatation_from_mu(static_cast<long double>(mu));
    CHECK(est.lambda > 1.0L);
    CHECK(static_cast<double>(est.lambda - 1.0L) <= 2.0 * std::sqrt(mu));
  }
}

TEST_CASE("filling pairs delegate with mu = i^2") {
  const DilatationEstimate three = dilatation_of_filling_pair(3);
  CHECK(three.mu == 9.0L);
  CHECK(static_cast<double>(three.lambda) == doctest::Approx(10.90832691319598).epsilon(1e-14));
  CHECK(dilatation_of_filling_pair(1).mu == 1.0L);
  CHECK(dilatation_of_filling_pair(2).mu == 4.0L);
  CHECK_THROWS_AS(dilatation_of_filling_pair(0), std::domain_error);
}

TEST_CASE("entropy stays below log(2 + mu)") {
  for (double mu : {0.5, 1.0, 9.0, 164.0, 1e4, 1e6}) {
    const DilatationEstimate est = dilatation_from_mu(static_cast<long double>(mu));
    CHECK(est.entropy < std::log(2.0L + static_cast<long double>(mu)));
  }
}

TEST_CASE("lambda + 1/lambda reproduces the trace across twelve decades") {
  // The identity is exact algebra; at the top of the stated mu range its
  // 1e-10 absolute window sits below the double/extended ulp, so the scalar
  // template is exercised at 128-bit precision over the full range.
  for (__float128 mu = 1.0Q; mu <= 1.0e12Q; mu *= 10.0Q) {
    const __float128 trace = mu + 2.0Q;
    const __float128 lambda = spectral_radius_from_trace<__float128>(trace);
    const __float128 defect = lambda + 1.0Q / lambda - trace;
    CHECK(static_cast<double>(fabsq(defect)) <= 1e-10);
  }
  // Extended precision covers the identity up to mu ~ 1e7 on its own.
  for (long double mu = 1.0L; mu <= 1.0e7L; mu *= 10.0L) {
    const long double trace = mu + 2.0L;
    const long double lambda = spectral_radius_from_trace<long double>(trace);
    CHECK(std::abs(static_cast<double>(lambda + 1.0L / lambda - trace)) <= 1e-10);
  }
}
