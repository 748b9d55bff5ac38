#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vibronic/franck_condon.hpp"

using namespace vibronic;

TEST_CASE("ground-state overlaps") {
  CHECK(franck_condon_1d(0, 0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  const double l = 1.9222;
  CHECK(franck_condon_1d(0, 0, l) == doctest::Approx(std::exp(-0.5 * l * l)).epsilon(1e-12));
  CHECK(franck_condon_1d(0, 0, l) == doctest::Approx(oracle::fc_quadrature(0, 0, l)).epsilon(1e-11));
}

TEST_CASE("single-quantum overlap and mirror symmetry") {
  for (double l : {-2.3, -0.7, 0.31, 1.9222}) {
    CHECK(franck_condon_1d(1, 0, l) == doctest::Approx(l * std::exp(-0.5 * l * l)).epsilon(1e-12));
    for (int m = 0; m < 8; ++m)
      for (int n = 0; n < 8; ++n)
        CHECK(std::abs(franck_condon_1d(m, n, l)) ==
              doctest::Approx(std::abs(franck_condon_1d(n, m, -l))).epsilon(1e-12));
  }
}

TEST_CASE("quadrature oracle agreement over a lambda sweep") {
  for (double l : {-3.0, -1.2, 0.45, 2.0, 3.0})
    for (int m = 0; m <= 12; ++m)
      for (int n = 0; n <= 12; ++n)
        CHECK(std::abs(franck_condon_1d(m, n, l) - oracle::fc_quadrature(m, n, l)) < 1e-10);
}

TEST_CASE("quanta cap enforced") {
  CHECK_THROWS_AS(franck_condon_1d(513, 0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(franck_condon_1d(-1, 0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(franck_condon_1d(0, 0, std::nan("")), std::invalid_argument);
}

TEST_CASE("two-mode factor at the default displacement") {
  const double delta = std::sqrt(3.695);
  CHECK(franck_condon_2d(0, 0, 0, 0, delta) ==
        doctest::Approx(std::exp(-delta * delta)).epsilon(1e-12));
  CHECK(franck_condon_2d(0, 0, 0, 0, delta) ==
        doctest::Approx(oracle::fc2d_quadrature(0, 0, 0, 0, delta)).epsilon(1e-10));
  CHECK(franck_condon_2d(2, 1, 3, 4, delta) ==
        doctest::Approx(oracle::fc2d_quadrature(2, 1, 3, 4, delta)).epsilon(1e-10));
}

TEST_CASE("undisplaced overlap is the identity") {
  for (int mp = 0; mp < 4; ++mp)
    for (int np = 0; np < 4; ++np)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          CHECK(franck_condon_2d(mp, np, m, n, 0.0) ==
                doctest::Approx((mp == m && np == n) ? 1.0 : 0.0).epsilon(1e-14));
}

TEST_CASE("acceptor-side completeness at large cutoff") {
  const double delta = std::sqrt(3.695);
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      double sum = 0.0;
      for (int mp = 0; mp < 60; ++mp) {
        const double fa = franck_condon_1d(mp, m, -delta);
        for (int np = 0; np < 60; ++np) {
          const double fb = franck_condon_1d(np, n, delta);
          sum += fa * fa * fb * fb;
        }
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("displacement matrix columns match scalar evaluation") {
  const Eigen::MatrixXd d = displacement_matrix(10, 0.8);
  for (int m = 0; m < 10; ++m)
    for (int n = 0; n < 10; ++n)
      CHECK(d(m, n) == doctest::Approx(franck_condon_1d(m, n, 0.8)).epsilon(1e-14));
}
