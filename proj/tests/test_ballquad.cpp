#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bergman/ballquad.hpp"
#include "bergman/spectral.hpp"

using namespace bergman;
using namespace bergman::ballquad;

TEST_CASE("grid weights are normalized and nodes interior") {
  for (int d : {1, 2, 3}) {
    auto g = make_ball_grid(d, 32, 48, 24);
    CHECK(g.weight_sum() == doctest::Approx(1.0).epsilon(1e-12));
    g.for_each_node([&](std::complex<double> w1, double rho, double w) {
      CHECK(rho < 1.0);
      CHECK(rho > 0.0);
      CHECK(std::abs(w1) <= rho + 1e-15);
      CHECK(w > 0.0);
    });
  }
}

TEST_CASE("gauss_legendre_01 integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre_01(8, x, w);
  for (int k = 0; k <= 15; ++k) {  // exact through degree 2n-1
    double s = 0;
    for (int i = 0; i < 8; ++i) s += w[i] * std::pow(x[i], k);
    CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
  }
}

TEST_CASE("fr_series reference values") {
  // r = 0: Gamma(1+d)Gamma(1+t)/Gamma(1+d+t)
  CHECK(fr_series({2.3, 1.0, 0.0}, 2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // d=1, t=0, c=1, r=1 -> 4/pi
  CHECK(fr_series({1.0, 0.0, 1.0}, 1) ==
        doctest::Approx(4.0 / M_PI).epsilon(1e-10));
  // d=2, t=0, c=1, r=1 -> Gamma(3)Gamma(1)Gamma(2)/Gamma(2.5)^2
  CHECK(fr_series({1.0, 0.0, 1.0}, 2) ==
        doctest::Approx(2.0 / std::pow(std::tgamma(2.5), 2)).epsilon(1e-10));
  CHECK_THROWS_AS(fr_series({2.5, 0.0, 1.0}, 1), DivergenceError);
  CHECK_THROWS_AS(fr_series({1.0, -1.5, 0.5}, 1), ParameterError);
}

TEST_CASE("fr_boundary closed form") {
  auto b0 = fr_boundary(0.0, 0.0, 2);
  REQUIRE(b0.finite);
  CHECK(b0.value == doctest::Approx(1.0).epsilon(1e-12));

  auto b1 = fr_boundary(1.0, 0.0, 1);
  REQUIRE(b1.finite);
  CHECK(b1.value == doctest::Approx(4.0 / M_PI).epsilon(1e-10));

  CHECK_FALSE(fr_boundary(2.0, 0.0, 1).finite);
  CHECK_FALSE(fr_boundary(5.0, 1.0, 2).finite);

  // boundary value agrees with the series at r = 1 (beta = c, gamma = t = 0)
  auto bb = fr_boundary(1.3, 0.0, 2);
  REQUIRE(bb.finite);
  CHECK(bb.value ==
        doctest::Approx(fr_series({1.3, 0.0, 1.0}, 2)).epsilon(1e-9));
}

TEST_CASE("fr_quadrature matches fr_series on the 12-case sweep") {
  for (int d : {1, 2}) {
    auto grid = make_ball_grid(d);
    for (double c : {0.5, static_cast<double>(d), d + 1.5}) {
      for (double t : {0.0, 1.0}) {
        for (double r : {0.3, 0.8}) {
          const double qv = fr_quadrature(c, t, r, grid);
          const double sv = fr_series({c, t, r}, d, 1e-12);
          CHECK(std::abs(qv / sv - 1.0) < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("fr_quadrature constant-kernel case") {
  // c+t = 0: integral is Gamma(d+1)Gamma(t+1)/Gamma(d+1+t)
  auto grid = make_ball_grid(2, 64, 64, 32);
  const double v = fr_quadrature(-1.0, 1.0, 0.4, grid);
  CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("fr_quadrature near-boundary refusal") {
  auto grid = make_ball_grid(1, 16, 32);
  CHECK_THROWS_AS(fr_quadrature(1.0, 0.0, 0.9995, grid), ParameterError);
}

TEST_CASE("asymptotic classification") {
  for (int d : {1, 2}) {
    for (double t : {0.0, 1.0}) {
      auto bd = fr_asymptotic_classify(static_cast<double>(d), t, d);
      CHECK(bd.kind == Asymptotic::Bounded);

      auto lg = fr_asymptotic_classify(d + 1.0, t, d);
      CHECK(lg.kind == Asymptotic::Log);

      auto pw = fr_asymptotic_classify(d + 2.0, t, d);
      CHECK(pw.kind == Asymptotic::Power);
      CHECK(std::abs(pw.exponent - (-1.0)) < 0.03);
    }
  }
}

TEST_CASE("i_alpha values and monotonicity") {
  // z_radius = 0: 1 - r^{2d} for any alpha
  CHECK(i_alpha(0.7, 0.5, 0.0, 2) ==
        doctest::Approx(1.0 - std::pow(0.5, 4)).epsilon(1e-12));
  // r = 0, z = 1: Gamma(d+1)Gamma(d+1-alpha)/Gamma(d+1-alpha/2)^2
  const double alpha = 0.8;
  const int d = 2;
  const double cap = std::tgamma(d + 1.0) * std::tgamma(d + 1.0 - alpha) /
                     std::pow(std::tgamma(d + 1.0 - alpha / 2.0), 2);
  CHECK(i_alpha(alpha, 0.0, 1.0, d) == doctest::Approx(cap).epsilon(1e-9));

  // full-ball value agrees with fr_series at c = alpha, t = 0
  for (double z : {0.2, 0.6, 0.9}) {
    CHECK(i_alpha(alpha, 0.0, z, d) ==
          doctest::Approx(fr_series({alpha, 0.0, z}, d)).epsilon(1e-9));
  }

  // non-increasing in r, non-decreasing in z_radius, bounded by the cap
  double prev = i_alpha(alpha, 0.0, 0.8, d);
  for (double r : {0.2, 0.4, 0.6, 0.8}) {
    const double v = i_alpha(alpha, r, 0.8, d);
    CHECK(v <= prev + 1e-14);
    CHECK(v <= cap + 1e-12);
    prev = v;
  }
  CHECK(i_alpha(alpha, 0.3, 0.3, d) <= i_alpha(alpha, 0.3, 0.7, d));
}

TEST_CASE("berezin closed form") {
  CHECK(berezin_closed(0.7, 2, 0.0) == 1.0);
  CHECK(berezin_closed(3.0, 2, 0.6) == doctest::Approx(1.0));
  CHECK(berezin_closed(0.5, 1, 0.6) ==
        doctest::Approx(std::pow(0.64, 1.5)).epsilon(1e-13));
}

TEST_CASE("berezin quadrature matches closed form") {
  for (int d : {1, 2}) {
    auto grid = make_ball_grid(d);
    for (double alpha : {-0.5, 1.0, d + 0.5}) {
      for (double r : {0.0, 0.5, 0.9}) {
        const double qv = berezin_quadrature(alpha, d, r, grid);
        const double cv = berezin_closed(alpha, d, r);
        CHECK(std::abs(qv / cv - 1.0) < 1e-6);
      }
    }
  }
}

TEST_CASE("trace formula") {
  CHECK(trace_formula(0.0, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_formula(0.5, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(trace_formula(-1.0, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(trace_formula(1.0, 1), NotTraceClass);
}

TEST_CASE("trace formula equals the Schatten-1 sum") {
  struct Case {
    int d;
    double alpha;
  };
  for (const Case c : {Case{1, 0.5}, Case{2, 0.3}, Case{3, -0.7}}) {
    const auto params = spectral::OperatorParams::make(c.alpha, c.d);
    const auto sum = spectral::schatten_sum(params, 1.0);
    REQUIRE(sum.converged);
    CHECK(std::abs(sum.value / trace_formula(c.alpha, c.d) - 1.0) < 1e-8);
  }
}

TEST_CASE("probe norm") {
  // z = 0: (1-0)^s * J at r=0 = Gamma(1+d)Gamma(1)/Gamma(1+d) = 1
  CHECK(probe_norm(1.0, 1, 4.0, 2.0, 2.0 * (1.0 - 0.25) * 2.0, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-10));

  // d=1, alpha=1, p=4, q=2: s = q(1-1/p)(d+1) = 3 -> compact side, decays
  {
    double prev = 1e300;
    for (double r : {0.9, 0.99, 0.999}) {
      const double v = probe_norm(1.0, 1, 4.0, 2.0, 3.0, r);
      CHECK(v < prev);
      prev = v;
    }
    CHECK(prev < 0.05);
  }

  // d=1, alpha=1.5, p=2, q=4, s=4: 1/q equals 1/p + alpha/(d+1) - 1, so the
  // prefactor exactly cancels the power growth and the norm stays bounded
  // away from 0 along the sweep.
  {
    for (double r : {0.9, 0.99, 0.999}) {
      CHECK(probe_norm(1.5, 1, 2.0, 4.0, 4.0, r) > 0.1);
    }
  }

  CHECK_THROWS_AS(probe_norm(1.0, 1, 4.0, 2.0, 3.1, 0.5), ParameterError);
}
