#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "bergman/classify.hpp"

using namespace bergman;
using namespace bergman::classify;

namespace {

Exponent<double> fe(double v) { return Exponent<double>::finite(v); }
const Exponent<double> kInf = Exponent<double>::infinity();

struct GoldenRow {
  double alpha;
  int d;
  Exponent<double> p, q;
  bool compact;
  Tri bounded;
  const char* rule;
};

struct RationalRow {
  const char* alpha;
  int d;
  const char* p;
  const char* q;
  bool compact;
  Tri bounded;
  const char* rule;
};

}  // namespace

TEST_CASE("golden verdict table") {
  const std::vector<GoldenRow> rows = {
      {-1.0, 3, fe(1), kInf, true, Tri::Yes, "Prop fink (1)"},
      {0.0, 1, fe(2), fe(2), true, Tri::Yes, "Prop fink (1)"},
      {-0.5, 2, kInf, kInf, true, Tri::Yes, "Prop fink (1)"},
      {3.0, 1, fe(2), fe(2), false, Tri::No, "Cor kcor"},
      {4.5, 2, kInf, fe(1), false, Tri::No, "Cor kcor"},
      {2.5, 1, kInf, fe(1), true, Tri::Yes, "Theorem 1 (5b)"},
      {2.5, 1, kInf, fe(3), false, Tri::No, "Theorem 1"},
      {2.5, 1, fe(4), fe(1), true, Tri::Yes, "Theorem 1 (5a)"},
      {2.5, 1, fe(4), fe(2), false, Tri::No, "Theorem 1"},
      {2.5, 1, fe(2), fe(1), false, Tri::No, "Theorem 1"},
      {3.0, 2, fe(2), fe(2), false, Tri::Unknown, "Prop kd1"},
      {3.0, 2, fe(3), fe(2), true, Tri::Yes, "Prop kd1"},
      {3.0, 2, kInf, fe(5), true, Tri::Yes, "Prop kd1"},
      {3.0, 2, kInf, kInf, false, Tri::Unknown, "Prop kd1"},
      {1.0, 1, fe(1), fe(1), true, Tri::Yes, "Theorem 2 (3a)"},
      {1.0, 1, fe(1), kInf, false, Tri::Unknown, "Theorem 2"},
      {1.0, 1, fe(1.5), fe(3), true, Tri::Yes, "Theorem 2 (3b)"},
      {1.0, 1, fe(1.5), fe(7), false, Tri::Unknown, "Theorem 2"},
      {1.0, 1, fe(2), fe(100), true, Tri::Yes, "Theorem 2 (3c)"},
      {1.0, 1, fe(2), kInf, false, Tri::Unknown, "Theorem 2"},
      {1.0, 1, fe(3), kInf, true, Tri::Yes, "Theorem 2 (3d)"},
      {0.5, 2, kInf, kInf, true, Tri::Yes, "Theorem 2 (3d)"},
  };
  for (const auto& r : rows) {
    for (Kind kind : {Kind::K, Kind::Kplus}) {
      const auto v = compactness(r.alpha, r.d, r.p, r.q, kind);
      CAPTURE(r.alpha);
      CAPTURE(r.d);
      CHECK(v.compact == r.compact);
      CHECK(v.bounded == r.bounded);
      CHECK(v.rule == r.rule);
    }
  }
}

TEST_CASE("golden rational boundary rows") {
  // Rows sitting exactly on (or one step inside) the strict inequalities,
  // evaluated in exact arithmetic.
  const std::vector<RationalRow> rows = {
      {"5/2", 1, "inf", "2", false, Tri::No, "Theorem 1"},
      {"5/2", 1, "2", "1", false, Tri::No, "Theorem 1"},
      {"5/2", 1, "4", "4/3", false, Tri::No, "Theorem 1"},
      {"5/2", 1, "4", "5/4", true, Tri::Yes, "Theorem 1 (5a)"},
      {"1", 1, "1", "2", false, Tri::Unknown, "Theorem 2"},
      {"1", 1, "3/2", "6", false, Tri::Unknown, "Theorem 2"},
      {"1", 1, "3/2", "5", true, Tri::Yes, "Theorem 2 (3b)"},
      {"3/2", 2, "2", "1000000", true, Tri::Yes, "Theorem 2 (3c)"},
      {"2", 1, "2", "2", false, Tri::Unknown, "Prop kd1"},
      {"2", 1, "inf", "2", true, Tri::Yes, "Prop kd1"},
  };
  for (const auto& r : rows) {
    const auto v = compactness(parse_rational(r.alpha), r.d,
                               parse_exponent(r.p), parse_exponent(r.q),
                               Kind::Kplus);
    CAPTURE(r.alpha);
    CAPTURE(r.p);
    CAPTURE(r.q);
    CHECK(v.compact == r.compact);
    CHECK(v.bounded == r.bounded);
    CHECK(v.rule == r.rule);
  }
}

TEST_CASE("compact region is monotone in (p up, q down)") {
  for (int d : {1, 2}) {
    for (const Rational alpha : {Rational(1, 2), Rational(d + 1)}) {
      // 20 x 20 rational lattice p, q in {1, 5/4, ..., 23/4}
      std::vector<Exponent<Rational>> vals;
      for (int k = 0; k < 20; ++k) {
        vals.push_back(Exponent<Rational>::finite(Rational(4 + k, 4)));
      }
      bool grid[20][20];
      for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
          grid[i][j] =
              compactness(alpha, d, vals[i], vals[j], Kind::K).compact;
        }
      }
      for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
          if (!grid[i][j]) continue;
          for (int i2 = i; i2 < 20; ++i2) {
            for (int j2 = j; j2 >= 0; --j2) {
              CHECK(grid[i2][j2]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("verdicts agree for both kernel kinds") {
  std::vector<Exponent<double>> exps = {fe(1), fe(1.5), fe(2), fe(4), kInf};
  for (int d : {1, 2, 3}) {
    for (double alpha : {-1.0, 0.5, d + 1.0, d + 1.5, d + 2.5}) {
      for (const auto& p : exps) {
        for (const auto& q : exps) {
          const auto a = compactness(alpha, d, p, q, Kind::K);
          const auto b = compactness(alpha, d, p, q, Kind::Kplus);
          CHECK(a.compact == b.compact);
          CHECK(a.bounded == b.bounded);
          CHECK(a.rule == b.rule);
          if (a.compact) CHECK(a.bounded == Tri::Yes);
        }
      }
    }
  }
}

TEST_CASE("boundary strictness flips the verdict") {
  struct Pt {
    const char* alpha;
    int d;
    const char* p_in;
    const char* q_in;  // strictly inside: compact
    const char* p_on;
    const char* q_on;  // on the boundary: not compact
  };
  const std::vector<Pt> pts = {
      // q -> 1/(alpha-d-1) at p = inf
      {"5/2", 1, "inf", "19/10", "inf", "2"},
      {"7/3", 1, "inf", "2", "inf", "3"},
      // p -> 1/(d+2-alpha) with q far inside
      {"5/2", 1, "21/10", "1", "2", "1"},
      {"7/2", 2, "21/10", "1", "2", "1"},
      // 1/q -> 1/p + alpha - (d+1)
      {"5/2", 1, "4", "5/4", "4", "4/3"},
      {"13/4", 2, "4", "19/10", "4", "2"},
      // q -> (d+1)/alpha at p = 1
      {"1", 1, "1", "19/10", "1", "2"},
      {"3/2", 2, "1", "19/10", "1", "2"},
      // 1/q -> 1/p + alpha/(d+1) - 1
      {"1", 1, "3/2", "5", "3/2", "6"},
      {"2", 2, "3/2", "2", "3/2", "3"},
  };
  for (const auto& pt : pts) {
    const auto alpha = parse_rational(pt.alpha);
    const auto inside = compactness(alpha, pt.d, parse_exponent(pt.p_in),
                                    parse_exponent(pt.q_in), Kind::K);
    const auto boundary = compactness(alpha, pt.d, parse_exponent(pt.p_on),
                                      parse_exponent(pt.q_on), Kind::K);
    CAPTURE(pt.alpha);
    CAPTURE(pt.q_on);
    CHECK(inside.compact);
    CHECK_FALSE(boundary.compact);
  }
}

TEST_CASE("schatten_macaev agrees with the spectral module") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> da(-3.0, 0.8);
  std::uniform_real_distribution<double> dp(0.1, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const double alpha = da(rng) + (rng() % 2 ? d : 0.0);  // < d + 0.8
    const double p = dp(rng);
    const auto v = schatten_macaev(alpha, d, p);
    const auto params = spectral::OperatorParams::make(alpha, d);
    CHECK(v.schatten == spectral::schatten_member(params, p));
    CHECK(v.macaev == spectral::macaev_member(params, p));
    CHECK(v.hausdorff_dim ==
          doctest::Approx(spectral::hausdorff_dimension(params)));
    CHECK_FALSE(v.not_compact);
    if (v.schatten) CHECK(v.macaev);
    if (params.regime == spectral::Regime::Regular) {
      CHECK(v.schatten == (p > v.hausdorff_dim));
      CHECK(v.macaev == (p >= v.hausdorff_dim));
    } else {
      CHECK(v.schatten);
      CHECK(v.hausdorff_dim == 0.0);
    }
  }
  const auto sup = schatten_macaev(4.0, 2, 2.0);
  CHECK(sup.not_compact);
  CHECK_FALSE(sup.schatten);
  CHECK_FALSE(sup.macaev);
}

TEST_CASE("schatten_macaev reference rows") {
  const auto a = schatten_macaev(1.0, 2, 1.0);
  CHECK_FALSE(a.schatten);
  CHECK(a.macaev);
  CHECK(a.hausdorff_dim == doctest::Approx(1.0));

  const auto b = schatten_macaev(0.5, 1, 1.0);
  CHECK(b.schatten);
  CHECK(b.macaev);
  CHECK(b.hausdorff_dim == doctest::Approx(2.0 / 3.0));

  const auto c = schatten_macaev(-2.0, 3, 0.01);
  CHECK(c.schatten);
  CHECK(c.macaev);
  CHECK(c.hausdorff_dim == 0.0);
}

TEST_CASE("exponent and rational parsing") {
  CHECK(parse_exponent("inf").is_inf);
  CHECK(parse_exponent("2").value == Rational(2));
  CHECK(parse_exponent("3/2").value == Rational(3, 2));
  CHECK(parse_exponent("1.25").value == Rational(5, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(parse_exponent("0.5"), ParameterError);
  CHECK_THROWS_AS(parse_exponent("abc"), ParameterError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
  CHECK_THROWS_AS(parse_rational("2..5"), ParameterError);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(compactness(1.0, 0, fe(2), fe(2), Kind::K),
                  ParameterError);
  CHECK_THROWS_AS(compactness(1.0, 1, fe(0.5), fe(2), Kind::K),
                  ParameterError);
  CHECK_THROWS_AS(schatten_macaev(0.5, 1, -1.0), ParameterError);
}
