#include "bergman/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "bergman/ballquad.hpp"
#include "bergman/classify.hpp"
#include "bergman/operators.hpp"
#include "bergman/spectral.hpp"

namespace bergman::verify {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void push(std::vector<CheckResult>& out, const std::string& name,
          double value, double target, double tol, std::string detail = "") {
  CheckResult c;
  c.name = name;
  c.value = value;
  c.target = target;
  c.tolerance = tol;
  c.pass = std::isfinite(value) && std::abs(value - target) <= tol;
  c.detail = std::move(detail);
  out.push_back(std::move(c));
}

void push_bool(std::vector<CheckResult>& out, const std::string& name,
               bool ok, std::string detail = "") {
  CheckResult c;
  c.name = name;
  c.value = ok ? 1.0 : 0.0;
  c.target = 1.0;
  c.tolerance = 0.0;
  c.pass = ok;
  c.detail = std::move(detail);
  out.push_back(std::move(c));
}

void push_runtime(std::vector<CheckResult>& out, const std::string& name,
                  double seconds, double budget) {
  CheckResult c;
  c.name = name;
  c.value = seconds;
  c.target = 0.0;
  c.tolerance = budget;
  c.pass = seconds < budget;
  out.push_back(std::move(c));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::vector<CheckResult> criterion_spectrum_oracle() {
  std::vector<CheckResult> out;
  for (double alpha : {0.5, 1.0}) {
    const auto t0 = Clock::now();
    const auto params = spectral::OperatorParams::make(alpha, 1);
    const auto cmp = operators::spectrum_compare(params, {2, 4, 8}, 5);
    const std::string tag = "nystrom.d1.alpha" + fmt(alpha);
    push_bool(out, tag + ".nodes_ge_2048", cmp.grid_nodes.back() >= 2048,
              "final grid has " + fmt(double(cmp.grid_nodes.back())) +
                  " nodes");
    push(out, tag + ".final_error", cmp.max_errors.back(), 0.0, 1e-3,
         "top-5 eigenvalue error on the finest grid");
    bool halving = true;
    for (std::size_t i = 1; i < cmp.max_errors.size(); ++i) {
      if (cmp.max_errors[i - 1] > 1e-6 &&
          cmp.max_errors[i] > cmp.max_errors[i - 1] / 2.0) {
        halving = false;
      }
    }
    push_bool(out, tag + ".error_halving", halving,
              "errors: " + fmt(cmp.max_errors[0]) + ", " +
                  fmt(cmp.max_errors[1]) + ", " + fmt(cmp.max_errors[2]));
    push_runtime(out, tag + ".runtime_s", elapsed(t0), 120.0);
  }
  return out;
}

std::vector<CheckResult> criterion_trace_identity() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  struct Case {
    int d;
    double alpha;
  };
  for (const Case c : {Case{1, 0.5}, Case{2, 0.3}, Case{3, -0.7}}) {
    const auto params = spectral::OperatorParams::make(c.alpha, c.d);
    const auto sum = spectral::schatten_sum(params, 1.0);
    const double tr = ballquad::trace_formula(c.alpha, c.d);
    const std::string tag =
        "trace.d" + fmt(double(c.d)) + ".alpha" + fmt(c.alpha);
    push_bool(out, tag + ".converged", sum.converged);
    push(out, tag + ".relative_error",
         sum.converged ? sum.value / tr - 1.0 : 1.0, 0.0, 1e-8,
         "sum=" + fmt(sum.value) + " closed=" + fmt(tr));
  }
  const auto p1 = spectral::OperatorParams::make(0.5, 1);
  push(out, "trace.d1.alpha0.5.equals_two",
       spectral::schatten_sum(p1, 1.0).value, 2.0, 1e-8);
  push_runtime(out, "trace.runtime_s", elapsed(t0), 5.0);
  return out;
}

std::vector<CheckResult> criterion_dixmier() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  for (int d : {1, 2, 3}) {
    const auto params = spectral::OperatorParams::make(1.0, d);
    const auto acc = spectral::dixmier_trace_estimate(params, 1000000);
    push(out, "dixmier.alpha1.d" + fmt(double(d)), acc.extrapolated, 1.0,
         0.01);
  }
  const auto half = spectral::OperatorParams::make(0.5, 1);
  push(out, "dixmier.alpha0.5.d1",
       spectral::dixmier_trace_estimate(half, 1000000).extrapolated, 0.0,
       0.01);
  push_runtime(out, "dixmier.runtime_s", elapsed(t0), 10.0);
  return out;
}

std::vector<CheckResult> criterion_schatten_macaev() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  for (int d : {1, 2}) {
    for (double alpha : {0.5, 1.0, -1.3}) {
      const auto params = spectral::OperatorParams::make(alpha, d);
      const double thr = spectral::schatten_threshold(params);
      const std::string tag =
          "schatten.d" + fmt(double(d)) + ".alpha" + fmt(alpha);
      push_bool(out, tag + ".diverges_at_threshold",
                !spectral::schatten_sum(params, thr).converged,
                "threshold p=" + fmt(thr));
      push_bool(out, tag + ".converges_above",
                spectral::schatten_sum(params, thr + 0.05).converged);
      const auto stream = spectral::singular_values(params, 10001);
      const double slope = spectral::decay_exponent_fit(stream, 10000);
      const double expect = -(d + 1.0 - alpha) / d;
      push(out, tag + ".decay_slope", slope / expect, 1.0, 0.02,
           "fitted " + fmt(slope) + " expected " + fmt(expect));
    }
  }
  push_runtime(out, "schatten.runtime_s", elapsed(t0), 30.0);
  return out;
}

std::vector<CheckResult> criterion_forelli_rudin() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  for (int d : {1, 2}) {
    const auto grid = ballquad::make_ball_grid(d);
    for (double c : {0.5, static_cast<double>(d), d + 1.5}) {
      for (double t : {0.0, 1.0}) {
        for (double r : {0.3, 0.8}) {
          const double qv = ballquad::fr_quadrature(c, t, r, grid);
          const double sv = ballquad::fr_series({c, t, r}, d, 1e-12);
          push(out,
               "frudin.d" + fmt(double(d)) + ".c" + fmt(c) + ".t" + fmt(t) +
                   ".r" + fmt(r),
               qv / sv - 1.0, 0.0, 1e-6);
        }
      }
    }
  }
  const auto b = ballquad::fr_boundary(1.0, 0.0, 1);
  push_bool(out, "frudin.boundary.finite", b.finite);
  push(out, "frudin.boundary.value", b.value, 4.0 / M_PI, 1e-10);
  for (int d : {1, 2}) {
    const std::string tag = "frudin.asymptotic.d" + fmt(double(d));
    push_bool(out, tag + ".bounded",
              ballquad::fr_asymptotic_classify(double(d), 0.0, d).kind ==
                  ballquad::Asymptotic::Bounded);
    push_bool(out, tag + ".log",
              ballquad::fr_asymptotic_classify(d + 1.0, 0.0, d).kind ==
                  ballquad::Asymptotic::Log);
    const auto pw = ballquad::fr_asymptotic_classify(d + 2.0, 0.0, d);
    push_bool(out, tag + ".power",
              pw.kind == ballquad::Asymptotic::Power);
    push(out, tag + ".power_exponent", pw.exponent, -1.0, 0.03);
  }
  push_runtime(out, "frudin.runtime_s", elapsed(t0), 60.0);
  return out;
}

std::vector<CheckResult> criterion_berezin() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  for (int d : {1, 2}) {
    const auto grid = ballquad::make_ball_grid(d);
    for (double alpha : {-0.5, 1.0, d + 0.5}) {
      for (double r : {0.0, 0.5, 0.9}) {
        const double qv = ballquad::berezin_quadrature(alpha, d, r, grid);
        const double cv = ballquad::berezin_closed(alpha, d, r);
        push(out,
             "berezin.d" + fmt(double(d)) + ".alpha" + fmt(alpha) + ".r" +
                 fmt(r),
             qv / cv - 1.0, 0.0, 1e-6);
      }
    }
  }
  push_runtime(out, "berezin.runtime_s", elapsed(t0), 60.0);
  return out;
}

std::vector<CheckResult> criterion_finite_rank() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  struct Case {
    int N;
    int d;
  };
  for (const Case c : {Case{0, 1}, Case{1, 1}, Case{1, 2}, Case{2, 1}}) {
    const auto grid = c.d == 1 ? operators::make_point_grid(1, 10, 20)
                               : operators::make_point_grid(2, 6, 8, 4);
    std::uint64_t expect = 1;
    for (int i = 1; i <= c.d; ++i) expect = expect * (c.N + i) / i;
    const std::string tag =
        "finite_rank.N" + fmt(double(c.N)) + ".d" + fmt(double(c.d));
    const auto rk = operators::finite_rank_check(
        c.N, c.d, operators::KernelKind::Holomorphic, grid);
    push(out, tag + ".holomorphic", double(rk), double(expect), 0.0);
    const auto rka = operators::finite_rank_check(
        c.N, c.d, operators::KernelKind::Absolute, grid);
    push_bool(out, tag + ".absolute_le_square", rka <= expect * expect,
              "rank " + fmt(double(rka)) + " bound " +
                  fmt(double(expect * expect)));
  }
  push_runtime(out, "finite_rank.runtime_s", elapsed(t0), 60.0);
  return out;
}

std::vector<CheckResult> criterion_radial_diff() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dc(-1.0, 1.0);
  std::uniform_real_distribution<double> dst(-0.9, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double s = dst(rng), t = dst(rng);
    operators::CoefficientVector f;
    for (const auto& idx : operators::monomials_up_to_degree(1, 20)) {
      f.coeffs[idx] = {dc(rng), dc(rng)};
    }
    const auto back = operators::radial_diff_apply(
        s + t, -t, 1, operators::radial_diff_apply(s, t, 1, f));
    for (const auto& [idx, cv] : f.coeffs) {
      worst = std::max(worst, std::abs(back.coeffs.at(idx) - cv));
    }
  }
  push(out, "radial_diff.inverse_composition", worst, 0.0, 1e-12,
       "50 random degree-20 coefficient vectors");

  bool exact = true;
  for (double alpha : {0.5, 1.0}) {
    const auto params = spectral::OperatorParams::make(alpha, 2);
    for (const auto& [idx, value] : operators::galerkin_diagonal(params, 8)) {
      if (value != spectral::eigenvalue(params, idx.degree())) exact = false;
    }
  }
  push_bool(out, "radial_diff.monomial_action_exact", exact);

  for (int N : {0, 1, 2}) {
    const auto rep = operators::zhz_check(0.4, 0.9, N, 50, 2);
    push(out, "radial_diff.zhz.N" + fmt(double(N)), rep.max_residual, 0.0,
         1e-10);
  }
  push_runtime(out, "radial_diff.runtime_s", elapsed(t0), 5.0);
  return out;
}

std::vector<CheckResult> criterion_classifier_table() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  using classify::Kind;
  using classify::Tri;
  using DExp = classify::Exponent<double>;
  const auto fe = [](double v) { return DExp::finite(v); };
  const DExp inf = DExp::infinity();

  struct Row {
    double alpha;
    int d;
    DExp p, q;
    bool compact;
    Tri bounded;
    const char* rule;
  };
  const std::vector<Row> rows = {
      {-1.0, 3, fe(1), inf, true, Tri::Yes, "Prop fink (1)"},
      {0.0, 1, fe(2), fe(2), true, Tri::Yes, "Prop fink (1)"},
      {-0.5, 2, inf, inf, true, Tri::Yes, "Prop fink (1)"},
      {3.0, 1, fe(2), fe(2), false, Tri::No, "Cor kcor"},
      {4.5, 2, inf, fe(1), false, Tri::No, "Cor kcor"},
      {2.5, 1, inf, fe(1), true, Tri::Yes, "Theorem 1 (5b)"},
      {2.5, 1, inf, fe(3), false, Tri::No, "Theorem 1"},
      {2.5, 1, fe(4), fe(1), true, Tri::Yes, "Theorem 1 (5a)"},
      {2.5, 1, fe(4), fe(2), false, Tri::No, "Theorem 1"},
      {3.0, 2, fe(2), fe(2), false, Tri::Unknown, "Prop kd1"},
      {3.0, 2, fe(3), fe(2), true, Tri::Yes, "Prop kd1"},
      {3.0, 2, inf, fe(5), true, Tri::Yes, "Prop kd1"},
      {3.0, 2, inf, inf, false, Tri::Unknown, "Prop kd1"},
      {1.0, 1, fe(1), fe(1), true, Tri::Yes, "Theorem 2 (3a)"},
      {1.0, 1, fe(1), inf, false, Tri::Unknown, "Theorem 2"},
      {1.0, 1, fe(1.5), fe(3), true, Tri::Yes, "Theorem 2 (3b)"},
      {1.0, 1, fe(1.5), fe(7), false, Tri::Unknown, "Theorem 2"},
      {1.0, 1, fe(2), fe(100), true, Tri::Yes, "Theorem 2 (3c)"},
      {1.0, 1, fe(2), inf, false, Tri::Unknown, "Theorem 2"},
      {1.0, 1, fe(3), inf, true, Tri::Yes, "Theorem 2 (3d)"},
  };
  int idx = 0;
  for (const auto& r : rows) {
    for (Kind kind : {Kind::K, Kind::Kplus}) {
      const auto v = classify::compactness(r.alpha, r.d, r.p, r.q, kind);
      const bool ok = v.compact == r.compact && v.bounded == r.bounded &&
                      v.rule == r.rule;
      push_bool(out,
                "classify.row" + fmt(double(idx)) +
                    (kind == Kind::K ? ".K" : ".Kplus"),
                ok, "alpha=" + fmt(r.alpha) + " d=" + fmt(double(r.d)));
    }
    ++idx;
  }

  struct RRow {
    const char* alpha;
    int d;
    const char* p;
    const char* q;
    bool compact;
    const char* rule;
  };
  const std::vector<RRow> rrows = {
      {"5/2", 1, "inf", "2", false, "Theorem 1"},
      {"5/2", 1, "2", "1", false, "Theorem 1"},
      {"5/2", 1, "4", "4/3", false, "Theorem 1"},
      {"5/2", 1, "4", "5/4", true, "Theorem 1 (5a)"},
      {"1", 1, "1", "2", false, "Theorem 2"},
      {"1", 1, "3/2", "6", false, "Theorem 2"},
      {"1", 1, "3/2", "5", true, "Theorem 2 (3b)"},
      {"3/2", 2, "2", "1000000", true, "Theorem 2 (3c)"},
      {"2", 1, "2", "2", false, "Prop kd1"},
      {"2", 1, "inf", "2", true, "Prop kd1"},
  };
  int ridx = 0;
  for (const auto& r : rrows) {
    const auto v = classify::compactness(
        classify::parse_rational(r.alpha), r.d, classify::parse_exponent(r.p),
        classify::parse_exponent(r.q), Kind::Kplus);
    push_bool(out, "classify.rational_row" + fmt(double(ridx)),
              v.compact == r.compact && v.rule == r.rule,
              std::string("alpha=") + r.alpha + " p=" + r.p + " q=" + r.q);
    ++ridx;
  }
  push_runtime(out, "classify.runtime_s", elapsed(t0), 1.0);
  return out;
}

std::vector<CheckResult> criterion_funo_ratio() {
  std::vector<CheckResult> out;
  const auto t0 = Clock::now();
  struct Case {
    int d;
    double alpha;
    double p;
  };
  for (const Case c : {Case{1, 0.5, 1.2}, Case{2, 1.5, 1.1}}) {
    const auto params = spectral::OperatorParams::make(c.alpha, c.d);
    const auto rr = spectral::funo_ratio_range(params, c.p, 100000);
    const std::string tag =
        "funo.d" + fmt(double(c.d)) + ".alpha" + fmt(c.alpha);
    push_bool(out, tag + ".positive", rr.lo > 0.0 && std::isfinite(rr.hi),
              "lo=" + fmt(rr.lo) + " hi=" + fmt(rr.hi));
    push_bool(out, tag + ".ratio_lt_100", rr.hi / rr.lo < 100.0,
              "hi/lo=" + fmt(rr.hi / rr.lo));
  }
  push_runtime(out, "funo.runtime_s", elapsed(t0), 5.0);
  return out;
}

SuiteReport run_suite(const std::string& suite) {
  const auto t0 = Clock::now();
  SuiteReport rep;
  rep.suite = suite;
  const auto add = [&rep](std::vector<CheckResult> cs) {
    for (auto& c : cs) rep.checks.push_back(std::move(c));
  };
  if (suite == "specfun") {
    add(criterion_trace_identity());
    add(criterion_funo_ratio());
  } else if (suite == "spectral") {
    add(criterion_dixmier());
    add(criterion_schatten_macaev());
  } else if (suite == "quad") {
    add(criterion_forelli_rudin());
    add(criterion_berezin());
  } else if (suite == "nystrom") {
    add(criterion_spectrum_oracle());
    add(criterion_finite_rank());
    add(criterion_radial_diff());
  } else if (suite == "classify") {
    add(criterion_classifier_table());
  } else if (suite == "all") {
    add(criterion_spectrum_oracle());
    add(criterion_trace_identity());
    add(criterion_dixmier());
    add(criterion_schatten_macaev());
    add(criterion_forelli_rudin());
    add(criterion_berezin());
    add(criterion_finite_rank());
    add(criterion_radial_diff());
    add(criterion_classifier_table());
    add(criterion_funo_ratio());
  } else {
    throw ParameterError("unknown suite: '" + suite + "'");
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.name < b.name;
            });
  rep.seconds = elapsed(t0);
  return rep;
}

}  // namespace bergman::verify
