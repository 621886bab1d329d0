#include "bergman/ballquad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bergman/specfun.hpp"

namespace bergman::ballquad {

using specfun::SignedLogGamma;
using specfun::log_gamma;

namespace {

/// Compensated (Kahan) accumulator so quadrature sums are deterministic to
/// rounding regardless of evaluation order.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double gamma_ratio(std::initializer_list<double> num,
                   std::initializer_list<double> den) {
  double log_abs = 0.0;
  int sign = 1;
  for (double x : num) {
    const SignedLogGamma g = log_gamma(x);
    log_abs += g.log_abs;
    sign *= g.sign;
  }
  for (double x : den) {
    const SignedLogGamma g = log_gamma(x);
    log_abs -= g.log_abs;
    sign *= g.sign;
  }
  return sign * std::exp(log_abs);
}

}  // namespace

void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // Newton iteration on Legendre polynomials over [-1,1], then map to [0,1].
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = 0.5 * (1.0 - x);
    nodes[n - 1 - i] = 0.5 * (1.0 + x);
    weights[i] = 0.5 * w;
    weights[n - 1 - i] = 0.5 * w;
  }
}

double BallGrid::weight_sum() const {
  Kahan acc;
  for_each_node([&](std::complex<double>, double, double w) { acc.add(w); });
  return acc.sum;
}

BallGrid make_ball_grid(int dim, int radial, int angular, int disk_radial) {
  if (dim < 1) throw ParameterError("make_ball_grid: dim must be >= 1");
  if (radial < 2 || angular < 4) {
    throw ParameterError("make_ball_grid: grid sizes too small");
  }
  BallGrid g;
  g.dim = dim;

  std::vector<double> x, w;
  gauss_legendre_01(radial, x, w);
  g.radial_nodes = x;
  g.radial_weights.resize(radial);
  for (int i = 0; i < radial; ++i) {
    // fold the normalized radial density 2d rho^{2d-1} into the weight
    g.radial_weights[i] =
        w[i] * 2.0 * dim * std::pow(x[i], 2.0 * dim - 1.0);
  }

  if (dim == 1) {
    g.disk_nodes = {1.0};
    g.disk_weights = {1.0};
  } else {
    gauss_legendre_01(disk_radial, x, w);
    g.disk_nodes = x;
    g.disk_weights.resize(disk_radial);
    for (int i = 0; i < disk_radial; ++i) {
      // density of |xi_1| for a uniform sphere point: (d-1)(1-u^2)^{d-2} 2u
      g.disk_weights[i] = w[i] * (dim - 1.0) *
                          std::pow(1.0 - x[i] * x[i], dim - 2.0) * 2.0 * x[i];
    }
  }

  g.angle_nodes.resize(angular);
  g.angle_weights.assign(angular, 1.0 / angular);
  for (int k = 0; k < angular; ++k) {
    g.angle_nodes[k] = 2.0 * M_PI * (k + 0.5) / angular;
  }
  return g;
}

double fr_series(const FRQuery& q, int dim, double tol) {
  if (q.t <= -1.0) throw ParameterError("fr_series: t must exceed -1");
  if (q.r < 0.0 || q.r > 1.0) {
    throw ParameterError("fr_series: r must lie in [0, 1]");
  }
  const double beta = q.c + q.t;
  const double front =
      gamma_ratio({1.0 + dim, 1.0 + q.t}, {1.0 + dim + q.t});
  // Near x = 1 the defining series converges slowly; allow a deep cap.
  const std::uint64_t cap = q.r > 0.99 ? 20000000 : 1000000;
  return front * specfun::hyp2f1(
                     {beta / 2.0, beta / 2.0, 1.0 + dim + q.t, q.r * q.r},
                     tol, cap);
}

BoundaryValue fr_boundary(double beta, double gamma, int dim) {
  if (gamma <= -1.0) {
    throw ParameterError("fr_boundary: gamma must exceed -1");
  }
  if (beta >= dim + 1.0 + gamma) return {false, 0.0};
  const double top = dim + gamma + 1.0 - beta;
  const double half = dim + gamma + 1.0 - beta / 2.0;
  return {true,
          gamma_ratio({dim + 1.0, gamma + 1.0, top}, {half, half})};
}

namespace {

double fr_quadrature_on(double c, double t, double zr, const BallGrid& grid) {
  const double ex = -(c + t) / 2.0;
  Kahan acc;
  grid.for_each_node([&](std::complex<double> w1, double rho, double w) {
    const double re = 1.0 - zr * w1.real();
    const double im = zr * w1.imag();
    const double m2 = re * re + im * im;  // |1 - <z,w>|^2
    acc.add(w * std::pow(1.0 - rho * rho, t) * std::pow(m2, ex));
  });
  return acc.sum;
}

BallGrid doubled(const BallGrid& grid) {
  return make_ball_grid(grid.dim,
                        static_cast<int>(grid.radial_nodes.size()) * 2,
                        static_cast<int>(grid.angle_nodes.size()) * 2,
                        static_cast<int>(grid.disk_nodes.size()) *
                            (grid.dim == 1 ? 1 : 2));
}

}  // namespace

double fr_quadrature(double c, double t, double z_radius, const BallGrid& grid,
                     double tol) {
  if (t <= -1.0) throw ParameterError("fr_quadrature: t must exceed -1");
  if (z_radius < 0.0 || z_radius > 0.999) {
    throw ParameterError(
        "fr_quadrature: z_radius must lie in [0, 0.999]; use the series "
        "representation near the boundary");
  }
  const double coarse = fr_quadrature_on(c, t, z_radius, grid);
  const double fine = fr_quadrature_on(c, t, z_radius, doubled(grid));
  if (std::abs(fine - coarse) > 10.0 * tol * std::abs(fine)) {
    throw GridTooCoarse("fr_quadrature: two-grid discrepancy " +
                        std::to_string(std::abs(fine - coarse)) +
                        " exceeds 10x tolerance");
  }
  return fine;
}

AsymptoticFit fr_asymptotic_classify(double c, double t, int dim,
                                     const std::vector<double>& radii_in) {
  std::vector<double> radii = radii_in;
  if (radii.empty()) {
    for (int k = 2; k <= 6; ++k) radii.push_back(1.0 - std::pow(10.0, -k));
  }
  if (radii.size() < 3) {
    throw ParameterError("fr_asymptotic_classify: need at least 3 radii");
  }
  std::sort(radii.begin(), radii.end());

  const std::size_t n = radii.size();
  std::vector<double> J(n), u(n), L(n);
  for (std::size_t i = 0; i < n; ++i) {
    J[i] = fr_series({c, t, radii[i]}, dim, 1e-10);
    u[i] = 1.0 - radii[i] * radii[i];
    L[i] = -std::log(u[i]);
  }

  auto fit_residual = [&](const std::vector<double>& shape) {
    // OLS of J against {1, shape}; returns rms residual / rms J.
    double s1 = n, sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sx += shape[i];
      sxx += shape[i] * shape[i];
      sy += J[i];
      sxy += shape[i] * J[i];
    }
    const double det = s1 * sxx - sx * sx;
    double a, b;
    if (std::abs(det) < 1e-30) {
      a = sy / s1;
      b = 0.0;
    } else {
      b = (s1 * sxy - sx * sy) / det;
      a = (sy - b * sx) / s1;
    }
    double rss = 0, yss = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = J[i] - a - b * shape[i];
      rss += r * r;
      yss += J[i] * J[i];
    }
    return std::sqrt(rss / yss);
  };

  std::vector<double> ones(n, 0.0);  // constant model: shape contributes 0
  std::vector<double> pshape(n);
  const double pe = dim + 1.0 - c;
  for (std::size_t i = 0; i < n; ++i) pshape[i] = std::pow(u[i], pe);

  AsymptoticFit fit{};
  fit.residual_const = fit_residual(ones);
  fit.residual_log = fit_residual(L);
  // The power shape u^{d+1-c} is only a candidate for growth when its
  // exponent is negative; for c <= d+1 it is a vanishing correction that
  // would otherwise let the power model shadow the bounded one.
  const bool power_candidate = pe < -1e-12;
  fit.residual_power =
      power_candidate ? fit_residual(pshape) : fit.residual_const;

  // Dominance test on relative residuals: a divergent shape must beat the
  // alternatives by 10x.  Among nested near-constant fits the constant model
  // wins unless beaten decisively.
  struct Candidate {
    Asymptotic kind;
    double res;
  };
  std::vector<Candidate> cands = {{Asymptotic::Bounded, fit.residual_const},
                                  {Asymptotic::Log, fit.residual_log}};
  if (power_candidate) {
    cands.push_back({Asymptotic::Power, fit.residual_power});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.res < b.res;
            });
  const bool dominant = cands[0].res * 10.0 <= cands[1].res;
  if (dominant && cands[0].kind != Asymptotic::Bounded) {
    fit.kind = cands[0].kind;
    if (fit.kind == Asymptotic::Power) {
      // refine the exponent from the last two samples, where the leading
      // power dominates the subleading terms
      fit.exponent = (std::log(J[n - 1]) - std::log(J[n - 2])) /
                     (std::log(u[n - 1]) - std::log(u[n - 2]));
    }
    return fit;
  }
  if (fit.residual_const <= 10.0 * cands[0].res) {
    // No divergent shape decisively beats a constant: the values stay
    // bounded and the residual differences reflect vanishing corrections.
    fit.kind = Asymptotic::Bounded;
    return fit;
  }
  throw AmbiguousFit(
      "fr_asymptotic_classify: residual ratios do not separate the "
      "candidate regimes (const " +
      std::to_string(fit.residual_const) + ", log " +
      std::to_string(fit.residual_log) + ", power " +
      std::to_string(fit.residual_power) + ")");
}

double i_alpha(double alpha, double r, double z_radius, int dim, double tol) {
  if (alpha >= dim + 1.0) {
    throw ParameterError("i_alpha: requires alpha < d+1");
  }
  if (r < 0.0 || r >= 1.0) {
    throw ParameterError("i_alpha: r must lie in [0, 1)");
  }
  if (z_radius < 0.0 || z_radius > 1.0) {
    throw ParameterError("i_alpha: z_radius must lie in [0, 1]");
  }
  // sum_j a_j z^{2j} (1 - r^{2(j+d)}) with a_j the 2F1(alpha/2, alpha/2; d+1)
  // coefficients: split into F(z^2) - r^{2d} F(r^2 z^2).
  const double a = alpha / 2.0;
  const double z2 = z_radius * z_radius;
  const std::uint64_t cap = z2 > 0.99 ? 20000000 : 1000000;
  const double full = specfun::hyp2f1({a, a, dim + 1.0, z2}, tol, cap);
  const double inner =
      std::pow(r, 2.0 * dim) *
      specfun::hyp2f1({a, a, dim + 1.0, r * r * z2}, tol, cap);
  return full - inner;
}

double berezin_closed(double alpha, int dim, double z_radius) {
  if (z_radius < 0.0 || z_radius >= 1.0) {
    throw ParameterError("berezin_closed: z_radius must lie in [0, 1)");
  }
  return std::pow(1.0 - z_radius * z_radius, dim + 1.0 - alpha);
}

double berezin_quadrature(double alpha, int dim, double z_radius,
                          const BallGrid& grid, double tol) {
  if (z_radius < 0.0 || z_radius > 0.95) {
    throw ParameterError(
        "berezin_quadrature: z_radius must lie in [0, 0.95]; use the closed "
        "form near the boundary");
  }
  auto evaluate = [&](const BallGrid& g) {
    // (1-<w,z>)^{-alpha} (1-<z,w>)^{-(d+1)} has real part
    // m^{-(alpha+d+1)} cos((alpha-d-1) phi) with 1-<z,w> = m e^{i phi}.
    const double ex = -(alpha + dim + 1.0) / 2.0;
    const double ph = alpha - dim - 1.0;
    Kahan acc;
    g.for_each_node([&](std::complex<double> w1, double, double w) {
      const double re = 1.0 - z_radius * w1.real();
      const double im = z_radius * w1.imag();
      const double m2 = re * re + im * im;
      const double phi = std::atan2(-im, re);
      acc.add(w * std::pow(m2, ex) * std::cos(ph * phi));
    });
    return std::pow(1.0 - z_radius * z_radius, dim + 1.0) * acc.sum;
  };
  const double coarse = evaluate(grid);
  const double fine = evaluate(doubled(grid));
  if (std::abs(fine - coarse) > 10.0 * tol * std::abs(fine)) {
    throw GridTooCoarse("berezin_quadrature: two-grid discrepancy " +
                        std::to_string(std::abs(fine - coarse)) +
                        " exceeds 10x tolerance");
  }
  return fine;
}

double trace_formula(double alpha, int dim) {
  if (alpha >= 1.0) {
    throw NotTraceClass("trace_formula: K_alpha is trace class only for "
                        "alpha < 1");
  }
  return gamma_ratio({dim + 1.0, 1.0 - alpha}, {dim + 1.0 - alpha});
}

double probe_norm(double alpha, int dim, double p, double q, double s,
                  double z_radius, double tol) {
  if (q <= 0.0) throw ParameterError("probe_norm: q must be positive");
  if (z_radius < 0.0 || z_radius >= 1.0) {
    throw ParameterError("probe_norm: z_radius must lie in [0, 1)");
  }
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double m = s / q - (1.0 - inv_p) * (dim + 1.0);
  if (m < -1e-9 || std::abs(m - std::round(m)) > 1e-9) {
    throw ParameterError(
        "probe_norm: s/q - (1-1/p)(d+1) must be a nonnegative integer; got " +
        std::to_string(m));
  }
  const double c = s + q * (dim + 1.0) * inv_p + q * (alpha - dim - 1.0);
  return std::pow(1.0 - z_radius * z_radius, s) *
         fr_series({c, 0.0, z_radius}, dim, tol);
}

}  // namespace bergman::ballquad
