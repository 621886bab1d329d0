#include "bergman/operators.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "bergman/ballquad.hpp"
#include "bergman/specfun.hpp"

namespace bergman::operators {

using specfun::SignedLogGamma;
using specfun::log_gamma;

int MonomialIndex::degree() const {
  int n = 0;
  for (int v : k) n += v;
  return n;
}

double MonomialIndex::norm_constant_sq() const {
  const int d = static_cast<int>(k.size());
  const int n = degree();
  double log_fact = 0.0;
  for (int v : k) log_fact += std::lgamma(v + 1.0);
  return std::exp(log_gamma(d + 1.0 + n).log_abs -
                  log_gamma(d + 1.0).log_abs - log_fact);
}

namespace {

void enumerate(int dim, int remaining, bool exact, std::vector<int>& partial,
               std::vector<MonomialIndex>& out) {
  if (static_cast<int>(partial.size()) == dim - 1) {
    if (exact) {
      partial.push_back(remaining);
      out.push_back({partial});
      partial.pop_back();
    } else {
      for (int v = 0; v <= remaining; ++v) {
        partial.push_back(v);
        out.push_back({partial});
        partial.pop_back();
      }
    }
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    partial.push_back(v);
    enumerate(dim, remaining - v, exact, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<MonomialIndex> monomials_of_degree(int dim, int n) {
  if (dim < 1 || n < 0) throw ParameterError("monomials_of_degree: bad args");
  std::vector<MonomialIndex> out;
  std::vector<int> partial;
  enumerate(dim, n, true, partial, out);
  return out;
}

std::vector<MonomialIndex> monomials_up_to_degree(int dim, int n) {
  std::vector<MonomialIndex> out;
  for (int m = 0; m <= n; ++m) {
    auto deg = monomials_of_degree(dim, m);
    out.insert(out.end(), deg.begin(), deg.end());
  }
  return out;
}

int CoefficientVector::max_degree() const {
  int n = 0;
  for (const auto& [idx, c] : coeffs) n = std::max(n, idx.degree());
  return n;
}

double PointGrid::weight_sum() const {
  double sum = 0.0, comp = 0.0;
  for (double w : weights) {
    const double y = w - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

namespace {

struct SpherePoint {
  std::vector<std::complex<double>> xi;  // |xi| = 1
  double weight;
};

// Recursive product rule on the unit sphere of C^d: |xi_1|^2 ~ Beta(1, d-1),
// phases uniform.
std::vector<SpherePoint> sphere_rule(int dim, int angular, int sphere_radial) {
  std::vector<SpherePoint> out;
  if (dim == 1) {
    out.reserve(angular);
    for (int k = 0; k < angular; ++k) {
      const double th = 2.0 * M_PI * (k + 0.5) / angular;
      out.push_back({{std::polar(1.0, th)}, 1.0 / angular});
    }
    return out;
  }
  std::vector<double> v, vw;
  ballquad::gauss_legendre_01(sphere_radial, v, vw);
  const auto inner = sphere_rule(dim - 1, angular, sphere_radial);
  for (int i = 0; i < sphere_radial; ++i) {
    // density of v = |xi_1|^2 on [0,1] is (d-1)(1-v)^{d-2}
    const double wv = vw[i] * (dim - 1.0) * std::pow(1.0 - v[i], dim - 2.0);
    const double r1 = std::sqrt(v[i]);
    const double r2 = std::sqrt(1.0 - v[i]);
    for (int k = 0; k < angular; ++k) {
      const double th = 2.0 * M_PI * (k + 0.5) / angular;
      for (const auto& pt : inner) {
        SpherePoint sp;
        sp.xi.reserve(dim);
        sp.xi.push_back(std::polar(r1, th));
        for (const auto& c : pt.xi) sp.xi.push_back(r2 * c);
        sp.weight = wv / angular * pt.weight;
        out.push_back(std::move(sp));
      }
    }
  }
  return out;
}

int thread_count() {
  if (const char* env = std::getenv("BERGMAN_SPECTRA_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

PointGrid make_point_grid(int dim, int radial, int angular,
                          int sphere_radial) {
  if (dim < 1 || radial < 2 || angular < 4 || sphere_radial < 2) {
    throw ParameterError("make_point_grid: bad grid sizes");
  }
  // Gauss-Legendre in u = r^2, which concentrates radii toward the boundary
  // where the kernels lose smoothness: 2d r^{2d-1} dr = d u^{d-1} du.
  std::vector<double> u, uw;
  ballquad::gauss_legendre_01(radial, u, uw);
  const auto sphere = sphere_rule(dim, angular, sphere_radial);

  PointGrid g;
  g.dim = dim;
  g.nodes.reserve(static_cast<std::size_t>(radial) * sphere.size());
  g.weights.reserve(g.nodes.capacity());
  for (int i = 0; i < radial; ++i) {
    const double r_i = std::sqrt(u[i]);
    const double wr = uw[i] * dim * std::pow(u[i], dim - 1.0);
    for (const auto& pt : sphere) {
      std::vector<std::complex<double>> z(dim);
      for (int m = 0; m < dim; ++m) z[m] = r_i * pt.xi[m];
      g.nodes.push_back(std::move(z));
      g.weights.push_back(wr * pt.weight);
    }
  }
  return g;
}

std::vector<std::pair<MonomialIndex, double>> galerkin_diagonal(
    const spectral::OperatorParams& params, int N) {
  if (params.regime == spectral::Regime::Supercritical) {
    throw SupercriticalError(
        "galerkin_diagonal: K_alpha is not compact for alpha >= d+1");
  }
  std::vector<std::pair<MonomialIndex, double>> out;
  for (int n = 0; n <= N; ++n) {
    const double mu = spectral::eigenvalue(params, n);
    for (auto& idx : monomials_of_degree(params.dim, n)) {
      out.emplace_back(std::move(idx), mu);
    }
  }
  return out;
}

double radial_diff_multiplier(double s, double t, int dim, int n) {
  auto bad = [](double x) { return x <= 0.0 && x == std::round(x); };
  if (bad(dim + 1.0 + s) || bad(dim + 1.0 + s + t)) {
    throw ParameterError(
        "radial_diff_multiplier: d+s and d+s+t must not be negative "
        "integers");
  }
  const SignedLogGamma g1 = log_gamma(dim + 1.0 + s);
  const SignedLogGamma g2 = log_gamma(dim + 1.0 + n + s + t);
  const SignedLogGamma g3 = log_gamma(dim + 1.0 + s + t);
  const SignedLogGamma g4 = log_gamma(dim + 1.0 + n + s);
  return (g1.sign * g2.sign * g3.sign * g4.sign) *
         std::exp(g1.log_abs + g2.log_abs - g3.log_abs - g4.log_abs);
}

CoefficientVector radial_diff_apply(double s, double t, int dim,
                                    const CoefficientVector& f) {
  CoefficientVector out;
  for (const auto& [idx, c] : f.coeffs) {
    out.coeffs[idx] = c * radial_diff_multiplier(s, t, dim, idx.degree());
  }
  return out;
}

ZhZReport zhz_check(double s, double t, int N, int M, int dim) {
  if (N < 0 || M < N + 20) {
    throw ParameterError("zhz_check: need N >= 0 and M >= N + 20");
  }
  // Taylor coefficients of (1-x)^{-a} are (a)_j / j!.
  const double a_src = dim + 1.0 + s + N;
  const double a_dst = dim + 1.0 + s + N + t;
  std::vector<double> b(M + 1);  // R^{s,t}-transformed source coefficients
  {
    double coef = 1.0;
    for (int j = 0; j <= M; ++j) {
      b[j] = coef * radial_diff_multiplier(s, t, dim, j);
      coef *= (a_src + j) / (j + 1.0);
    }
  }
  std::vector<double> g(M + 1);  // coefficients of (1-x)^{-a_dst}
  {
    double coef = 1.0;
    for (int j = 0; j <= M; ++j) {
      g[j] = coef;
      coef *= (a_dst + j) / (j + 1.0);
    }
  }
  // Solve h_0..h_N from b_j = sum_{i<=min(j,N)} h_i g_{j-i}, j = 0..N
  // (lower-triangular with unit diagonal since g_0 = 1).
  ZhZReport report;
  report.h.assign(N + 1, 0.0);
  for (int j = 0; j <= N; ++j) {
    double acc = b[j];
    for (int i = 0; i < j; ++i) acc -= report.h[i] * g[j - i];
    report.h[j] = acc / g[0];
  }
  report.max_residual = 0.0;
  for (int j = N + 1; j <= M; ++j) {
    double pred = 0.0;
    for (int i = 0; i <= N; ++i) pred += report.h[i] * g[j - i];
    const double denom = std::max(std::abs(b[j]), 1.0);
    report.max_residual =
        std::max(report.max_residual, std::abs(b[j] - pred) / denom);
  }
  return report;
}

NystromMatrix nystrom_assemble(const spectral::OperatorParams& params,
                               const PointGrid& grid, KernelKind kind) {
  const int n = static_cast<int>(grid.size());
  NystromMatrix m;
  m.grid = grid;
  m.kind = kind;
  m.alpha = params.alpha;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, {0.0, 0.0});

  std::vector<double> sqw(n);
  for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(grid.weights[i]);

  const double alpha = params.alpha;
  const int dim = grid.dim;
  auto fill_columns = [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      for (int i = j; i < n; ++i) {
        std::complex<double> ip(0.0, 0.0);
        for (int mth = 0; mth < dim; ++mth) {
          ip += grid.nodes[i][mth] * std::conj(grid.nodes[j][mth]);
        }
        const std::complex<double> base = 1.0 - ip;
        std::complex<double> kv;
        if (kind == KernelKind::Absolute) {
          kv = std::pow(std::abs(base), -alpha);
        } else {
          kv = std::pow(base, -alpha);
        }
        const std::complex<double> v = sqw[i] * sqw[j] * kv;
        m.a[static_cast<std::size_t>(j) * n + i] = v;
        m.a[static_cast<std::size_t>(i) * n + j] = std::conj(v);
      }
    }
  };

  const int threads = std::min(thread_count(), n);
  if (threads <= 1) {
    fill_columns(0, n);
  } else {
    // Split columns so each chunk covers a comparable share of the lower
    // triangle.
    std::vector<std::thread> pool;
    std::vector<int> cuts = {0};
    const double total = 0.5 * n * (n + 1.0);
    for (int c = 1; c < threads; ++c) {
      // first j with remaining work fraction (1 - j/n)^2 <= 1 - c/threads
      const double frac = static_cast<double>(c) / threads;
      const int j = static_cast<int>(
          std::ceil(n * (1.0 - std::sqrt(1.0 - frac))));
      cuts.push_back(std::clamp(j, cuts.back(), n));
      (void)total;
    }
    cuts.push_back(n);
    for (int c = 0; c < threads; ++c) {
      pool.emplace_back(fill_columns, cuts[c], cuts[c + 1]);
    }
    for (auto& th : pool) th.join();
  }
  return m;
}

std::vector<double> eigensolve(const NystromMatrix& matrix) {
  const int n = matrix.n;
  if (n < 1) throw ParameterError("eigensolve: empty matrix");
  if (n > 5000) {
    throw ParameterError("eigensolve: matrix dimension exceeds 5000");
  }
  std::vector<std::complex<double>> a = matrix.a;
  std::vector<double> w(n);
  const int info = LAPACKE_zheev(
      LAPACK_COL_MAJOR, 'N', 'L', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  if (info < 0) {
    throw ParameterError("eigensolve: invalid argument " +
                         std::to_string(-info));
  }
  if (info > 0) {
    throw NoConvergence("eigensolve: eigenvalue iteration failed to "
                        "converge (info = " +
                        std::to_string(info) + ")");
  }
  std::vector<double> out(w.begin(), w.end());
  std::sort(out.begin(), out.end(), [](double x, double y) {
    return std::abs(x) > std::abs(y);
  });
  for (double& x : out) x = std::abs(x);
  return out;
}

SpectrumComparison spectrum_compare(const spectral::OperatorParams& params,
                                    const std::vector<int>& radial_sizes,
                                    int topK) {
  if (params.regime == spectral::Regime::Supercritical) {
    throw SupercriticalError("spectrum_compare: requires alpha < d+1");
  }
  const auto targets = spectral::singular_values(params, topK);
  SpectrumComparison cmp;
  // Eigenvalue accuracy is limited by angular aliasing of the kernel's
  // Taylor modes (mode k aliases with k + M on an M-point phase rule), so
  // the angular count grows much faster than the radial one.
  const int angular_factor = params.dim == 1 ? 64 : 4;
  for (int radial : radial_sizes) {
    const PointGrid grid =
        make_point_grid(params.dim, radial, angular_factor * radial);
    const auto computed = eigensolve(
        nystrom_assemble(params, grid, KernelKind::Holomorphic));
    double err = 0.0;
    for (int k = 0; k < topK; ++k) {
      const double got =
          k < static_cast<int>(computed.size()) ? computed[k] : 0.0;
      err = std::max(err, std::abs(got - targets.values[k].value));
    }
    cmp.grid_nodes.push_back(grid.size());
    cmp.max_errors.push_back(err);
  }
  return cmp;
}

std::size_t finite_rank_check(int N, int dim, KernelKind kind,
                              const PointGrid& grid) {
  if (N < 0) throw ParameterError("finite_rank_check: N must be >= 0");
  const double alpha = kind == KernelKind::Holomorphic ? -N : -2.0 * N;
  const auto params = spectral::OperatorParams::make(alpha, dim);
  const auto eigs = eigensolve(nystrom_assemble(params, grid, kind));
  if (eigs.empty()) return 0;
  const double cut = 1e-10 * eigs.front();
  std::size_t rank = 0;
  while (rank < eigs.size() && eigs[rank] > cut) ++rank;
  return rank;
}

}  // namespace bergman::operators
