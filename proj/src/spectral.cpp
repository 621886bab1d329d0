#include "bergman/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "bergman/specfun.hpp"

namespace bergman::spectral {

using specfun::SignedLogGamma;
using specfun::log_gamma;

OperatorParams OperatorParams::make(double alpha, int dim) {
  if (dim < 1) throw ParameterError("OperatorParams: dim must be >= 1");
  OperatorParams p{alpha, dim, Regime::Regular, -1};
  if (alpha <= 0.0 && alpha == std::round(alpha)) {
    p.regime = Regime::NonposInteger;
    p.nonpos_n = static_cast<int>(-alpha);
  } else if (alpha >= dim + 1) {
    p.regime = Regime::Supercritical;
  }
  return p;
}

namespace {

void require_compact(const OperatorParams& params, const char* op) {
  if (params.regime == Regime::Supercritical) {
    throw SupercriticalError(std::string(op) +
                             ": K_alpha is not compact for alpha >= d+1");
  }
}

}  // namespace

double eigenvalue(const OperatorParams& params, std::uint64_t n) {
  require_compact(params, "eigenvalue");
  const double d = params.dim;
  const double nd = static_cast<double>(n);
  if (params.regime == Regime::NonposInteger) {
    const int N = params.nonpos_n;
    if (n > static_cast<std::uint64_t>(N)) return 0.0;
    // (-1)^n Gamma(1-alpha) Gamma(d+1) / (Gamma(1-alpha-n) Gamma(n+d+1))
    const double one_ma = 1.0 - params.alpha;  // N+1
    const SignedLogGamma g1 = log_gamma(one_ma);
    const SignedLogGamma g2 = log_gamma(d + 1.0);
    const SignedLogGamma g3 = log_gamma(one_ma - nd);
    const SignedLogGamma g4 = log_gamma(nd + d + 1.0);
    const int sign = (n % 2 == 0 ? +1 : -1) * g1.sign * g2.sign * g3.sign *
                     g4.sign;
    return sign *
           std::exp(g1.log_abs + g2.log_abs - g3.log_abs - g4.log_abs);
  }
  const SignedLogGamma g1 = log_gamma(d + 1.0);
  const SignedLogGamma g2 = log_gamma(params.alpha + nd);
  const SignedLogGamma g3 = log_gamma(params.alpha);
  const SignedLogGamma g4 = log_gamma(d + 1.0 + nd);
  const int sign = g1.sign * g2.sign * g3.sign * g4.sign;
  return sign * std::exp(g1.log_abs + g2.log_abs - g3.log_abs - g4.log_abs);
}

std::uint64_t multiplicity(int dim, std::uint64_t n) {
  // binomial(n+d-1, d-1), exact
  std::uint64_t b = 1;
  for (std::uint64_t i = 1; i + 1 <= static_cast<std::uint64_t>(dim); ++i) {
    b = b * (n + i) / i;  // exact: product of i consecutive integers
  }
  return b;
}

SingularStream singular_values(const OperatorParams& params,
                               std::uint64_t count) {
  require_compact(params, "singular_values");
  SingularStream stream{params, {}};
  stream.values.reserve(count);
  if (count == 0) return stream;

  if (params.regime == Regime::NonposInteger) {
    const std::uint64_t N = static_cast<std::uint64_t>(params.nonpos_n);
    std::vector<SingularEntry> block;
    for (std::uint64_t n = 0; n <= N; ++n) {
      const double v = std::abs(eigenvalue(params, n));
      const std::uint64_t m = multiplicity(params.dim, n);
      for (std::uint64_t j = 0; j < m; ++j) block.push_back({v, n});
    }
    std::stable_sort(block.begin(), block.end(),
                     [](const SingularEntry& a, const SingularEntry& b) {
                       return a.value > b.value;
                     });
    for (const auto& e : block) {
      if (stream.values.size() == count) return stream;
      stream.values.push_back(e);
    }
    while (stream.values.size() < count) stream.values.push_back({0.0, N + 1});
    return stream;
  }

  // Non-monotone prefix: |mu_n| is only guaranteed decreasing past
  // n0 = min{n : n > |alpha|}; materialize degrees through ceil|alpha|+1,
  // sort them, then merge with the strictly decreasing tail.
  const std::uint64_t prefix_end =
      static_cast<std::uint64_t>(std::ceil(std::abs(params.alpha))) + 1;
  std::vector<SingularEntry> prefix;
  for (std::uint64_t n = 0; n <= prefix_end; ++n) {
    const double v = std::abs(eigenvalue(params, n));
    const std::uint64_t m = multiplicity(params.dim, n);
    for (std::uint64_t j = 0; j < m && prefix.size() <= count; ++j) {
      prefix.push_back({v, n});
    }
  }
  std::stable_sort(prefix.begin(), prefix.end(),
                   [](const SingularEntry& a, const SingularEntry& b) {
                     return a.value > b.value;
                   });

  std::size_t pi = 0;
  std::uint64_t tail_degree = prefix_end + 1;
  double tail_value = std::abs(eigenvalue(params, tail_degree));
  std::uint64_t tail_left = multiplicity(params.dim, tail_degree);
  const double d = params.dim;
  while (stream.values.size() < count) {
    // Ties go to the lower degree (the prefix entry).
    if (pi < prefix.size() && prefix[pi].value >= tail_value) {
      stream.values.push_back(prefix[pi++]);
      continue;
    }
    stream.values.push_back({tail_value, tail_degree});
    if (--tail_left == 0) {
      const double nd = static_cast<double>(tail_degree);
      tail_value *= std::abs(params.alpha + nd) / (d + 1.0 + nd);
      ++tail_degree;
      tail_left = multiplicity(params.dim, tail_degree);
    }
  }
  return stream;
}

double schatten_threshold(const OperatorParams& params) {
  return params.dim / (params.dim + 1.0 - params.alpha);
}

namespace {

// Tail of sum_{n>N} t_n for t_n ~ C n^e: the partial sums admit the
// expansion S_N = S_inf - A N^{e+1} - B N^e + O(N^{e-1}).  Three partial
// sums at N, 2N, 4N pin down S_inf.
double extrapolate_partial_sums(const std::array<double, 3>& S,
                                const std::array<double, 3>& N, double e) {
  double a[3][4];
  for (int i = 0; i < 3; ++i) {
    a[i][0] = 1.0;
    a[i][1] = -std::pow(N[i], e + 1.0);
    a[i][2] = -std::pow(N[i], e);
    a[i][3] = S[i];
  }
  // Gaussian elimination, 3x3 with partial pivoting.
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return a[0][3] / a[0][0];
}

}  // namespace

SchattenSum schatten_sum(const OperatorParams& params, double p, double tol) {
  require_compact(params, "schatten_sum");
  if (p <= 0.0) throw ParameterError("schatten_sum: p must be positive");
  (void)tol;
  const double d = params.dim;

  // For odd integer p the summand mu_n^p keeps the eigenvalue sign, so that
  // p = 1 reproduces the trace for every alpha < 1 (the eigenvalues are
  // negative beyond degree 0 when alpha < 0).  Otherwise |mu_n|^p is summed;
  // the two agree whenever alpha >= 0.  Convergence is always decided from
  // the absolute series.
  const bool p_odd = std::abs(p - std::round(p)) < 1e-12 &&
                     std::llround(p) % 2 != 0;

  if (params.regime == Regime::NonposInteger) {
    double sum = 0.0;
    const std::uint64_t N = static_cast<std::uint64_t>(params.nonpos_n);
    for (std::uint64_t n = 0; n <= N; ++n) {
      const double ev = eigenvalue(params, n);
      const double sgn = p_odd && ev < 0.0 ? -1.0 : 1.0;
      sum += static_cast<double>(multiplicity(params.dim, n)) * sgn *
             std::pow(std::abs(ev), p);
    }
    return {true, sum, sum, N + 1};
  }

  const double threshold = schatten_threshold(params);
  const bool converges = p > threshold;

  // Explicit partial sums; term recurrence avoids per-term log-gamma.
  const std::uint64_t n1 = 50000;
  const std::array<std::uint64_t, 3> marks = {n1, 2 * n1, 4 * n1};
  std::array<double, 3> partials{};
  double sum = 0.0, comp = 0.0;  // Kahan
  double mult = 1.0;             // m_n as double
  double absmu = 1.0;            // |mu_n|
  double sgn = 1.0;              // sign of mu_n
  std::size_t mark = 0;
  for (std::uint64_t n = 0; n <= marks[2]; ++n) {
    const double t = mult * (p_odd ? sgn : 1.0) * std::pow(absmu, p);
    const double y = t - comp;
    const double s2 = sum + y;
    comp = (s2 - sum) - y;
    sum = s2;
    if (mark < 3 && n == marks[mark]) partials[mark++] = sum;
    const double nd = static_cast<double>(n);
    mult *= (nd + d) / (nd + 1.0);
    absmu *= std::abs(params.alpha + nd) / (d + 1.0 + nd);
    if (params.alpha + nd < 0.0) sgn = -sgn;
  }

  if (!converges) {
    return {false, std::numeric_limits<double>::quiet_NaN(), sum,
            marks[2] + 1};
  }
  const double e = p * (params.alpha - d - 1.0) + (d - 1.0);
  const double value = extrapolate_partial_sums(
      partials,
      {static_cast<double>(marks[0]), static_cast<double>(marks[1]),
       static_cast<double>(marks[2])},
      e);
  return {true, value, sum, marks[2] + 1};
}

bool schatten_member(const OperatorParams& params, double p) {
  if (p <= 0.0) throw ParameterError("schatten_member: p must be positive");
  switch (params.regime) {
    case Regime::NonposInteger:
      return true;  // finite rank
    case Regime::Supercritical:
      return false;  // not compact
    case Regime::Regular:
      return p > schatten_threshold(params);
  }
  return false;
}

bool macaev_member(const OperatorParams& params, double p) {
  if (p <= 0.0) throw ParameterError("macaev_member: p must be positive");
  switch (params.regime) {
    case Regime::NonposInteger:
      return true;
    case Regime::Supercritical:
      return false;
    case Regime::Regular:
      return p >= schatten_threshold(params);
  }
  return false;
}

double hausdorff_dimension(const OperatorParams& params) {
  require_compact(params, "hausdorff_dimension");
  if (params.regime == Regime::NonposInteger) return 0.0;
  return schatten_threshold(params);
}

DixmierAccumulator dixmier_trace_estimate(const OperatorParams& params,
                                          std::uint64_t k_max) {
  if (params.regime == Regime::Regular && params.alpha > 1.0) {
    throw NotInMacaev1("dixmier_trace_estimate: requires alpha <= 1");
  }
  if (params.regime == Regime::Supercritical) {
    throw NotInMacaev1("dixmier_trace_estimate: requires alpha <= 1");
  }
  if (k_max < 100) {
    throw ParameterError("dixmier_trace_estimate: k_max too small");
  }

  DixmierAccumulator acc;
  const std::array<double, 3> exps = {0.6, 0.8, 1.0};

  // sigma_k = sum_{j=0}^{k-1} s_j accumulated blockwise over degrees.  Each
  // sample is snapped down to a complete-block boundary M_{n-1}: inside a
  // block the running sum is piecewise linear in k and sigma_k/log k picks up
  // an oscillation of relative size m_n s_{M_{n-1}} / log k, which would
  // swamp the extrapolation for small dimensions of the sample grid.
  const double d = params.dim;
  double mult = 1.0, absmu = 1.0;
  double block_start = 0.0;  // M_{n-1}: entries below the current degree
  double sigma = 0.0;        // sum over complete blocks below current degree
  std::uint64_t n = 0;
  auto advance_block = [&] {
    sigma += mult * absmu;
    block_start += mult;
    const double nd = static_cast<double>(n);
    mult *= (nd + d) / (nd + 1.0);
    if (params.regime == Regime::NonposInteger &&
        n >= static_cast<std::uint64_t>(params.nonpos_n)) {
      absmu = 0.0;
    } else {
      absmu *= std::abs(params.alpha + nd) / (d + 1.0 + nd);
    }
    ++n;
  };
  for (double ex : exps) {
    const double target = std::pow(static_cast<double>(k_max), ex);
    while (block_start + mult <= target) advance_block();
    if (block_start < 2.0) advance_block();
    while (!acc.ks.empty() &&
           acc.ks.back() >= static_cast<std::uint64_t>(block_start)) {
      advance_block();  // keep sample abscissae strictly increasing
    }
    acc.ks.push_back(static_cast<std::uint64_t>(block_start));
    acc.partial_sums.push_back(sigma);
    acc.estimates.push_back(sigma / std::log(block_start));
  }

  // At block boundaries sigma_k = L log k + c0 + c1 k^{-e} + O(k^{-2e}),
  // where the power correction comes from the Euler-Maclaurin remainder of
  // the degree sum: e = (1-alpha)/d for a convergent tail and 1/d in the
  // logarithmically divergent case.  Solving the 3x3 system for (L, c0, c1)
  // isolates the log coefficient far more accurately than polynomial
  // extrapolation in 1/log k, whose radius of convergence is too small at
  // the accessible k.
  double e = 1.0 / d;
  if (params.regime == Regime::Regular && params.alpha < 1.0) {
    e = (1.0 - params.alpha) / d;
  }
  double a[3][4];
  for (int i = 0; i < 3; ++i) {
    const double kd = static_cast<double>(acc.ks[i]);
    a[i][0] = std::log(kd);
    a[i][1] = 1.0;
    a[i][2] = std::pow(kd, -e);
    a[i][3] = acc.partial_sums[i];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  acc.extrapolated = a[0][3] / a[0][0];
  return acc;
}

double decay_exponent_fit(const SingularStream& stream, std::uint64_t K) {
  if (K < 1000) throw ParameterError("decay_exponent_fit: K must be >= 1000");
  if (stream.params.regime != Regime::Regular) {
    throw ParameterError("decay_exponent_fit: requires the regular regime");
  }
  if (stream.values.size() <= K) {
    throw ParameterError("decay_exponent_fit: stream shorter than K");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::uint64_t cnt = 0;
  for (std::uint64_t k = K / 2; k <= K; ++k) {
    const double x = std::log(static_cast<double>(k));
    const double y = std::log(stream.values[k].value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  const double nd = static_cast<double>(cnt);
  return (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
}

RatioRange funo_ratio_range(const OperatorParams& params, double p,
                            std::uint64_t n_max) {
  const double d = params.dim;
  if (!(params.alpha > 0.0 && params.alpha < d + 1.0)) {
    throw RangeError("funo_ratio_range: requires 0 < alpha < d+1");
  }
  if (!(p > 0.0 && p < (d + 1.0) / (d + 1.0 - params.alpha))) {
    throw RangeError("funo_ratio_range: p outside (0, (d+1)/(d+1-alpha))");
  }
  const double alpha2 = p * params.alpha - (p - 1.0) * (d + 1.0);
  double log_mu1 = 0.0, log_mu2 = 0.0;  // log mu_n at alpha and alpha2
  double lo = 1.0, hi = 1.0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const double r = std::exp(p * log_mu1 - log_mu2);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    const double nd = static_cast<double>(n);
    log_mu1 += std::log(params.alpha + nd) - std::log(d + 1.0 + nd);
    log_mu2 += std::log(alpha2 + nd) - std::log(d + 1.0 + nd);
  }
  return {lo, hi};
}

}  // namespace bergman::spectral
