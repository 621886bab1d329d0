#pragma once

#include <cstdint>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman::spectral {

enum class Regime {
  NonposInteger,  // alpha = -N for an integer N >= 0; finite rank
  Regular,        // alpha < d+1 and -alpha not a nonnegative integer
  Supercritical,  // alpha >= d+1; not compact on L^2
};

struct OperatorParams {
  double alpha;
  int dim;  // d >= 1
  Regime regime;
  int nonpos_n = -1;  // N when regime == NonposInteger

  static OperatorParams make(double alpha, int dim);
};

/// mu_n = Gamma(d+1) Gamma(alpha+n) / (Gamma(alpha) Gamma(d+1+n)) in the
/// regular regime; the truncated alternating form when -alpha is an integer.
double eigenvalue(const OperatorParams& params, std::uint64_t n);

/// dim E_n = binomial(n+d-1, d-1), exact in integer arithmetic.
std::uint64_t multiplicity(int dim, std::uint64_t n);

/// One entry of the multiplicity-expanded singular value list.
struct SingularEntry {
  double value;          // |mu_n|
  std::uint64_t degree;  // n
};

/// Non-increasing list of |eigenvalues| counted with multiplicity.  The
/// finite non-monotone prefix (degrees <= ceil|alpha|+1) is sorted
/// explicitly; the tail is strictly decreasing by the eigenvalue recurrence.
struct SingularStream {
  OperatorParams params;
  std::vector<SingularEntry> values;
};

SingularStream singular_values(const OperatorParams& params,
                               std::uint64_t count);

/// Schatten-sum threshold d / (d+1-alpha).
double schatten_threshold(const OperatorParams& params);

struct SchattenSum {
  bool converged;
  double value;        // series value when converged, NaN otherwise
  double partial_sum;  // evidence: partial sum over the computed terms
  std::uint64_t terms; // degrees summed explicitly
};

/// Sum_n mu_n^p dim E_n, with |mu_n|^p for non-integer p (for odd integer p
/// the eigenvalue sign is kept, so p = 1 reproduces the trace for every
/// alpha < 1).  Convergence is decided analytically from the threshold; the
/// convergent value is computed by explicit summation plus a tail
/// extrapolation at the known Stirling decay exponents.
SchattenSum schatten_sum(const OperatorParams& params, double p,
                         double tol = 1e-12);

bool schatten_member(const OperatorParams& params, double p);
bool macaev_member(const OperatorParams& params, double p);

/// d/(d+1-alpha) in the regular regime, 0 for finite rank.
double hausdorff_dimension(const OperatorParams& params);

struct DixmierAccumulator {
  std::vector<std::uint64_t> ks;     // sample indices
  std::vector<double> partial_sums;  // sigma_k = sum_{j<=k} s_j
  std::vector<double> estimates;     // sigma_k / log k
  double extrapolated;
};

/// Dixmier trace surrogate: sigma_k / log k sampled at geometrically spaced
/// k up to k_max, extrapolated in powers of 1/log k.
DixmierAccumulator dixmier_trace_estimate(const OperatorParams& params,
                                          std::uint64_t k_max);

/// Least-squares slope of log s_k vs log k over k in [K/2, K].
double decay_exponent_fit(const SingularStream& stream, std::uint64_t K);

struct RatioRange {
  double lo;
  double hi;
};

/// Range over n <= n_max of mu_n(alpha)^p / mu_n(p alpha - (p-1)(d+1)).
RatioRange funo_ratio_range(const OperatorParams& params, double p,
                            std::uint64_t n_max);

}  // namespace bergman::spectral
