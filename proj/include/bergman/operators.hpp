#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/spectral.hpp"

namespace bergman::operators {

/// Multi-index of a monomial z^k with its normalization constant.
struct MonomialIndex {
  std::vector<int> k;

  int degree() const;
  /// c_k^2 = Gamma(d+1+|k|) / (Gamma(d+1) prod_j k_j!), the reciprocal of
  /// the squared L^2(dv) norm of z^k.
  double norm_constant_sq() const;

  bool operator<(const MonomialIndex& other) const { return k < other.k; }
  bool operator==(const MonomialIndex& other) const { return k == other.k; }
};

/// All multi-indices in dimension d with degree exactly n (resp. <= n).
std::vector<MonomialIndex> monomials_of_degree(int dim, int n);
std::vector<MonomialIndex> monomials_up_to_degree(int dim, int n);

/// Finitely supported coefficient vector on the monomial basis.
struct CoefficientVector {
  std::map<MonomialIndex, std::complex<double>> coeffs;

  int max_degree() const;
};

/// Quadrature nodes with full complex-ball coordinates, for discretizations
/// that cannot exploit unitary invariance.
struct PointGrid {
  int dim;
  std::vector<std::vector<std::complex<double>>> nodes;  // |z| < 1
  std::vector<double> weights;                           // sum = 1

  std::size_t size() const { return nodes.size(); }
  double weight_sum() const;
};

/// radial x sphere product grid: Gauss-Legendre in the radius against the
/// density 2d r^{2d-1}, recursive sphere rule in the angles (each level
/// splits |xi_1|^2 ~ Beta(1, d-1) via Gauss-Legendre and a uniform phase).
PointGrid make_point_grid(int dim, int radial, int angular,
                          int sphere_radial = 8);

enum class KernelKind {
  Holomorphic,  // (1 - <z,w>)^{-alpha}
  Absolute,     // |1 - <z,w>|^{-alpha}
};

/// A_ij = sqrt(w_i w_j) kernel(z_i, z_j); Hermitian by construction.
struct NystromMatrix {
  PointGrid grid;
  KernelKind kind;
  double alpha;
  int n;                                 // dimension = grid.size()
  std::vector<std::complex<double>> a;   // column-major n x n
};

/// Degree-diagonal representation of K_alpha on the monomial basis.
std::vector<std::pair<MonomialIndex, double>> galerkin_diagonal(
    const spectral::OperatorParams& params, int N);

/// R^{s,t}: multiply the degree-n part by
/// Gamma(d+1+s)Gamma(d+1+n+s+t) / (Gamma(d+1+s+t)Gamma(d+1+n+s)).
CoefficientVector radial_diff_apply(double s, double t, int dim,
                                    const CoefficientVector& f);

/// The degree-n multiplier of R^{s,t} itself.
double radial_diff_multiplier(double s, double t, int dim, int n);

struct ZhZReport {
  std::vector<double> h;    // solved polynomial coefficients, degree N
  double max_residual;      // over the checked coefficients N+1..M
};

/// Apply R^{s,t} to the Taylor coefficients of (1-x)^{-(d+1+s+N)}, solve a
/// degree-N polynomial h from the leading coefficients of
/// h(x)(1-x)^{-(d+1+s+N+t)}, and report the residual on the remaining ones.
ZhZReport zhz_check(double s, double t, int N, int M, int dim);

NystromMatrix nystrom_assemble(const spectral::OperatorParams& params,
                               const PointGrid& grid, KernelKind kind);

/// |eigenvalues| of the Hermitian matrix, non-increasing.
std::vector<double> eigensolve(const NystromMatrix& matrix);

struct SpectrumComparison {
  std::vector<std::size_t> grid_nodes;  // matrix dimension per level
  std::vector<double> max_errors;       // top-K absolute eigenvalue error
};

/// Compare Nystrom eigenvalues against the analytic singular values for a
/// sequence of radial resolutions (d = 1 grids use angular = 64 x radial).
SpectrumComparison spectrum_compare(const spectral::OperatorParams& params,
                                    const std::vector<int>& radial_sizes,
                                    int topK);

/// Count of Nystrom eigenvalues above 1e-10 x leading, for alpha = -N
/// (Holomorphic) or alpha = -2N (Absolute).
std::size_t finite_rank_check(int N, int dim, KernelKind kind,
                              const PointGrid& grid);

}  // namespace bergman::operators
