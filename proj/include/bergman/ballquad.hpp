#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman::ballquad {

/// Parameters of the ball integral J_{c,t}(z) = ∫ (1-|w|^2)^t / |1-<z,w>|^{c+t} dv(w)
/// evaluated at |z| = r.
struct FRQuery {
  double c;
  double t;  // must be > -1
  double r;  // in [0,1]; r = 1 only when c < d+1
};

/// Quadrature rule over the unit ball, reduced by unitary invariance: every
/// integrand used here depends on w only through (w_1, |w|) once z sits on
/// the first coordinate axis.  Nodes are therefore triples
/// (radius rho, first-coordinate disk point u, angle theta) with
///   w_1 = rho * u * e^{i theta},   |w| = rho,
/// and the normalized volume splits as
///   dv = [2d rho^{2d-1} d rho] x [(d-1)(1-u^2)^{d-2} 2u du] x [d theta / 2pi]
/// (the middle factor collapses to the point u = 1 when d = 1).
struct BallGrid {
  int dim;
  std::vector<double> radial_nodes;    // rho in (0,1)
  std::vector<double> radial_weights;  // sum = 1
  std::vector<double> disk_nodes;      // u in (0,1); {1} when dim == 1
  std::vector<double> disk_weights;    // sum = 1
  std::vector<double> angle_nodes;     // theta, uniform on [0, 2pi)
  std::vector<double> angle_weights;   // 1/M each

  std::uint64_t node_count() const {
    return static_cast<std::uint64_t>(radial_nodes.size()) *
           disk_nodes.size() * angle_nodes.size();
  }

  /// Sum of all product weights; equals 1 up to rounding for every grid.
  double weight_sum() const;

  /// Visit every node as f(w1, rho, weight).  Evaluation order is fixed but
  /// results must not depend on it: quadrature sums use compensated
  /// accumulation.
  template <class F>
  void for_each_node(F&& f) const {
    for (std::size_t i = 0; i < radial_nodes.size(); ++i) {
      const double rho = radial_nodes[i];
      for (std::size_t j = 0; j < disk_nodes.size(); ++j) {
        const double u = disk_nodes[j];
        const double w2 = radial_weights[i] * disk_weights[j];
        for (std::size_t k = 0; k < angle_nodes.size(); ++k) {
          const double th = angle_nodes[k];
          f(std::complex<double>(rho * u * std::cos(th),
                                 rho * u * std::sin(th)),
            rho, w2 * angle_weights[k]);
        }
      }
    }
  }
};

/// Gauss-Legendre nodes and weights on [0,1] (unweighted).
void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights);

constexpr int kDefaultRadial = 128;
constexpr int kDefaultAngular = 256;
constexpr int kDefaultDiskRadial = 64;

BallGrid make_ball_grid(int dim, int radial = kDefaultRadial,
                        int angular = kDefaultAngular,
                        int disk_radial = kDefaultDiskRadial);

/// J_{c,t} by the hypergeometric representation:
/// Gamma(1+d)Gamma(1+t)/Gamma(1+d+t) * 2F1((c+t)/2, (c+t)/2; 1+d+t; r^2).
double fr_series(const FRQuery& q, int dim, double tol = 1e-12);

struct BoundaryValue {
  bool finite;
  double value;  // meaningful only when finite
};

/// Value of sup over the closed ball of the (beta, gamma) integral: finite
/// exactly when beta < d+1+gamma, with closed form
/// Gamma(d+1)Gamma(gamma+1)Gamma(d+gamma+1-beta)/Gamma(d+gamma+1-beta/2)^2.
BoundaryValue fr_boundary(double beta, double gamma, int dim);

/// Direct quadrature of J_{c,t} at z = (z_radius, 0, ..., 0).  An internal
/// comparison against the doubled grid guards accuracy; the refined value is
/// returned.
double fr_quadrature(double c, double t, double z_radius, const BallGrid& grid,
                     double tol = 1e-6);

enum class Asymptotic { Bounded, Log, Power };

struct AsymptoticFit {
  Asymptotic kind;
  double exponent;        // fitted exponent when kind == Power, else 0
  double residual_const;  // relative OLS residuals of the three shapes
  double residual_log;
  double residual_power;
};

/// Classify the growth of J_{c,t} as |z| -> 1 from series samples at the
/// given radii (default 1 - 10^{-k}, k = 2..6).
AsymptoticFit fr_asymptotic_classify(double c, double t, int dim,
                                     const std::vector<double>& radii = {});

/// The annulus integral I_alpha(r, z): the full-ball value minus the inner
/// ball of radius r, as an explicit hypergeometric difference.
double i_alpha(double alpha, double r, double z_radius, int dim,
               double tol = 1e-12);

/// Berezin transform of K_alpha at |z| = z_radius: (1-|z|^2)^{d+1-alpha}.
double berezin_closed(double alpha, int dim, double z_radius);

/// Berezin transform by direct quadrature of
/// (1-|z|^2)^{d+1} ∫ (1-<w,z>)^{-alpha} (1-<z,w>)^{-(d+1)} dv(w).
double berezin_quadrature(double alpha, int dim, double z_radius,
                          const BallGrid& grid, double tol = 1e-6);

/// Tr(K_alpha) = Gamma(d+1)Gamma(1-alpha)/Gamma(d+1-alpha) for alpha < 1.
double trace_formula(double alpha, int dim);

/// ||H_z||_q^q = (1-|z|^2)^s * J_{c',0}(z) with
/// c' = s + q(d+1)/p + q(alpha-d-1); requires s/q - (1-1/p)(d+1) to be a
/// nonnegative integer.
double probe_norm(double alpha, int dim, double p, double q, double s,
                  double z_radius, double tol = 1e-12);

}  // namespace bergman::ballquad
