#pragma once

#include <cstdint>

#include "bergman/errors.hpp"

namespace bergman::specfun {

/// Natural log of |Gamma(x)| together with the sign of Gamma(x).
/// exp(log_abs) * sign reproduces Gamma(x); keeping logs avoids overflow in
/// the long Gamma-ratio products used throughout the spectral formulas.
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1

  double value() const;
};

/// Signed log-gamma for real x, x not a nonpositive integer.
/// Lanczos approximation for x >= 0.5, reflection below.
SignedLogGamma log_gamma(double x);

/// Rising factorial (a)_j = a (a+1) ... (a+j-1).
double pochhammer(double a, std::uint64_t j);

/// Query for the Gauss hypergeometric series, real parameters, x in [0,1].
struct HypergeometricQuery {
  double a;
  double b;
  double c;  // not a nonpositive integer
  double x;  // in [0, 1]
};

inline constexpr std::uint64_t kDefaultSeriesCap = 100000;

/// 2F1(a,b;c;x) by direct series summation for x < 1 (tail bound <= tol,
/// relative), and by the Gauss closed form at x = 1 (requires c-a-b > 0).
double hyp2f1(const HypergeometricQuery& q, double tol,
              std::uint64_t max_terms = kDefaultSeriesCap);

}  // namespace bergman::specfun
