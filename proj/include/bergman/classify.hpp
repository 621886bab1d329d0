#pragma once

#include <boost/rational.hpp>
#include <string>

#include "bergman/errors.hpp"
#include "bergman/spectral.hpp"

namespace bergman::classify {

using Rational = boost::rational<long long>;

/// An exponent in [1, inf].  Infinity is a distinguished flag, never a
/// floating-point sentinel, because the case analysis branches on p = inf
/// and q = inf exactly.
template <typename T>
struct Exponent {
  T value{};
  bool is_inf = false;

  static Exponent infinity() { return Exponent{T{}, true}; }
  static Exponent finite(T v) { return Exponent{v, false}; }
};

enum class Kind { K, Kplus };

enum class Tri { Yes, No, Unknown };

/// Boundedness / compactness verdict with the rule that decided it.
struct Verdict {
  bool compact;
  Tri bounded;
  std::string rule;
};

/// L^p-L^q compactness (and boundedness, where the case analysis settles
/// it) of the integral operator with kernel exponent alpha on the unit ball
/// of C^d.  The verdict is identical for the holomorphic and the absolute
/// kernel.  The double overload evaluates the inequalities in floating
/// point; the rational overload evaluates them exactly, which is the
/// recommended interface for boundary rows.
Verdict compactness(double alpha, int dim, Exponent<double> p,
                    Exponent<double> q, Kind kind);
Verdict compactness(const Rational& alpha, int dim, Exponent<Rational> p,
                    Exponent<Rational> q, Kind kind);

struct SchattenMacaevVerdict {
  bool schatten;        // member of S_p
  bool macaev;          // member of the Macaev-type ideal S_{p,infty}
  double hausdorff_dim; // NaN when the operator is not compact
  bool not_compact;     // alpha >= d+1: both memberships are vacuously false
};

/// Schatten / Macaev membership for exponent p > 0, delegating to the
/// spectral module; for compact cases both verdicts are equivalent to the
/// comparison of p against the Hausdorff dimension of the spectrum.
SchattenMacaevVerdict schatten_macaev(double alpha, int dim, double p);

/// Parse "inf", "a/b", or a decimal into a rational exponent.  Throws
/// ParameterError on malformed input or values below 1.
Exponent<Rational> parse_exponent(const std::string& text);

/// Parse "a/b" or a decimal into an exact rational (no infinity allowed).
Rational parse_rational(const std::string& text);

}  // namespace bergman::classify
