#include "bergman/classify.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace bergman::classify {

namespace {

// The full case analysis over a scalar type T that supports exact (or
// floating) arithmetic and comparisons.  alpha is split by the critical
// values 0, d+1, d+2; each regime has its own equivalent-condition list.
template <typename T>
Verdict compactness_impl(const T& alpha, int dim, const Exponent<T>& p,
                         const Exponent<T>& q, Kind /*kind*/) {
  if (dim < 1) throw ParameterError("compactness: dim must be >= 1");
  if ((!p.is_inf && p.value < T(1)) || (!q.is_inf && q.value < T(1))) {
    throw ParameterError("compactness: exponents must lie in [1, inf]");
  }
  const T d1 = T(dim + 1);
  const T d2 = T(dim + 2);

  if (alpha <= T(0)) {
    return {true, Tri::Yes, "Prop fink (1)"};
  }
  if (alpha >= d2) {
    return {false, Tri::No, "Cor kcor"};
  }
  if (alpha == d1) {
    const bool compact =
        !q.is_inf && (p.is_inf || q.value < p.value);  // 1 <= q < p <= inf
    return {compact, compact ? Tri::Yes : Tri::Unknown, "Prop kd1"};
  }
  if (alpha > d1) {
    // d+1 < alpha < d+2: compact and bounded coincide.
    const T excess = alpha - d1;  // in (0, 1)
    const bool c5a = !p.is_inf && p.value * (d2 - alpha) > T(1) &&
                     !q.is_inf &&
                     q.value * (T(1) / p.value + excess) < T(1);
    const bool c5b = p.is_inf && !q.is_inf && q.value * excess < T(1);
    if (c5a) return {true, Tri::Yes, "Theorem 1 (5a)"};
    if (c5b) return {true, Tri::Yes, "Theorem 1 (5b)"};
    return {false, Tri::No, "Theorem 1"};
  }

  // 0 < alpha < d+1; the critical exponent is tau = (d+1)/(d+1-alpha).
  const T gap = d1 - alpha;  // > 0
  if (!p.is_inf && p.value == T(1)) {
    if (!q.is_inf && q.value * alpha < d1) {
      return {true, Tri::Yes, "Theorem 2 (3a)"};
    }
    return {false, Tri::Unknown, "Theorem 2"};
  }
  if (p.is_inf || p.value * gap > d1) {  // p > tau
    return {true, Tri::Yes, "Theorem 2 (3d)"};
  }
  if (p.value * gap == d1) {  // p = tau
    if (!q.is_inf) return {true, Tri::Yes, "Theorem 2 (3c)"};
    return {false, Tri::Unknown, "Theorem 2"};
  }
  // 1 < p < tau: need 1/q > 1/p + alpha/(d+1) - 1, whose right side is
  // positive throughout this range, so q must be finite.
  const T rhs = T(1) / p.value + alpha / d1 - T(1);
  if (!q.is_inf && q.value * rhs < T(1)) {
    return {true, Tri::Yes, "Theorem 2 (3b)"};
  }
  return {false, Tri::Unknown, "Theorem 2"};
}

long long parse_ll(const std::string& text) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw ParameterError("malformed number: '" + text + "'");
  }
  if (pos != text.size()) {
    throw ParameterError("malformed number: '" + text + "'");
  }
  return v;
}

}  // namespace

Verdict compactness(double alpha, int dim, Exponent<double> p,
                    Exponent<double> q, Kind kind) {
  return compactness_impl<double>(alpha, dim, p, q, kind);
}

Verdict compactness(const Rational& alpha, int dim, Exponent<Rational> p,
                    Exponent<Rational> q, Kind kind) {
  return compactness_impl<Rational>(alpha, dim, p, q, kind);
}

SchattenMacaevVerdict schatten_macaev(double alpha, int dim, double p) {
  if (p <= 0.0) throw ParameterError("schatten_macaev: p must be positive");
  const auto params = spectral::OperatorParams::make(alpha, dim);
  if (params.regime == spectral::Regime::Supercritical) {
    return {false, false, std::numeric_limits<double>::quiet_NaN(), true};
  }
  return {spectral::schatten_member(params, p),
          spectral::macaev_member(params, p),
          spectral::hausdorff_dimension(params), false};
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParameterError("empty number");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const long long num = parse_ll(text.substr(0, slash));
    const long long den = parse_ll(text.substr(slash + 1));
    if (den == 0) throw ParameterError("zero denominator: '" + text + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    return Rational(parse_ll(text));
  }
  const std::string head = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.size() > 15) {
    throw ParameterError("too many decimal digits: '" + text + "'");
  }
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParameterError("malformed number: '" + text + "'");
    }
  }
  const bool negative = !head.empty() && head[0] == '-';
  long long whole = 0;
  if (head != "-" && !head.empty()) whole = parse_ll(head);
  long long den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  long long num = std::llabs(whole) * den + (frac.empty() ? 0 : parse_ll(frac));
  if (negative || whole < 0) num = -num;
  return Rational(num, den);
}

Exponent<Rational> parse_exponent(const std::string& text) {
  if (text == "inf") return Exponent<Rational>::infinity();
  const Rational v = parse_rational(text);
  if (v < Rational(1)) {
    throw ParameterError("exponent must be >= 1: '" + text + "'");
  }
  return Exponent<Rational>::finite(v);
}

}  // namespace bergman::classify
