#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

struct BergmanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gamma evaluated at a nonpositive integer.
struct PoleError : BergmanError {
  using BergmanError::BergmanError;
};

// 2F1 at x=1 with c-a-b <= 0, or a Forelli-Rudin integral that is infinite.
struct DivergenceError : BergmanError {
  using BergmanError::BergmanError;
};

// Series failed to meet its tail bound within the term cap.
struct NonConvergence : BergmanError {
  using BergmanError::BergmanError;
};

// Spectral operations requested for alpha >= d+1 (operator not compact).
struct SupercriticalError : BergmanError {
  using BergmanError::BergmanError;
};

// Dixmier trace requested for alpha > 1.
struct NotInMacaev1 : BergmanError {
  using BergmanError::BergmanError;
};

// Trace formula requested for alpha >= 1.
struct NotTraceClass : BergmanError {
  using BergmanError::BergmanError;
};

// Two-grid quadrature comparison exceeded 10x the requested tolerance.
struct GridTooCoarse : BergmanError {
  using BergmanError::BergmanError;
};

struct ParameterError : BergmanError {
  using BergmanError::BergmanError;
};

struct RangeError : BergmanError {
  using BergmanError::BergmanError;
};

// Asymptotic regression could not separate the candidate growth regimes.
struct AmbiguousFit : BergmanError {
  using BergmanError::BergmanError;
};

// Dense eigensolver did not converge.
struct NoConvergence : BergmanError {
  using BergmanError::BergmanError;
};

}  // namespace bergman
