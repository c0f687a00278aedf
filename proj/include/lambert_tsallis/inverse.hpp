#pragma once

#include "lambert_tsallis/params.hpp"
#include "lambert_tsallis/reduction.hpp"

// Main branch W_{κ,γ} of the inverse of f_{κ,γ}, defined on ℂ minus the
// closed cut set.

namespace lt::inverse {

struct EvalOptions {
  double tol = 1e-12;            // on |f(z) - w| / max(1, |w|)
  int max_iter = 64;             // Newton iterations per solve
  int continuation_steps = 32;   // doubled on failure up to kMaxContinuationSteps
};

inline constexpr int kMaxContinuationSteps = 1024;
/// Tolerance accepted within the square-root zone of a critical value.
inline constexpr double kCriticalTol = 1e-8;

struct WResult {
  Complex z;
  double residual;  // ≤ tol, or the rounding floor |f'(z)|·ulp(z)/|w| when larger
  int iterations;
  bool path_used;
  bool near_critical;  // w at or next to a critical value f(α)
};

/// W_{κ,γ}(w). Throws classification when the main branch does not exist,
/// cut when w lies in the closed cut set (critical values themselves return
/// the critical point with near_critical set), convergence when every
/// continuation budget fails.
WResult w_eval(const Params& params, Complex w, const EvalOptions& opts = {});

/// κ = 1: root of z² + (1 - γw)z - w = 0 that vanishes at w = 0. The square
/// root is taken in the factored form whose only cut is the cut set.
Complex w_closed_form_k1(double gamma, Complex w);

/// Coefficients of W(w) = w + c2 w² + c3 w³ + O(w⁴).
struct SeriesCoefficients {
  double c2;
  double c3;
};

SeriesCoefficients series_coefficients(const Params& params);

/// Degree-3 series for |w| ≤ kSeedRadius, else w.
inline constexpr double kSeedRadius = 0.1;
Complex w_seed(const Params& params, Complex w);

/// Tracks f(z) = t·w from small t to t = 1, with a detour through
/// i·|w| when the straight segment runs close to the cut set.
WResult w_continuation(const Params& params, Complex w, const EvalOptions& opts = {});

using lt::reduce_negative_kappa;

}  // namespace lt::inverse
