#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lambert_tsallis/params.hpp"

// Numerical certification of the main branch: winding numbers of f along the
// boundary of Ω ∩ ℂ⁺, interior sign checks and sign-table audits.

namespace lt::verify {

enum class PieceKind {
  axis,      // real-axis segment
  boundary,  // part of ∂Ω
  far,       // closes the contour at large |z|
  small,     // indentation around a pole or the point z = -κ
};

/// One smooth arc of a contour, s ∈ [0, 1] ↦ z.
struct Piece {
  PieceKind kind;
  std::function<Complex(double)> at;
};

/// Closed, positively oriented path around Ω ∩ ℂ⁺ truncated at `far` and
/// indented by `delta`. Finite κ > 0 or κ = ∞.
struct Contour {
  Params params;
  double far;
  double delta;
  std::vector<Piece> pieces;

  /// n samples per piece (cosine-spaced toward the junctions), closed:
  /// the last point repeats the first.
  std::vector<Complex> polyline(int n) const;
};

/// Case-appropriate contour. `far` is the radius of the closing arc about -κ
/// (the vertical lines x = ±far for κ = ∞, the arc about -1/γ for κ = 1);
/// `delta` is the radius of the indentations. Throws construction for
/// κ < 0 or non-positive sizes.
Contour build_contour(const Params& params, double far, double delta);

/// Bound on δ for the γ < 0 pole indentation that keeps |f| > R on it.
double pole_delta(const Params& params, double probe_bound);

/// Contour with `far` and `delta` adapted until the removed regions cannot
/// hold a preimage of any probe.
Contour contour_for_probes(const Params& params, const std::vector<Complex>& probes);

/// f and f' on the closed upper half plane, continuous from above on the cut
/// of exp_κ.
Complex f_upper(const Params& params, Complex z);
Complex f_prime_upper(const Params& params, Complex z);

struct Winding {
  Complex probe;
  double raw;    // quadrature value before rounding
  int value;
  int samples;   // quadrature leaves at acceptance
};

/// (1/2πi)∮ f'/(f - w₀) dz by adaptive trapezoid quadrature, repeated with a
/// doubled base partition until two successive values agree to 0.01 and sit
/// within 0.05 of an integer.
/// Throws ill_conditioned when w₀ is within 1e-8 of f(contour) and
/// under_resolved when the sample cap is reached.
std::vector<Winding> winding_numbers(const Contour& contour, const std::vector<Complex>& probes);
Winding winding_number(const Contour& contour, Complex probe);

/// Default probes spread over ℂ⁺.
std::vector<Complex> default_probes();

struct BijectivityProbe {
  bool bijective;  // every probe has winding 1 and the boundary maps into ℝ
  std::vector<Winding> windings;
  double boundary_imag;  // max |Im f|/max(1, |f|) over the axis and boundary pieces
};

/// Tolerance on boundary_imag.
inline constexpr double kBoundaryRealTol = 1e-6;

/// max |Im f|/max(1, |f|) over n samples of each axis and boundary piece.
double boundary_imag(const Contour& contour, int n = 256);

/// Counts preimages in Ω ∩ ℂ⁺ of the default probes and checks that ∂(Ω ∩ ℂ⁺)
/// maps into ℝ. κ < 0 is probed through the reduction to κ' = -κ.
BijectivityProbe probe_bijectivity(const Params& params);

/// Samples points of Ω ∩ ℂ⁺ and counts those with Im f ≤ 0.
int interior_sign_check(const Params& params, int samples, unsigned seed = 0);

struct AuditFailure {
  std::string table;
  double kappa;
  double a;
  double at;
};

/// Checks the sign tables of H_α, F'_κ, b and b' at 200 points per
/// sub-interval, b' against central differences of b (1e-5), and
/// f(α₂) < f(α₁) < 0 for every γ < 0 cell.
std::vector<AuditFailure> lemma_audit(const std::vector<double>& kappas,
                                      const std::vector<double>& as);

struct WindingRecord {
  Complex probe;
  int value;
};

struct VerificationReport {
  Params params;
  bool exists;
  bool consistent;  // classification agrees with the winding numbers
  std::vector<WindingRecord> windings;
  double residual_max;
  std::vector<std::string> lemma_failures;
  int sign_violations;

  bool pass() const;
  /// {params, exists, windings:[{probe, value}], residual_max,
  ///  lemma_failures:[...], sign_violations, pass}
  std::string to_json() const;
};

/// Winding, round-trip, interior-sign and lemma checks for one parameter set.
VerificationReport verify_params(const Params& params, unsigned seed = 0);

}  // namespace lt::verify
