#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lambert_tsallis/params.hpp"

// Real auxiliary functions of the boundary analysis: H_α, F_κ, J_κ, b(θ),
// b'(θ), B(θ), D(θ), G, ℓ and the critical quadratic q(z). Every function in
// this header is pure.

namespace lt::scalar {

/// Switchover window for the θ → 0 closed-form limits.
inline constexpr double kLimitWindow = 1e-8;

/// One (open sub-interval, sign) row of a sign/monotonicity table.
struct SignSegment {
  double lo;
  double hi;
  int sign;  // -1, 0 or +1
};

using SignTable = std::vector<SignSegment>;

// ---------------------------------------------------------------------------
// H_α(x) = sin(αx) - α sin(x)

double h_alpha(double alpha, double x);

/// H_α without the cancellation of the raw formula near x = 0 (power series
/// for small |x|). Same value as h_alpha up to rounding.
double h_alpha_accurate(double alpha, double x);

enum class HCase {
  all_positive,            // 0 < α ≤ 1/2
  positive_then_negative,  // 1/2 < α < 1
  negative_then_positive,  // 1 < α < 2
  all_negative,            // α ≥ 2
};

struct HProfile {
  HCase shape;
  double upper;                  // I₁ = (0, upper), upper = min(2π, 2π/α)
  std::optional<double> zero;    // y_* when it exists
  SignTable table;               // sign of H_α on I₁
  SignTable derivative_table;    // sign of H'_α on I₁
};

/// Sign profile of H_α on I₁. Throws degenerate for α = 1.
HProfile h_alpha_sign_profile(double alpha);

// ---------------------------------------------------------------------------
// F_κ(x) = tan x · cot(κx)

double f_kappa(double kappa, double x);

enum class FCase { A, B, C, D };

struct FTable {
  FCase row;
  double upper;                   // I₀ upper bound min(π, π/κ)
  std::optional<double> x_star;   // interior zero of F'_κ (rows B, C)
  std::optional<double> f_at_x_star;
  SignTable derivative_table;     // sign of F'_κ on I₀ (poles split segments)
};

/// Monotonicity table of F_κ on I₀. Throws degenerate for κ = 1.
FTable f_kappa_table(double kappa);

// ---------------------------------------------------------------------------
// J_κ(x) = (2x - 2κ - 1)/(4κx - 2κ - 1)

double j_kappa(double kappa, double x);

/// G(x) = (2x² + 3x + 1)/(6x), the threshold for a in the b' tables.
double g_threshold(double kappa);

/// ℓ(κ, a) = 4aκ - 2κ - 1.
double ell(double kappa, double a);

// ---------------------------------------------------------------------------
// b(θ), b'(θ), B(θ), D(θ) for finite κ > 0 and a = κγ.

/// Upper end of I₀ = (0, min(π, π/κ)).
double i0_upper(double kappa);

double b_theta(double kappa, double a, double theta);
double b_theta(const Params& params, double theta);

/// b(θ)·sin(κθ); continuous on the closure of I₀ (no pole at π/κ).
double b_times_sin(double kappa, double a, double theta);

double b_prime(double kappa, double a, double theta);
double b_prime(const Params& params, double theta);

/// B(θ) = 2 sin²(κθ) b'(θ) = H_{2κ+1}(θ) + 4a sinθ sin²(κθ).
double big_b(double kappa, double a, double theta);

/// B'(θ) via the two closed forms, dispatching on |ℓ| < 1e-12.
double big_b_prime(double kappa, double a, double theta);

double discriminant_d(double kappa, double a, double theta);
double discriminant_d(const Params& params, double theta);

/// D(θ)·sin²(κθ); continuous on the closure of I₀.
double discriminant_times_sin2(double kappa, double a, double theta);

/// Row of the b' sign table.
enum class BPrimeRow {
  kappa_one,               // b' = 2(a-1) sinθ
  small_up_down,           // 0<κ<1/2, a > G: + then -
  small_negative,          // 0<κ<1/2, a ≤ G: -
  half_zero,               // κ = 1/2, a = 1
  half_positive,           // κ = 1/2, a > 1
  half_negative,           // κ = 1/2, a < 1
  mid_down_up,             // 1/2<κ<1, a < G: - then +
  mid_positive,            // 1/2<κ<1, a ≥ G: +
  large_up_down,           // κ > 1, a > G: + then -
  large_negative,          // κ > 1, a ≤ G: -
};

const char* to_string(BPrimeRow row) noexcept;

struct BPrimeProfile {
  BPrimeRow row;
  std::optional<double> phi_star;
  SignTable table;
};

BPrimeProfile b_prime_sign_profile(double kappa, double a);
BPrimeProfile b_prime_sign_profile(const Params& params);

/// Signature-of-b table row (twelve rows for κ ≠ 1 plus κ = 1).
enum class BRow {
  small_neg_pos,      // 0<κ≤1/2, 2a-1 > 1/κ
  small_pos,          // 0<κ≤1/2, 0 ≤ 2a-1 ≤ 1/κ
  small_pos_neg,      // 0<κ≤1/2, 2a-1 < 0
  mid_neg_pos,        // 1/2<κ<1, 2a-1 > 1/κ
  mid_pos,            // 1/2<κ<1, F(x_*) < 2a-1 ≤ 1/κ
  mid_pos_neg_pos,    // 1/2<κ<1, 0 ≤ 2a-1 ≤ F(x_*)
  mid_pos_neg,        // 1/2<κ<1, 2a-1 < 0
  c_neg_pos_neg,      // 1<κ<2, 2a-1 ≥ F(x_*)
  c_neg,              // 1<κ<2, 1/κ ≤ 2a-1 < F(x_*)
  c_pos_neg,          // 1<κ<2, 2a-1 < 1/κ
  large_neg,          // κ≥2, 2a-1 ≥ 1/κ
  large_pos_neg,      // κ≥2, 2a-1 < 1/κ
  kappa_one,          // κ = 1: b = 2(1-a) cosθ
};

const char* to_string(BRow row) noexcept;

struct BProfile {
  BRow row;
  std::vector<double> zeros;  // φ or φ₁ ≤ φ₂
  SignTable table;
};

BProfile b_sign_profile(double kappa, double a);

// ---------------------------------------------------------------------------
// Critical quadratic q(z) = γz² + (1 + 1/κ)z + 1 (κ = ∞: γz² + z + 1).

Complex q_poly(const Params& params, Complex z);
double q_poly(const Params& params, double x);

/// Roots of q ordered α₁ ≤ α₂ when real, Im α₁ > 0 > Im α₂ otherwise.
/// For γ = 0 both entries hold the single root.
std::pair<Complex, Complex> critical_points(const Params& params);

/// True iff q has real roots: γ ≤ (1 + 1/κ)²/4.
bool critical_points_real(const Params& params);

/// D(0) = (1 + 1/κ)² - 4γ (κ = ∞: 1 - 4γ); same sign as the θ = 0 discriminant.
double discriminant_at_zero(const Params& params);

}  // namespace lt::scalar
