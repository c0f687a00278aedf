#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lambert_tsallis/params.hpp"

// Existence of the main branch, the domain Ω it maps from, its boundary
// curves and asymptotes, and the real cut set S = R \ f(Ω ∩ R).

namespace lt::domain {

enum class Region { i, ii, iii, iv, v };
enum class Failure { none, two_to_one, domain_obstruction };

const char* to_string(Region region) noexcept;
const char* to_string(Failure failure) noexcept;

struct BranchClass {
  bool exists;
  std::optional<Region> region;
  Failure failure;
};

/// Decides whether the main branch exists and, if not, why.
BranchClass classify(const Params& params);

enum class OmegaCase {
  kappa_one_circle,
  kappa_one_half_plane,
  bounded_lens,
  gamma_zero_curve,
  single_curve,
  full_domain,
  two_curve_slit,
  infty_half_strip,
  infty_slit,
  infty_bounded,
};

const char* to_string(OmegaCase c) noexcept;

/// The line x·sin(ϑ) - y·cos(ϑ) = offset, i.e. slope tan ϑ.
struct Asymptote {
  double slope_angle;
  double offset;
};

struct Circle {
  double center;  // on the real axis
  double radius;
  bool interior;  // Ω is the inside (true) or the outside (false)
};

struct DomainDescription {
  Params params;
  OmegaCase kind;
  std::optional<double> theta_star;  // D(θ_*) = 0
  std::optional<double> theta0;      // π/κ
  std::optional<double> theta1;      // π/(κ+1)
  std::optional<double> y0;          // κ = ∞: where x₁ = x₂
  std::optional<double> y_star;      // κ = ∞: turning point of g
  std::optional<Circle> circle;
  std::vector<Asymptote> asymptotes;
  std::optional<double> pole;        // -1/γ
  Complex alpha1;
  Complex alpha2;
  bool bounded;
};

/// Complete description of Ω for κ > 0 or κ = ∞. Throws not_applicable for
/// κ < 0 (use the reduced parameters).
DomainDescription omega_description(const Params& params);

struct BoundaryRoots {
  bool real;
  double r_minus;  // smaller root
  double r_plus;   // larger root
};

/// Roots of a r² + b(θ) r + a - 1 = 0 in increasing order; for γ = 0 the single
/// root sin(κθ)/sin((κ+1)θ) in both slots. Even in θ.
BoundaryRoots boundary_roots(const Params& params, double theta);

/// Root of D(θ) = 0. Throws not_applicable unless a < 0, or κ > 1 with D(0) < 0.
double theta_star(const Params& params);

enum class Branch { minus, plus };

/// z = κ(r e^{iθ} - 1) on the chosen root. Throws not_on_boundary when that
/// root is complex or not positive.
Complex boundary_point(const Params& params, double theta, Branch branch);

/// κ = ∞ boundary at height y: the real roots x₁ ≤ x₂ of
/// x² + x/γ + y² + y·cot(y)/γ = 0, or nullopt if complex. For γ = 0 both
/// entries hold -y·cot y.
std::optional<std::pair<double, double>> boundary_infty(double gamma, double y);

/// g(y) = cos y + 2γ y sin y.
double g_infty(double gamma, double y);

/// Turning point of g on (0, π). Throws not_applicable for 0 ≤ γ ≤ 1/4.
double y_star(double gamma);

/// The root y₀ of g = 1 (γ > 1/4) or g = -1 (γ < 0). Throws not_applicable for
/// 0 ≤ γ ≤ 1/4.
double y_zero(double gamma);

enum class Membership { inside, outside, boundary };

const char* to_string(Membership m) noexcept;

inline constexpr double kBoundaryBand = 1e-12;

/// Decides z ∈ Ω from the explicit inequalities. Points within `band` of a
/// boundary inequality are reported as boundary. κ < 0 goes through the
/// reduction.
Membership membership(const Params& params, Complex z, double band = kBoundaryBand);
Membership membership(const DomainDescription& desc, Complex z, double band = kBoundaryBand);

enum class CutKind { empty, interval, half_line, point };

const char* to_string(CutKind kind) noexcept;

/// Real cut set. half_line is (-∞, hi); interval is (lo, hi); point is {lo}.
struct CutSet {
  CutKind kind;
  double lo;
  double hi;

  /// Distance from w to the closure of the set.
  double distance(Complex w) const;
};

/// Throws not_applicable when the branch does not exist.
CutSet cut_set(const Params& params);

/// A maximal real interval of Ω on which f increases from w_lo to w_hi.
struct RealComponent {
  double lo;
  double hi;
  double w_lo;
  double w_hi;
};

/// The components of Ω ∩ R for existing-branch parameters with κ > 0 or ∞.
std::vector<RealComponent> real_components(const Params& params);

}  // namespace lt::domain
