#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lambert_tsallis/domain.hpp"

// Plot data for ∂Ω ∩ closed upper half plane.

namespace lt::domain {

/// One grid row. For finite κ, t is θ = arg(1 + z/κ) and the roots r± give
/// z± = κ(r± e^{iθ} - 1). For κ = ∞, t is the height y, r± are absent and
/// z± = x₁,₂(y) + iy. Absent or complex roots are left empty.
struct BoundarySample {
  double t;
  std::optional<double> r_minus;
  std::optional<double> r_plus;
  std::optional<Complex> z_minus;
  std::optional<Complex> z_plus;
};

struct BoundaryExport {
  DomainDescription description;
  std::vector<BoundarySample> samples;
};

/// Unbounded branches are cut where |z| first reaches this radius.
inline constexpr double kExportRadius = 100.0;

/// n samples along the boundary, cosine-spaced toward the unbounded or
/// junction end. The full-domain case and parameters whose boundary has no
/// curve give no samples. κ < 0 throws not_applicable (export the reduced
/// parameters).
BoundaryExport export_boundary(const Params& params, int n, double radius = kExportRadius);

/// Header `theta,r_minus,r_plus,x_minus,y_minus,x_plus,y_plus`, 15 significant
/// digits, C locale.
std::string to_csv(const BoundaryExport& data);

/// {case, params:{kappa,gamma}, theta_star?, y0?, asymptotes:[{slope_angle,offset}],
///  samples:[{theta, r_minus?, r_plus?, x_minus?, y_minus?, x_plus?, y_plus?}]}
std::string to_json(const BoundaryExport& data);

/// One line per sample, whitespace separated, `-` for empty fields.
std::string to_plain(const BoundaryExport& data);

/// %.15g in the C locale; `inf`, `-inf` and `nan` spelled out.
std::string format_number(double v);

/// v rounded to 15 significant digits, so JSON writers print at most 15.
double round15(double v);

}  // namespace lt::domain
