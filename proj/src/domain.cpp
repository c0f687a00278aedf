#include "lambert_tsallis/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/reduction.hpp"
#include "lambert_tsallis/roots.hpp"
#include "lambert_tsallis/scalar_analysis.hpp"
#include "lambert_tsallis/tsallis_map.hpp"

namespace lt::domain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double existence_threshold(double kappa) {
  const double c = 1.0 + 1.0 / kappa;
  return 0.25 * c * c;
}

// Tri-state accumulator for conjunctions of strict inequalities with a
// boundary band: +1 inside, 0 boundary, -1 outside.
class Verdict {
 public:
  explicit Verdict(double band) : band_(band) {}

  /// Requires value > bound.
  Verdict& greater(double value, double bound) {
    state_ = std::min(state_, compare(value, bound));
    return *this;
  }

  int compare(double value, double bound) const {
    const double tol = band_ * std::max(1.0, std::abs(bound));
    if (value > bound + tol) return 1;
    if (value < bound - tol) return -1;
    return 0;
  }

  int state() const { return state_; }
  void merge(int s) { state_ = std::min(state_, s); }

 private:
  double band_;
  int state_ = 1;
};

Membership to_membership(int state) {
  if (state > 0) return Membership::inside;
  if (state < 0) return Membership::outside;
  return Membership::boundary;
}

}  // namespace

const char* to_string(Region region) noexcept {
  switch (region) {
    case Region::i: return "i";
    case Region::ii: return "ii";
    case Region::iii: return "iii";
    case Region::iv: return "iv";
    case Region::v: return "v";
  }
  return "?";
}

const char* to_string(Failure failure) noexcept {
  switch (failure) {
    case Failure::none: return "none";
    case Failure::two_to_one: return "two_to_one";
    case Failure::domain_obstruction: return "domain_obstruction";
  }
  return "?";
}

const char* to_string(OmegaCase c) noexcept {
  switch (c) {
    case OmegaCase::kappa_one_circle: return "kappa_one_circle";
    case OmegaCase::kappa_one_half_plane: return "kappa_one_half_plane";
    case OmegaCase::bounded_lens: return "bounded_lens";
    case OmegaCase::gamma_zero_curve: return "gamma_zero_curve";
    case OmegaCase::single_curve: return "single_curve";
    case OmegaCase::full_domain: return "full_domain";
    case OmegaCase::two_curve_slit: return "two_curve_slit";
    case OmegaCase::infty_half_strip: return "infty_half_strip";
    case OmegaCase::infty_slit: return "infty_slit";
    case OmegaCase::infty_bounded: return "infty_bounded";
  }
  return "?";
}

const char* to_string(Membership m) noexcept {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::outside: return "outside";
    case Membership::boundary: return "boundary";
  }
  return "?";
}

const char* to_string(CutKind kind) noexcept {
  switch (kind) {
    case CutKind::empty: return "empty";
    case CutKind::interval: return "interval";
    case CutKind::half_line: return "half_line";
    case CutKind::point: return "point";
  }
  return "?";
}

BranchClass classify(const Params& params) {
  const double g = params.gamma();
  if (params.is_infinite()) {
    if (g <= 0.25) return {true, Region::v, Failure::none};
    return {false, std::nullopt, Failure::two_to_one};
  }
  const double k = params.k();
  if (k > 0.0) {
    if (k < 1.0) {
      if (g <= 0.0) return {true, Region::i, Failure::none};
      return {false, std::nullopt, Failure::domain_obstruction};
    }
    if (g <= existence_threshold(k)) return {true, Region::ii, Failure::none};
    return {false, std::nullopt, Failure::two_to_one};
  }
  const bool small = k > -1.0;
  const bool exists = small ? g <= 1.0 / k : g <= existence_threshold(k);
  if (exists) return {true, small ? Region::iii : Region::iv, Failure::none};
  const BranchClass reduced = classify(reduce_negative_kappa(params).reduced);
  Failure failure = reduced.failure;
  if (failure == Failure::none) {
    failure = small ? Failure::domain_obstruction : Failure::two_to_one;
  }
  return {false, std::nullopt, failure};
}

BoundaryRoots boundary_roots(const Params& params, double theta) {
  const double k = params.k();
  const double a = params.a();
  const double th = std::abs(theta);
  if (a == 0.0) {
    const double r = th < scalar::kLimitWindow
                         ? k / (k + 1.0)
                         : std::sin(k * th) / std::sin((k + 1.0) * th);
    return {true, r, r};
  }
  const double b = scalar::b_theta(k, a, th);
  double disc = b * b - 4.0 * a * (a - 1.0);
  if (disc < 0.0) {
    if (disc < -1e-14 * std::max(1.0, b * b)) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      return {false, nan, nan};
    }
    disc = 0.0;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = 0.0;
  double r2 = 0.0;
  if (q != 0.0) {
    r1 = q / a;
    r2 = (a - 1.0) / q;
  }
  if (r1 > r2) std::swap(r1, r2);
  return {true, r1, r2};
}

double theta_star(const Params& params) {
  if (params.is_infinite()) throw Error(ErrorKind::not_applicable, "theta_*: kappa = inf");
  const double k = params.k();
  const double a = params.a();
  if (!(k > 0.0)) throw Error(ErrorKind::not_applicable, "theta_*: kappa must be positive");
  if (a < 0.0) {
    const double theta1 = kPi / (k + 1.0);
    return roots::bisect([&](double t) { return scalar::discriminant_d(k, a, t); }, 0.0,
                         theta1);
  }
  if (k > 1.0 && scalar::discriminant_at_zero(params) < 0.0) {
    const scalar::BProfile bp = scalar::b_sign_profile(k, a);
    const double lo = bp.zeros.empty() ? 0.0 : bp.zeros.back();
    const double d0 = scalar::discriminant_d(k, a, 0.0);
    auto fn = [&](double t) {
      return t < scalar::kLimitWindow ? d0 : scalar::discriminant_times_sin2(k, a, t);
    };
    return roots::bisect(fn, lo, kPi / k);
  }
  throw Error(ErrorKind::not_applicable, "theta_*: D has no zero for these parameters");
}

Complex boundary_point(const Params& params, double theta, Branch branch) {
  const BoundaryRoots roots = boundary_roots(params, theta);
  if (!roots.real) throw Error(ErrorKind::not_on_boundary, "boundary_point: complex root");
  const double r = branch == Branch::plus ? roots.r_plus : roots.r_minus;
  if (!(r > 0.0)) throw Error(ErrorKind::not_on_boundary, "boundary_point: root not positive");
  const double k = params.k();
  return {k * (r * std::cos(theta) - 1.0), k * r * std::sin(theta)};
}

double g_infty(double gamma, double y) { return std::cos(y) + 2.0 * gamma * y * std::sin(y); }

std::optional<std::pair<double, double>> boundary_infty(double gamma, double y) {
  y = std::abs(y);
  if (gamma == 0.0) {
    const double x = y < scalar::kLimitWindow ? -1.0 : -y * std::cos(y) / std::sin(y);
    return std::make_pair(x, x);
  }
  double disc;
  double c;
  if (y < scalar::kLimitWindow) {
    disc = (1.0 - 4.0 * gamma) / (gamma * gamma);
    c = 1.0 / gamma;
  } else {
    const double s = std::sin(y);
    const double g = g_infty(gamma, y);
    const double h = std::sin(0.5 * y);
    const double one_minus_g = 2.0 * h * h - 2.0 * gamma * y * s;
    disc = one_minus_g * (1.0 + g) / (gamma * gamma * s * s);
    c = y * y + y * std::cos(y) / (s * gamma);
  }
  if (disc < 0.0) return std::nullopt;
  const double b = 1.0 / gamma;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double x1 = q;
  double x2 = q != 0.0 ? c / q : 0.0;
  if (x1 > x2) std::swap(x1, x2);
  return std::make_pair(x1, x2);
}

double y_star(double gamma) {
  if (gamma >= 0.0 && gamma <= 0.25) {
    throw Error(ErrorKind::not_applicable, "y_*: g is monotone for 0 <= gamma <= 1/4");
  }
  if (gamma == 0.5) return 0.5 * kPi;
  auto gp = [gamma](double y) {
    return (2.0 * gamma - 1.0) * std::sin(y) + 2.0 * gamma * y * std::cos(y);
  };
  if (gamma > 0.5 || gamma < 0.0) return roots::bisect(gp, 0.5 * kPi, kPi);
  auto scaled = [&](double y) { return y < scalar::kLimitWindow ? 4.0 * gamma - 1.0 : gp(y) / y; };
  return roots::bisect(scaled, 0.0, 0.5 * kPi);
}

double y_zero(double gamma) {
  const double ys = y_star(gamma);
  if (gamma > 0.25) {
    return roots::bisect([gamma](double y) { return g_infty(gamma, y) - 1.0; }, ys, kPi);
  }
  return roots::bisect([gamma](double y) { return g_infty(gamma, y) + 1.0; }, 0.0, ys);
}

DomainDescription omega_description(const Params& params) {
  DomainDescription d{params, OmegaCase::full_domain, {}, {}, {}, {}, {}, {}, {}, {},
                      Complex(0.0), Complex(0.0), false};
  const double g = params.gamma();
  if (g != 0.0) d.pole = -1.0 / g;
  if (params.is_infinite()) {
    std::tie(d.alpha1, d.alpha2) = scalar::critical_points(params);
    if (g < 0.0) {
      d.kind = OmegaCase::infty_bounded;
      d.y_star = y_star(g);
      d.y0 = y_zero(g);
      d.bounded = true;
    } else if (g > 0.25) {
      d.kind = OmegaCase::infty_slit;
      d.y_star = y_star(g);
      d.y0 = y_zero(g);
    } else {
      d.kind = OmegaCase::infty_half_strip;
    }
    return d;
  }
  const double k = params.k();
  if (!(k > 0.0)) {
    throw Error(ErrorKind::not_applicable, "omega_description: kappa < 0 (use the reduction)");
  }
  std::tie(d.alpha1, d.alpha2) = scalar::critical_points(params);
  d.theta0 = kPi / k;
  d.theta1 = kPi / (k + 1.0);
  if (k == 1.0) {
    if (g == 0.0) {
      d.kind = OmegaCase::kappa_one_half_plane;
    } else if (g > 1.0) {
      d.kind = OmegaCase::full_domain;
    } else {
      d.kind = OmegaCase::kappa_one_circle;
      d.circle = Circle{-1.0 / g, std::sqrt(1.0 - g) / std::abs(g), g < 0.0};
      d.bounded = g < 0.0;
    }
    return d;
  }
  const double a = params.a();
  const Asymptote theta0_line{*d.theta0, (1.0 / a - k) * std::sin(*d.theta0)};
  if (a < 0.0) {
    d.kind = OmegaCase::bounded_lens;
    d.theta_star = theta_star(params);
    d.bounded = true;
  } else if (a == 0.0) {
    d.kind = OmegaCase::gamma_zero_curve;
    d.asymptotes.push_back({*d.theta1, -k * k * std::sin(*d.theta1) / (k + 1.0)});
  } else if (k < 1.0) {
    d.kind = a < 1.0 ? OmegaCase::single_curve : OmegaCase::full_domain;
  } else if (scalar::discriminant_at_zero(params) >= 0.0 || a <= 1.0) {
    d.kind = OmegaCase::single_curve;
    d.asymptotes.push_back(theta0_line);
  } else {
    d.kind = OmegaCase::two_curve_slit;
    d.theta_star = theta_star(params);
    d.asymptotes.push_back(theta0_line);
  }
  return d;
}

Membership membership(const DomainDescription& desc, Complex z, double band) {
  const Params& params = desc.params;
  if (!map::in_map_domain(params, z)) return Membership::outside;
  Verdict v(band);
  const double x = z.real();
  const double y = std::abs(z.imag());

  if (params.is_infinite()) {
    const double g = params.gamma();
    switch (desc.kind) {
      case OmegaCase::infty_half_strip: {
        v.greater(kPi, y);
        if (v.state() < 0) break;
        const auto xs = boundary_infty(g, y);
        v.greater(x, xs->second);
        break;
      }
      case OmegaCase::infty_slit: {
        v.greater(kPi, y);
        if (v.state() < 0) break;
        const int below = v.compare(*desc.y0, y);
        if (below > 0) break;
        const auto xs = boundary_infty(g, y);
        if (!xs) {
          v.merge(below);
          break;
        }
        v.merge(std::max(v.compare(xs->first, x), v.compare(x, xs->second)));
        break;
      }
      case OmegaCase::infty_bounded: {
        v.greater(*desc.y0, y);
        if (v.state() < 0) break;
        const auto xs = boundary_infty(g, y);
        if (!xs) {
          v.merge(0);
          break;
        }
        v.greater(x, xs->first).greater(xs->second, x);
        break;
      }
      default:
        break;
    }
    return to_membership(v.state());
  }

  if (desc.kind == OmegaCase::full_domain) return Membership::inside;
  if (desc.circle || desc.kind == OmegaCase::kappa_one_half_plane) {
    const double g = params.gamma();
    const double p = 1.0 + 2.0 * x + g * (x * x + y * y);
    const double scale = 1.0 + 2.0 * std::abs(x) + std::abs(g) * (x * x + y * y);
    v.greater(p / scale, 0.0);
    return to_membership(v.state());
  }

  const double k = params.k();
  const Complex u = 1.0 + z / k;
  const double r = std::abs(u);
  const double th = std::abs(std::arg(u));
  switch (desc.kind) {
    case OmegaCase::bounded_lens: {
      v.greater(*desc.theta_star, th);
      if (v.state() < 0) break;
      const BoundaryRoots rr = boundary_roots(params, th);
      if (!rr.real) {
        v.merge(0);
        break;
      }
      v.greater(r, rr.r_minus).greater(rr.r_plus, r);
      break;
    }
    case OmegaCase::gamma_zero_curve: {
      v.greater(*desc.theta1, th);
      if (v.state() <= 0) break;
      v.greater(r, boundary_roots(params, th).r_plus);
      break;
    }
    case OmegaCase::single_curve: {
      v.greater(std::min(*desc.theta0, kPi), th);
      if (v.state() <= 0) break;
      v.greater(r, boundary_roots(params, th).r_plus);
      break;
    }
    case OmegaCase::two_curve_slit: {
      v.greater(*desc.theta0, th);
      if (v.state() <= 0) break;
      if (v.compare(*desc.theta_star, th) > 0) break;
      const BoundaryRoots rr = boundary_roots(params, th);
      if (!rr.real) {
        v.merge(0);
        break;
      }
      const int low = std::min(v.compare(rr.r_minus, r), v.compare(r, 0.0));
      v.merge(std::max(low, v.compare(r, rr.r_plus)));
      break;
    }
    default:
      break;
  }
  return to_membership(v.state());
}

Membership membership(const Params& params, Complex z, double band) {
  if (params.is_finite() && params.k() < 0.0) {
    const Reduction red = reduce_negative_kappa(params);
    if (!map::in_map_domain(params, z)) return Membership::outside;
    return membership(omega_description(red.reduced), red.forward(z), band);
  }
  return membership(omega_description(params), z, band);
}

double CutSet::distance(Complex w) const {
  switch (kind) {
    case CutKind::empty:
      return kInf;
    case CutKind::half_line:
      if (w.real() <= hi) return std::abs(w.imag());
      return std::abs(w - Complex(hi, 0.0));
    case CutKind::interval:
    case CutKind::point: {
      const double c = std::clamp(w.real(), lo, hi);
      return std::abs(w - Complex(c, 0.0));
    }
  }
  return kInf;
}

CutSet cut_set(const Params& params) {
  if (!classify(params).exists) {
    throw Error(ErrorKind::not_applicable, "cut_set: main branch does not exist");
  }
  if (params.is_finite() && params.k() < 0.0) return cut_set(reduce_negative_kappa(params).reduced);
  const double g = params.gamma();
  const auto [a1, a2] = scalar::critical_points(params);
  auto f = [&](Complex alpha) { return map::f_eval(params, alpha.real()); };
  if (g < 0.0) return {CutKind::interval, f(a2), f(a1)};
  if (g == 0.0) return {CutKind::half_line, -kInf, f(a2)};
  if (params.is_finite() && params.k() == 1.0) {
    if (g == 1.0) return {CutKind::point, -1.0, -1.0};
    return {CutKind::interval, f(a1), f(a2)};
  }
  return {CutKind::half_line, -kInf, f(a2)};
}

std::vector<RealComponent> real_components(const Params& params) {
  if ((params.is_finite() && params.k() < 0.0) || !classify(params).exists) {
    throw Error(ErrorKind::not_applicable, "real_components: needs an existing branch, kappa > 0");
  }
  const double g = params.gamma();
  const auto [c1, c2] = scalar::critical_points(params);
  const double a1 = c1.real();
  const double a2 = c2.real();
  auto f = [&](double x) { return map::f_eval(params, x); };
  if (g < 0.0) {
    const double p = -1.0 / g;
    return {{a1, p, f(a1), kInf}, {p, a2, -kInf, f(a2)}};
  }
  if (params.is_finite() && params.k() == 1.0 && g > 0.0) {
    if (g == 1.0) return {{-kInf, -1.0, -kInf, -1.0}, {-1.0, kInf, -1.0, kInf}};
    return {{-kInf, a1, -kInf, f(a1)}, {a2, kInf, f(a2), kInf}};
  }
  return {{a2, kInf, f(a2), kInf}};
}

}  // namespace lt::domain
