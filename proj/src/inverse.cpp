#include "lambert_tsallis/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "lambert_tsallis/domain.hpp"
#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/roots.hpp"
#include "lambert_tsallis/scalar_analysis.hpp"
#include "lambert_tsallis/tsallis_map.hpp"

namespace lt::inverse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCutBand = 1e-12;
// Relative radius around a critical value where the square-root model seeds.
constexpr double kCriticalZone = 1e-3;
// Straight paths closer than this (relative to |w_t|) to the cut take a detour.
constexpr double kDetourRatio = 0.05;
constexpr double kStartRadius = 0.05;
constexpr int kMaxHalvings = 40;

struct Critical {
  double alpha;
  double value;   // f(α)
  double second;  // f''(α)
};

// Everything about (κ, γ) that one evaluation needs, built once.
struct Context {
  Params params;
  domain::DomainDescription desc;
  domain::CutSet cut;
  std::vector<Critical> critical;

  explicit Context(const Params& p)
      : params(p), desc(domain::omega_description(p)), cut(domain::cut_set(p)) {
    if (!scalar::critical_points_real(p)) return;
    const auto [c1, c2] = scalar::critical_points(p);
    for (double a : {c1.real(), c2.real()}) {
      if (!std::isfinite(a) || !map::in_map_domain(p, Complex(a))) continue;
      if (!critical.empty() && critical.back().alpha == a) continue;
      critical.push_back({a, map::f_eval(p, a), second_derivative(a)});
    }
  }

  // f''(α) = q'(α)·E'(α)/(1+γα)² because q(α) = 0.
  double second_derivative(double a) const {
    const double g = params.gamma();
    const double den = (1.0 + g * a) * (1.0 + g * a);
    if (params.is_infinite()) return (2.0 * g * a + 1.0) * std::exp(a) / den;
    const double k = params.k();
    const double e1 = std::pow(1.0 + a / k, k - 1.0);
    return (2.0 * g * a + 1.0 + 1.0 / k) * e1 / den;
  }

  bool admissible(Complex z) const {
    return domain::membership(desc, z) != domain::Membership::outside;
  }

  double residual(Complex z, Complex w) const {
    try {
      return std::abs(map::f_eval(params, z) - w) / std::max(1.0, std::abs(w));
    } catch (const Error&) {
      return kInf;
    }
  }
};

struct Solve {
  Complex z;
  double residual;
  int iterations;
  bool converged;
};

// Smallest residual that rounding in z allows: |f'(z)|·ulp(z) relative to |w|.
double rounding_floor(const Context& ctx, Complex z, Complex w) {
  try {
    const double eps = std::numeric_limits<double>::epsilon();
    return 8.0 * eps * std::abs(map::f_prime(ctx.params, z)) * std::max(1.0, std::abs(z)) /
           std::max(1.0, std::abs(w));
  } catch (const Error&) {
    return 0.0;
  }
}

// Damped Newton that never leaves Ω: a step is halved until the residual
// drops and the iterate stays admissible. Stops at tol or at the rounding
// floor, whichever is larger.
Solve newton(const Context& ctx, Complex z, Complex w, double tol, int max_iter) {
  Solve s{z, ctx.admissible(z) ? ctx.residual(z, w) : kInf, 0, false};
  if (!std::isfinite(s.residual)) return s;
  auto done = [&] { return s.residual <= std::max(tol, rounding_floor(ctx, s.z, w)); };
  while (!done() && s.iterations < max_iter) {
    ++s.iterations;
    Complex fz;
    Complex fp;
    try {
      fz = map::f_eval(ctx.params, s.z);
      fp = map::f_prime(ctx.params, s.z);
    } catch (const Error&) {
      return s;
    }
    if (fp == Complex(0.0)) return s;
    const Complex step = (fz - w) / fp;
    double lambda = 1.0;
    bool moved = false;
    for (int h = 0; h < kMaxHalvings; ++h, lambda *= 0.5) {
      const Complex zn = s.z - lambda * step;
      if (!ctx.admissible(zn)) continue;
      const double rn = ctx.residual(zn, w);
      if (rn < s.residual) {
        s.z = zn;
        s.residual = rn;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  s.converged = done();
  return s;
}

WResult to_result(const Solve& s, bool path_used, bool near_critical) {
  return {s.z, s.residual, s.iterations, path_used, near_critical};
}

std::optional<double> bracket_end(const Params& params, double w, double from, double toward,
                                  bool want_above) {
  // Walks from `from` toward `toward` (possibly infinite) until f crosses w.
  auto crossed = [&](double x) {
    const double v = map::f_eval(params, x);
    return want_above ? v > w : v < w;
  };
  if (std::isinf(toward)) {
    double step = std::max(1.0, std::abs(from));
    const double dir = toward > 0 ? 1.0 : -1.0;
    for (int i = 0; i < 1100; ++i, step *= 2.0) {
      const double x = from + dir * step;
      if (!std::isfinite(x)) return std::nullopt;
      if (crossed(x)) return x;
    }
    return std::nullopt;
  }
  double gap = toward - from;
  for (int i = 0; i < 1100; ++i) {
    gap *= 0.5;
    const double x = toward - gap;
    if (x == toward) return std::nullopt;
    if (crossed(x)) return x;
  }
  return std::nullopt;
}

std::optional<WResult> solve_real(const Context& ctx, double w) {
  const Params& p = ctx.params;
  for (const domain::RealComponent& c : domain::real_components(p)) {
    if (!(w > c.w_lo && w < c.w_hi)) continue;
    double lo = c.lo;
    double hi = c.hi;
    if (std::isinf(c.w_lo)) {
      const auto x = bracket_end(p, w, c.hi, c.lo, false);
      if (!x) return std::nullopt;
      lo = *x;
    }
    if (std::isinf(c.w_hi)) {
      const auto x = bracket_end(p, w, c.lo, c.hi, true);
      if (!x) return std::nullopt;
      hi = *x;
    }
    const double x = roots::safe_newton([&](double t) { return map::f_eval(p, t) - w; },
                                        [&](double t) { return map::f_prime(p, t); }, lo, hi);
    return WResult{Complex(x, 0.0), ctx.residual(Complex(x), Complex(w)), 0, false, false};
  }
  return std::nullopt;
}

std::optional<Solve> solve_near_critical(const Context& ctx, Complex w, const EvalOptions& opts) {
  for (const Critical& c : ctx.critical) {
    const double zone = kCriticalZone * std::max(1.0, std::abs(c.value));
    if (std::abs(w - c.value) > zone || c.second == 0.0) continue;
    const Complex d = std::sqrt(2.0 * (w - c.value) / c.second);
    std::optional<Solve> best;
    for (double sign : {1.0, -1.0}) {
      const Solve s = newton(ctx, c.alpha + sign * d, w, opts.tol, opts.max_iter);
      if (s.converged) return s;
      if (!best || s.residual < best->residual) best = s;
    }
    if (best && best->residual <= kCriticalTol) return best;
  }
  return std::nullopt;
}

// Waypoints of the tracking path for a given step budget.
std::vector<Complex> waypoints(const Context& ctx, Complex w, int steps) {
  const double mag = std::abs(w);
  bool detour = false;
  for (int j = 1; j <= 64; ++j) {
    const Complex wt = w * (j / 64.0);
    if (ctx.cut.distance(wt) < kDetourRatio * std::abs(wt)) {
      detour = true;
      break;
    }
  }
  const Complex first = detour ? Complex(0.0, w.imag() < 0.0 ? -mag : mag) : w;
  std::vector<Complex> pts;
  const double t0 = std::min(1.0, kStartRadius / mag);
  for (int j = 0; j <= steps; ++j) {
    pts.push_back(first * std::pow(t0, 1.0 - static_cast<double>(j) / steps));
  }
  if (detour) {
    for (int j = 1; j <= steps; ++j) {
      const double s = static_cast<double>(j) / steps;
      pts.push_back(first + (w - first) * s);
    }
  }
  pts.back() = w;
  return pts;
}

std::optional<Solve> track(const Context& ctx, Complex w, int steps, const EvalOptions& opts) {
  const std::vector<Complex> pts = waypoints(ctx, w, steps);
  Solve s = newton(ctx, w_seed(ctx.params, pts.front()), pts.front(), opts.tol, opts.max_iter);
  if (!s.converged) return std::nullopt;
  int total = s.iterations;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    Complex guess = s.z;
    try {
      const Complex fp = map::f_prime(ctx.params, s.z);
      if (fp != Complex(0.0)) guess += (pts[j] - pts[j - 1]) / fp;
    } catch (const Error&) {
    }
    if (!ctx.admissible(guess)) guess = s.z;
    s = newton(ctx, guess, pts[j], opts.tol, opts.max_iter);
    total += s.iterations;
    if (!s.converged) return std::nullopt;
  }
  s.iterations = total;
  return s;
}

WResult continuation(const Context& ctx, Complex w, const EvalOptions& opts) {
  for (int n = std::max(1, opts.continuation_steps); n <= kMaxContinuationSteps; n *= 2) {
    if (const auto s = track(ctx, w, n, opts)) return to_result(*s, true, false);
  }
  throw Error(ErrorKind::convergence,
              "w_eval: continuation failed for " + ctx.params.to_string());
}

void check_options(const EvalOptions& opts) {
  if (!(opts.tol > 0.0) || opts.max_iter < 1) {
    throw Error(ErrorKind::invalid_parameter, "w_eval: tol must be > 0 and max_iter >= 1");
  }
}

void require_branch(const Params& params) {
  if (!domain::classify(params).exists) {
    throw Error(ErrorKind::classification,
                "w_eval: no main branch for " + params.to_string());
  }
}

WResult eval_upper(const Context& ctx, Complex w, const EvalOptions& opts) {
  const double scale = std::max(1.0, std::abs(w));
  if (ctx.cut.distance(w) <= kCutBand * scale) {
    for (const Critical& c : ctx.critical) {
      if (std::abs(w - c.value) <= kCutBand * scale) {
        return {Complex(c.alpha), ctx.residual(Complex(c.alpha), w), 0, false, true};
      }
    }
    throw Error(ErrorKind::cut, "w_eval: w lies in the cut set");
  }
  const Params& p = ctx.params;
  if (p.is_finite() && p.k() == 1.0) {
    const Complex z = w_closed_form_k1(p.gamma(), w);
    const double r = ctx.residual(z, w);
    if (r <= opts.tol) return {z, r, 0, false, false};
    const Solve s = newton(ctx, z, w, opts.tol, opts.max_iter);
    if (s.converged) return to_result(s, false, false);
  }
  if (w.imag() == 0.0) {
    if (const auto r = solve_real(ctx, w.real())) return *r;
  }
  if (const auto s = solve_near_critical(ctx, w, opts)) {
    return to_result(*s, false, true);
  }
  const Solve direct = newton(ctx, w_seed(p, w), w, opts.tol, opts.max_iter);
  if (direct.converged) return to_result(direct, false, false);
  return continuation(ctx, w, opts);
}

WResult eval_positive(const Params& params, Complex w, const EvalOptions& opts) {
  const Context ctx(params);
  if (w.imag() < 0.0) {
    WResult r = eval_upper(ctx, std::conj(w), opts);
    r.z = std::conj(r.z);
    return r;
  }
  return eval_upper(ctx, w, opts);
}

}  // namespace

WResult w_eval(const Params& params, Complex w, const EvalOptions& opts) {
  check_options(opts);
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw Error(ErrorKind::invalid_parameter, "w_eval: w must be finite");
  }
  require_branch(params);
  if (params.is_finite() && params.k() < 0.0) {
    const Reduction red = reduce_negative_kappa(params);
    WResult r = eval_positive(red.reduced, w, opts);
    r.z = red.backward(r.z);
    try {
      r.residual = std::abs(map::f_eval(params, r.z) - w) / std::max(1.0, std::abs(w));
    } catch (const Error&) {
    }
    return r;
  }
  return eval_positive(params, w, opts);
}

Complex w_closed_form_k1(double gamma, Complex w) {
  const Complex lin = 1.0 - gamma * w;
  Complex root;
  if (gamma == 0.0) {
    root = 2.0 * std::sqrt(w + 0.25);
  } else {
    // (1-γw)² + 4w = γ²(w - w₁)(w - w₂) with w₁,₂ the critical values.
    const double b = (4.0 - 2.0 * gamma) / (gamma * gamma);
    const double disc = b * b - 4.0 / (gamma * gamma);
    const double s = std::sqrt(std::max(disc, 0.0));
    const double q = -0.5 * (b + std::copysign(s, b));
    const double w1 = q;
    const double w2 = 1.0 / (gamma * gamma * q);
    root = std::abs(gamma) * std::sqrt(w - w1) * std::sqrt(w - w2);
  }
  // z = (-(1-γw) + root)/2, rewritten to avoid cancellation at small w.
  const Complex plus = -lin + root;
  const Complex minus = -lin - root;
  if (std::abs(minus) > std::abs(plus) && minus != Complex(0.0)) {
    return -2.0 * w / minus;
  }
  return 0.5 * plus;
}

SeriesCoefficients series_coefficients(const Params& params) {
  // f(z) = z + b2 z² + b3 z³ + ..., reverted.
  const double g = params.gamma();
  const double half = params.is_infinite() ? 0.5 : (params.k() - 1.0) / (2.0 * params.k());
  const double b2 = 1.0 - g;
  const double b3 = half - g + g * g;
  return {-b2, 2.0 * b2 * b2 - b3};
}

Complex w_seed(const Params& params, Complex w) {
  if (std::abs(w) > kSeedRadius) return w;
  const SeriesCoefficients c = series_coefficients(params);
  return w * (1.0 + w * (c.c2 + w * c.c3));
}

WResult w_continuation(const Params& params, Complex w, const EvalOptions& opts) {
  check_options(opts);
  require_branch(params);
  if (params.is_finite() && params.k() < 0.0) {
    const Reduction red = reduce_negative_kappa(params);
    WResult r = w_continuation(red.reduced, w, opts);
    r.z = red.backward(r.z);
    return r;
  }
  const Context ctx(params);
  const double scale = std::max(1.0, std::abs(w));
  if (ctx.cut.distance(w) <= kCutBand * scale) {
    throw Error(ErrorKind::cut, "w_continuation: w lies in the cut set");
  }
  if (w == Complex(0.0)) return {Complex(0.0), 0.0, 0, false, false};
  return continuation(ctx, w, opts);
}

}  // namespace lt::inverse
