#include "lambert_tsallis/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "json.hpp"
#include "lambert_tsallis/boundary_export.hpp"
#include "lambert_tsallis/domain.hpp"
#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/inverse.hpp"
#include "lambert_tsallis/reduction.hpp"
#include "lambert_tsallis/roots.hpp"
#include "lambert_tsallis/scalar_analysis.hpp"
#include "lambert_tsallis/tsallis_map.hpp"

namespace lt::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kStartSamples = 16;
constexpr int kMaxSamples = 1024;
constexpr double kIllConditioned = 1e-8;

using Path = std::function<Complex(double)>;

Piece segment(PieceKind kind, Complex a, Complex b) {
  return {kind, [=](double s) { return a + (b - a) * s; }};
}

// Geometric spacing in the distance from `anchor`, which lies on the line
// through a and b beyond a.
Piece geometric(PieceKind kind, Complex anchor, Complex a, Complex b) {
  const Complex da = a - anchor;
  const double ratio = std::abs(b - anchor) / std::abs(da);
  return {kind, [=](double s) {
            if (s >= 1.0) return b;
            return anchor + da * std::pow(ratio, s);
          }};
}

Piece arc(PieceKind kind, Complex center, double radius, double from, double to) {
  return {kind, [=](double s) { return center + std::polar(radius, from + (to - from) * s); }};
}

Piece curve(Path path) { return {PieceKind::boundary, std::move(path)}; }

// Real-axis run from a to b (a < b), indented above `pole` when it lies inside.
// Pieces are geometric toward the pole and toward `anchor_left`.
void axis(std::vector<Piece>& out, double a, double b, std::optional<double> pole, double delta) {
  auto plain = [&](double lo, double hi) {
    const double len = hi - lo;
    if (len > 64.0) {
      out.push_back(geometric(PieceKind::axis, Complex(lo - 1.0), Complex(lo), Complex(hi)));
    } else {
      out.push_back(segment(PieceKind::axis, Complex(lo), Complex(hi)));
    }
  };
  if (pole && *pole > a && *pole < b) {
    const double p = *pole;
    out.push_back(geometric(PieceKind::axis, Complex(p), Complex(p - delta), Complex(a)));
    // geometric() runs from its `a` argument; flip it to travel left to right
    Path toward = out.back().at;
    out.back().at = [toward](double s) { return toward(1.0 - s); };
    out.push_back(arc(PieceKind::small, Complex(p), delta, kPi, 0.0));
    out.push_back(geometric(PieceKind::axis, Complex(p), Complex(p + delta), Complex(b)));
    return;
  }
  plain(a, b);
}

// Stable roots (smaller, larger) of a r² + b r + a - 1 with D clamped at 0.
std::pair<double, double> radii(double k, double a, double theta) {
  const double b = scalar::b_theta(k, a, theta);
  const double d = std::max(0.0, b * b - 4.0 * a * (a - 1.0));
  const double q = -0.5 * (b + std::copysign(std::sqrt(d), b));
  double r1 = q / a;
  double r2 = q != 0.0 ? (a - 1.0) / q : r1;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

double r_outer(double k, double a, double theta) {
  if (a == 0.0) {
    if (theta < scalar::kLimitWindow) return k / (k + 1.0);
    return std::sin(k * theta) / std::sin((k + 1.0) * theta);
  }
  return radii(k, a, theta).second;
}

// Root of fn on [lo, hi] by scanning for the first sign change from lo.
std::optional<double> first_crossing(const std::function<double(double)>& fn, double lo, double hi,
                                     int scan = 4096) {
  double prev = lo;
  double fprev = fn(lo);
  for (int i = 1; i <= scan; ++i) {
    const double t = lo + (hi - lo) * i / scan;
    const double ft = fn(t);
    if (roots::sign_of(ft) != roots::sign_of(fprev) && std::isfinite(ft)) {
      return roots::bisect(fn, prev, t);
    }
    prev = t;
    fprev = ft;
  }
  return std::nullopt;
}

double just_below(double x) { return x * (1.0 - 1e-13); }

// Log-linear parameter from t0 (s = 0) to t1 (s = 1) in the distance from `edge`.
double toward_edge(double edge, double t0, double t1, double s) {
  const double d0 = edge - t0;
  const double d1 = edge - t1;
  return edge - d0 * std::pow(d1 / d0, s);
}

Complex z_of(double k, double r, double theta) { return k * (std::polar(r, theta) - 1.0); }

struct Builder {
  const Params& params;
  double far;
  double delta;
  std::vector<Piece> pieces;

  void kappa_one() {
    const double g = params.gamma();
    if (g == 0.0) {
      axis(pieces, -0.5, -0.5 + far, std::nullopt, delta);
      pieces.push_back(arc(PieceKind::far, Complex(-0.5), far, 0.0, 0.5 * kPi));
      pieces.push_back(geometric(PieceKind::boundary, Complex(-0.5, -1.0), Complex(-0.5, far),
                                 Complex(-0.5, 0.0)));
      // from the top down: run geometric from the bottom, reversed
      const Path up = geometric(PieceKind::boundary, Complex(-0.5, -1.0), Complex(-0.5, 0.0),
                                Complex(-0.5, far)).at;
      pieces.back().at = [up](double s) { return up(1.0 - s); };
      return;
    }
    const double c = -1.0 / g;
    if (g >= 1.0) {
      axis(pieces, c - far, c + far, c, delta);
      pieces.push_back(arc(PieceKind::far, Complex(c), far, 0.0, kPi));
      return;
    }
    const double rho = std::sqrt(1.0 - g) / std::abs(g);
    if (g < 0.0) {
      axis(pieces, c - rho, c + rho, c, std::min(delta, 0.25 * rho));
      pieces.push_back(arc(PieceKind::boundary, Complex(c), rho, 0.0, kPi));
      return;
    }
    axis(pieces, c + rho, c + far, std::nullopt, delta);
    pieces.push_back(arc(PieceKind::far, Complex(c), far, 0.0, kPi));
    axis(pieces, c - far, c - rho, std::nullopt, delta);
    pieces.push_back(arc(PieceKind::boundary, Complex(c), rho, kPi, 0.0));
  }

  void lens() {
    const double k = params.k();
    const double a = params.a();
    const double ts = domain::theta_star(params);
    const auto [r_small, r_big] = radii(k, a, 0.0);
    const double left = z_of(k, r_small, 0.0).real();
    const double right = z_of(k, r_big, 0.0).real();
    const double pole = -1.0 / params.gamma();
    const double d = std::min(delta, 0.25 * std::min(pole - left, right - pole));
    axis(pieces, left, right, pole, d);
    pieces.push_back(curve([=](double s) {
      const double t = 1.0 - 2.0 * s;
      const double theta = ts * (1.0 - t * t);
      const auto [lo, hi] = radii(k, a, theta);
      return z_of(k, t >= 0.0 ? hi : lo, theta);
    }));
  }

  void outer_curve() {
    const double k = params.k();
    const double a = params.a();
    const double lu = far / k;
    const double theta_max = a == 0.0 ? kPi / (k + 1.0) : std::min(kPi / k, kPi);
    const double start = z_of(k, r_outer(k, a, 0.0), 0.0).real();
    axis(pieces, start, k * (lu - 1.0), std::nullopt, delta);
    const bool ray = k < 1.0 && a > 0.0;
    if (!ray) {
      const auto tr = first_crossing([&](double t) { return r_outer(k, a, t) - lu; }, 0.0,
                                     just_below(theta_max));
      if (!tr) throw Error(ErrorKind::construction, "contour: boundary never reaches the far arc");
      const double theta_r = *tr;
      pieces.push_back(arc(PieceKind::far, Complex(-k), far, 0.0, theta_r));
      pieces.push_back(curve([=](double s) {
        const double theta = toward_edge(theta_max, theta_r, 0.0, s);
        return z_of(k, r_outer(k, a, theta), theta);
      }));
      return;
    }
    // 0 < κ < 1, 0 < a < 1: the curve ends at the pole on the negative axis
    const double p = -1.0 / params.gamma();
    pieces.push_back(arc(PieceKind::far, Complex(-k), far, 0.0, kPi));
    const double d = std::min(delta, 0.25 * std::abs(p + k));
    pieces.push_back(geometric(PieceKind::boundary, Complex(p), Complex(-k * lu - k), Complex(p - d)));
    {
      const Path in = geometric(PieceKind::boundary, Complex(p), Complex(p - d),
                                Complex(-k * lu - k)).at;
      pieces.back().at = [in](double s) { return in(1.0 - s); };
    }
    auto dist = [&](double t) { return std::abs(z_of(k, r_outer(k, a, t), t) - p) - d; };
    double lo = 0.5 * kPi;
    while (dist(lo) <= 0.0 && lo > 1e-6) lo *= 0.5;
    const double theta_d = roots::bisect(dist, lo, kPi);
    const double phi = std::arg(z_of(k, r_outer(k, a, theta_d), theta_d) - p);
    pieces.push_back(arc(PieceKind::small, Complex(p), d, kPi, phi));
    pieces.push_back(curve([=](double s) {
      const double theta = theta_d * (1.0 - s);
      return z_of(k, r_outer(k, a, theta), theta);
    }));
  }

  void full_sector() {
    const double k = params.k();
    const double a = params.a();
    const double lu = far / k;
    const double eps = std::min(delta / k, 0.25);
    std::optional<double> pole;
    if (a != 1.0) pole = -1.0 / params.gamma();
    double d = delta;
    if (pole) d = std::min(d, 0.25 * std::min(std::abs(*pole + k - k * eps), 1.0));
    axis(pieces, k * (eps - 1.0), k * (lu - 1.0), pole, d);
    pieces.push_back(arc(PieceKind::far, Complex(-k), far, 0.0, kPi));
    pieces.push_back(geometric(PieceKind::axis, Complex(-k), Complex(-k - far), Complex(-k - k * eps)));
    {
      const Path in = geometric(PieceKind::axis, Complex(-k), Complex(-k - k * eps),
                                Complex(-k - far)).at;
      pieces.back().at = [in](double s) { return in(1.0 - s); };
    }
    pieces.push_back(arc(PieceKind::small, Complex(-k), k * eps, kPi, 0.0));
  }

  void two_curve() {
    const double k = params.k();
    const double a = params.a();
    const double lu = far / k;
    const double eps = std::min(delta / k, 0.25);
    const double ts = domain::theta_star(params);
    const double theta0 = kPi / k;
    const double pole = -1.0 / params.gamma();
    axis(pieces, k * (eps - 1.0), k * (lu - 1.0), pole,
         std::min(delta, 0.25 * (pole + k - k * eps)));
    const auto tr = first_crossing([&](double t) { return radii(k, a, t).second - lu; }, ts,
                                   just_below(theta0));
    const auto te = first_crossing([&](double t) { return radii(k, a, t).first - eps; }, ts,
                                   just_below(theta0));
    if (!tr || !te) throw Error(ErrorKind::construction, "contour: slit curves not bracketed");
    const double theta_r = *tr;
    const double theta_e = *te;
    pieces.push_back(arc(PieceKind::far, Complex(-k), far, 0.0, theta_r));
    pieces.push_back(curve([=](double s) {
      const double t = 1.0 - s;
      const double theta = ts + (theta_r - ts) * t * t;
      return z_of(k, radii(k, a, theta).second, theta);
    }));
    pieces.push_back(curve([=](double s) {
      const double theta = ts + (theta_e - ts) * s * s;
      return z_of(k, radii(k, a, theta).first, theta);
    }));
    pieces.push_back(arc(PieceKind::small, Complex(-k), k * eps, theta_e, 0.0));
  }

  // κ = ∞ boundary x₁,₂(y) with the clamp at the junction.
  static double half_width(double g, double y) {
    const double ycot = y < scalar::kLimitWindow ? 1.0 : y * std::cos(y) / std::sin(y);
    const double h = 1.0 / (4.0 * g * g) - y * y - ycot / g;
    return std::sqrt(std::max(0.0, h));
  }

  static double x_branch(double g, double y, bool upper) {
    if (g == 0.0) return y < scalar::kLimitWindow ? -1.0 : -y * std::cos(y) / std::sin(y);
    const double c = -0.5 / g;
    const double w = half_width(g, y);
    return upper ? c + w : c - w;
  }

  void infinite() {
    const double g = params.gamma();
    const auto kind = domain::omega_description(params).kind;
    const double top = just_below(kPi);
    auto y_at = [&](bool upper, double target, double lo) {
      const auto y = first_crossing([&](double t) { return x_branch(g, t, upper) - target; }, lo,
                                    top);
      if (!y) throw Error(ErrorKind::construction, "contour: curve does not reach x = far");
      return *y;
    };
    if (kind == OmegaCase_bounded()) {
      const double y0 = domain::y_zero(g);
      const double left = x_branch(g, 0.0, false);
      const double right = x_branch(g, 0.0, true);
      const double p = -1.0 / g;
      axis(pieces, left, right, p, std::min(delta, 0.25 * std::min(p - left, right - p)));
      pieces.push_back(curve([=](double s) {
        const double t = 1.0 - 2.0 * s;
        const double y = y0 * (1.0 - t * t);
        return Complex(x_branch(g, y, t >= 0.0), y);
      }));
      return;
    }
    if (kind == domain::OmegaCase::infty_half_strip) {
      const double start = x_branch(g, 0.0, true);
      const double yr = y_at(true, far, 0.0);
      axis(pieces, start, far, std::nullopt, delta);
      pieces.push_back(segment(PieceKind::far, Complex(far), Complex(far, yr)));
      pieces.push_back(curve([=](double s) {
        const double y = toward_edge(kPi, yr, 0.0, s);
        return Complex(x_branch(g, y, true), y);
      }));
      return;
    }
    const double y0 = domain::y_zero(g);
    const double yr = y_at(true, far, y0);
    const double yl = y_at(false, -far, y0);
    const double p = -1.0 / g;
    axis(pieces, -far, far, p, std::min(delta, 0.25));
    pieces.push_back(segment(PieceKind::far, Complex(far), Complex(far, yr)));
    pieces.push_back(curve([=](double s) {
      const double t = 1.0 - s;
      const double y = y0 + (yr - y0) * t * t;
      return Complex(x_branch(g, y, true), y);
    }));
    pieces.push_back(curve([=](double s) {
      const double y = y0 + (yl - y0) * s * s;
      return Complex(x_branch(g, y, false), y);
    }));
    pieces.push_back(segment(PieceKind::far, Complex(-far, yl), Complex(-far)));
  }

  static domain::OmegaCase OmegaCase_bounded() { return domain::OmegaCase::infty_bounded; }
};

bool is_near_integer(double v, double tol) { return std::abs(v - std::round(v)) < tol; }

struct Node {
  double s;
  Complex z;
  Complex f;
  Complex fp;
};

Node node(const Contour& c, const Piece& piece, double s) {
  const Complex z = piece.at(s);
  return {s, z, f_upper(c.params, z), f_prime_upper(c.params, z)};
}

// Adaptive trapezoid for ∫ f'/(f - w0) dz with one Richardson step per leaf.
struct Adaptive {
  const Contour& contour;
  const Piece& piece;
  Complex w0;
  double closest = std::numeric_limits<double>::infinity();
  int leaves = 0;
  bool resolved = true;

  Complex trap(const Node& a, const Node& b) const {
    return 0.5 * (a.fp / (a.f - w0) + b.fp / (b.f - w0)) * (b.z - a.z);
  }

  Complex run(const Node& a, const Node& b, Complex whole, int depth) {
    const Node m = node(contour, piece, 0.5 * (a.s + b.s));
    closest = std::min(closest, std::abs(m.f - w0));
    const Complex two = trap(a, m) + trap(m, b);
    const double turn = std::abs(std::arg((b.f - w0) / (a.f - w0)));
    if ((std::abs(two - whole) < kLeafTol && turn < 0.5) || depth >= kMaxDepth) {
      if (depth >= kMaxDepth) resolved = false;
      ++leaves;
      return two + (two - whole) / 3.0;
    }
    return run(a, m, trap(a, m), depth + 1) + run(m, b, trap(m, b), depth + 1);
  }

  static constexpr double kLeafTol = 1e-7;
  static constexpr int kMaxDepth = 48;
};

struct Quadrature {
  double raw;
  int leaves;
  bool resolved;
  double closest;
};

Quadrature quadrature(const Contour& c, Complex w0, int n) {
  Complex sum = 0.0;
  Quadrature q{0.0, 0, true, std::numeric_limits<double>::infinity()};
  for (const Piece& piece : c.pieces) {
    Adaptive ad{c, piece, w0};
    Node prev = node(c, piece, 0.0);
    ad.closest = std::abs(prev.f - w0);
    for (int j = 1; j <= n; ++j) {
      const Node next = node(c, piece, static_cast<double>(j) / n);
      ad.closest = std::min(ad.closest, std::abs(next.f - w0));
      sum += ad.run(prev, next, ad.trap(prev, next), 0);
      prev = next;
    }
    q.leaves += ad.leaves;
    q.resolved = q.resolved && ad.resolved;
    q.closest = std::min(q.closest, ad.closest);
  }
  q.raw = sum.imag() / (2.0 * kPi);
  return q;
}

bool piece_clear(const Contour& c, const Piece& piece, double big, double tiny,
                 const std::vector<Complex>& probes) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  const Complex f0 = f_upper(c.params, piece.at(0.5));
  double spread = 0.0;
  for (int j = 0; j <= 64; ++j) {
    const Complex f = f_upper(c.params, piece.at(j / 64.0));
    lo = std::min(lo, std::abs(f));
    hi = std::max(hi, std::abs(f));
    spread = std::max(spread, std::abs(f - f0));
  }
  if (lo > big || hi < tiny) return true;
  if (piece.kind != PieceKind::small) return false;
  // removable point: a tiny image far from every probe
  double gap = std::numeric_limits<double>::infinity();
  for (Complex w : probes) gap = std::min(gap, std::abs(f0 - w));
  return spread < 0.25 * gap;
}

double initial_far(const Params& params) {
  double scale = 1.0;
  const auto [a1, a2] = scalar::critical_points(params);
  for (Complex a : {a1, a2}) {
    if (std::isfinite(a.real())) scale = std::max(scale, std::abs(a));
  }
  if (params.gamma() != 0.0) scale = std::max(scale, std::abs(1.0 / params.gamma()));
  if (params.is_finite()) scale = std::max(scale, params.k());
  return 4.0 * scale + 8.0;
}

}  // namespace

std::vector<Complex> Contour::polyline(int n) const {
  std::vector<Complex> out;
  for (const Piece& piece : pieces) {
    for (int j = 0; j < n; ++j) out.push_back(piece.at(static_cast<double>(j) / n));
  }
  out.push_back(out.front());
  return out;
}

Complex f_upper(const Params& params, Complex z) {
  if (params.is_infinite()) return map::f_eval(params, z);
  const double k = params.k();
  const Complex u = 1.0 + z / k;
  const double theta = std::atan2(std::abs(u.imag()), u.real());
  const Complex e = std::polar(std::pow(std::abs(u), k), k * theta);
  return z / (1.0 + params.gamma() * z) * e;
}

Complex f_prime_upper(const Params& params, Complex z) {
  const Complex den = 1.0 + params.gamma() * z;
  const Complex q = scalar::q_poly(params, z);
  if (params.is_infinite()) return q * std::exp(z) / (den * den);
  const double k = params.k();
  const Complex u = 1.0 + z / k;
  const double theta = std::atan2(std::abs(u.imag()), u.real());
  const Complex e = std::polar(std::pow(std::abs(u), k - 1.0), (k - 1.0) * theta);
  return q * e / (den * den);
}

Contour build_contour(const Params& params, double far, double delta) {
  if (!(far > 0.0) || !(delta > 0.0)) {
    throw Error(ErrorKind::construction, "build_contour: far and delta must be positive");
  }
  if (params.is_finite() && !(params.k() > 0.0)) {
    throw Error(ErrorKind::construction, "build_contour: kappa < 0 (use the reduction)");
  }
  Builder b{params, far, delta, {}};
  if (params.is_infinite()) {
    b.infinite();
  } else if (params.k() == 1.0) {
    b.kappa_one();
  } else {
    switch (domain::omega_description(params).kind) {
      case domain::OmegaCase::bounded_lens: b.lens(); break;
      case domain::OmegaCase::gamma_zero_curve:
      case domain::OmegaCase::single_curve: b.outer_curve(); break;
      case domain::OmegaCase::full_domain: b.full_sector(); break;
      case domain::OmegaCase::two_curve_slit: b.two_curve(); break;
      default: throw Error(ErrorKind::construction, "build_contour: unexpected case");
    }
  }
  return Contour{params, far, delta, std::move(b.pieces)};
}

double pole_delta(const Params& params, double probe_bound) {
  const double g = params.gamma();
  if (!(g < 0.0) || params.is_infinite()) return 1e-3;
  const double k = params.k();
  const double a = k * g;
  const double first = std::pow((a - 1.0) / (2.0 * a), k) / (2.0 * g * g * probe_bound);
  return std::min({first, 1.0 / (2.0 * std::abs(g)), 0.5 * k * std::abs(1.0 - 1.0 / a)});
}

Contour contour_for_probes(const Params& params, const std::vector<Complex>& probes) {
  double big = 0.0;
  double tiny = std::numeric_limits<double>::infinity();
  for (Complex w : probes) {
    big = std::max(big, std::abs(w));
    tiny = std::min(tiny, std::abs(w));
  }
  big *= 2.0;
  tiny *= 0.5;
  double far = initial_far(params);
  double delta = std::min(1e-3, pole_delta(params, big));
  for (int round = 0; round < 200; ++round) {
    const Contour c = build_contour(params, far, delta);
    bool far_ok = true;
    bool small_ok = true;
    for (const Piece& piece : c.pieces) {
      if (piece.kind == PieceKind::far && !piece_clear(c, piece, big, tiny, probes)) far_ok = false;
      if (piece.kind == PieceKind::small && !piece_clear(c, piece, big, tiny, probes)) {
        small_ok = false;
      }
    }
    if (far_ok && small_ok) return c;
    if (!far_ok) far *= 2.0;
    if (!small_ok) delta *= 0.5;
    if (far > 1e300 || delta < 1e-300) break;
  }
  throw Error(ErrorKind::construction, "contour_for_probes: no admissible far/delta for " +
                                           params.to_string());
}

std::vector<Winding> winding_numbers(const Contour& contour, const std::vector<Complex>& probes) {
  std::vector<Winding> out;
  for (Complex w0 : probes) {
    double previous = std::nan("");
    bool settled = false;
    for (int n = kStartSamples; n <= kMaxSamples; n *= 2) {
      const Quadrature q = quadrature(contour, w0, n);
      if (q.closest < kIllConditioned) {
        throw Error(ErrorKind::ill_conditioned, "winding_number: probe on the image curve");
      }
      if (q.resolved && std::abs(q.raw - previous) < 0.01 && is_near_integer(q.raw, 0.05)) {
        out.push_back({w0, q.raw, static_cast<int>(std::lround(q.raw)), q.leaves});
        settled = true;
        break;
      }
      previous = q.raw;
    }
    if (!settled) {
      throw Error(ErrorKind::under_resolved,
                  "winding_number: quadrature did not settle for " + contour.params.to_string());
    }
  }
  return out;
}

Winding winding_number(const Contour& contour, Complex probe) {
  return winding_numbers(contour, {probe}).front();
}

std::vector<Complex> default_probes() {
  std::vector<Complex> out;
  for (double m : {0.3, 1.5, 6.0}) {
    for (double phi : {kPi / 12, kPi / 4, kPi / 2, 3 * kPi / 4, 11 * kPi / 12}) {
      out.push_back(std::polar(m, phi));
    }
  }
  return out;
}

BijectivityProbe probe_bijectivity(const Params& params) {
  if (params.is_finite() && params.k() < 0.0) {
    return probe_bijectivity(reduce_negative_kappa(params).reduced);
  }
  const std::vector<Complex> probes = default_probes();
  const Contour c = contour_for_probes(params, probes);
  BijectivityProbe out{true, {}, boundary_imag(c)};
  if (out.boundary_imag <= kBoundaryRealTol) {
    out.windings = winding_numbers(c, probes);
  } else {
    // the image curve leaves ℝ and may pass through probes; keep the ones that resolve
    out.bijective = false;
    for (Complex w0 : probes) {
      try {
        out.windings.push_back(winding_number(c, w0));
      } catch (const Error&) {
      }
    }
  }
  for (const Winding& w : out.windings) {
    if (w.value != 1) out.bijective = false;
  }
  return out;
}

double boundary_imag(const Contour& contour, int n) {
  double worst = 0.0;
  for (const Piece& piece : contour.pieces) {
    if (piece.kind != PieceKind::axis && piece.kind != PieceKind::boundary) continue;
    for (int j = 0; j <= n; ++j) {
      const Complex f = f_upper(contour.params, piece.at(static_cast<double>(j) / n));
      worst = std::max(worst, std::abs(f.imag()) / std::max(1.0, std::abs(f)));
    }
  }
  return worst;
}

namespace {

// Bounding box of Ω ∩ ℂ⁺ near the origin: the contour with a modest far size.
struct Box {
  double x0, x1, y1;
};

Box sample_box(const Params& params) {
  const double far = initial_far(params);
  const Contour c = build_contour(params, far, 1e-3);
  Box b{0.0, 0.0, 0.0};
  for (Complex z : c.polyline(64)) {
    b.x0 = std::min(b.x0, z.real());
    b.x1 = std::max(b.x1, z.real());
    b.y1 = std::max(b.y1, z.imag());
  }
  return b;
}

Params positive_kappa(const Params& params) {
  if (params.is_finite() && params.k() < 0.0) return reduce_negative_kappa(params).reduced;
  return params;
}

}  // namespace

int interior_sign_check(const Params& params, int samples, unsigned seed) {
  const Params p = positive_kappa(params);
  const domain::DomainDescription desc = domain::omega_description(p);
  const Box box = sample_box(p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(box.x0, box.x1);
  std::uniform_real_distribution<double> uy(0.0, box.y1);
  int violations = 0;
  int taken = 0;
  for (long tries = 0; taken < samples && tries < 1000L * samples; ++tries) {
    const Complex z(ux(rng), uy(rng));
    if (z.imag() <= 0.0) continue;
    if (domain::membership(desc, z, 1e-9) != domain::Membership::inside) continue;
    ++taken;
    if (!(map::f_eval(p, z).imag() > 0.0)) ++violations;
  }
  return violations;
}

std::vector<AuditFailure> lemma_audit(const std::vector<double>& kappas,
                                      const std::vector<double>& as) {
  std::vector<AuditFailure> out;
  auto audit_table = [&](const char* name, double k, double a, const scalar::SignTable& table,
                         auto&& fn) {
    for (const scalar::SignSegment& seg : table) {
      for (int j = 0; j < 200; ++j) {
        const double t = seg.lo + (seg.hi - seg.lo) * (j + 0.5) / 200.0;
        const double v = fn(t);
        const bool ok = seg.sign == 0 ? std::abs(v) <= 1e-10 : roots::sign_of(v) == seg.sign;
        if (!ok) out.push_back({name, k, a, t});
      }
    }
  };
  for (double k : kappas) {
    if (k != 1.0) {
      const scalar::FTable ft = scalar::f_kappa_table(k);
      audit_table("F_kappa'", k, 0.0, ft.derivative_table,
                  [&](double x) { return scalar::h_alpha_accurate(k, 2.0 * x); });
    }
    for (double alpha : {k, 2.0 * k + 1.0}) {
      if (alpha == 1.0 || !(alpha > 0.0)) continue;
      const scalar::HProfile hp = scalar::h_alpha_sign_profile(alpha);
      audit_table("H_alpha", alpha, 0.0, hp.table,
                  [&](double x) { return scalar::h_alpha(alpha, x); });
      audit_table("H_alpha'", alpha, 0.0, hp.derivative_table,
                  [&](double x) { return alpha * (std::cos(alpha * x) - std::cos(x)); });
    }
    for (double a : as) {
      const scalar::BProfile bp = scalar::b_sign_profile(k, a);
      audit_table("b", k, a, bp.table, [&](double t) { return scalar::b_theta(k, a, t); });
      const scalar::BPrimeProfile dp = scalar::b_prime_sign_profile(k, a);
      audit_table("b'", k, a, dp.table, [&](double t) { return scalar::b_prime(k, a, t); });
      const double upper = scalar::i0_upper(k);
      for (int j = 1; j < 200; ++j) {
        const double t = upper * j / 200.0;
        const double h = 1e-6;
        if (t - h <= 0.0 || t + h >= upper) continue;
        const double fd = (scalar::b_theta(k, a, t + h) - scalar::b_theta(k, a, t - h)) / (2 * h);
        const double bp1 = scalar::b_prime(k, a, t);
        if (std::abs(fd - bp1) > 1e-5 * std::max(1.0, std::abs(bp1))) {
          out.push_back({"b' finite difference", k, a, t});
        }
      }
      if (a < 0.0) {
        const Params p = Params::from_a(k, a);
        const auto [c1, c2] = scalar::critical_points(p);
        const double f1 = map::f_eval(p, c1.real());
        const double f2 = map::f_eval(p, c2.real());
        if (!(f2 < f1 && f1 < 0.0)) out.push_back({"f(alpha2) < f(alpha1) < 0", k, a, 0.0});
      }
    }
  }
  return out;
}

bool VerificationReport::pass() const {
  if (!consistent || !lemma_failures.empty()) return false;
  if (exists) return residual_max <= 1e-9 && sign_violations == 0;
  return true;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["params"]["kappa"] = params.is_infinite() ? nlohmann::ordered_json("inf")
                                              : nlohmann::ordered_json(domain::round15(params.k()));
  j["params"]["gamma"] = domain::round15(params.gamma());
  j["exists"] = exists;
  j["windings"] = nlohmann::ordered_json::array();
  for (const WindingRecord& w : windings) {
    j["windings"].push_back({{"probe", {domain::round15(w.probe.real()), domain::round15(w.probe.imag())}}, {"value", w.value}});
  }
  j["residual_max"] = domain::round15(residual_max);
  j["lemma_failures"] = lemma_failures;
  j["sign_violations"] = sign_violations;
  j["pass"] = pass();
  return j.dump(2);
}

VerificationReport verify_params(const Params& params, unsigned seed) {
  VerificationReport r{params, domain::classify(params).exists, false, {}, 0.0, {}, 0};
  const BijectivityProbe probe = probe_bijectivity(params);
  for (const Winding& w : probe.windings) r.windings.push_back({w.probe, w.value});
  r.consistent = probe.bijective == r.exists;

  const Params p = positive_kappa(params);
  if (p.is_finite()) {
    for (const AuditFailure& f : lemma_audit({p.k()}, {p.a()})) {
      r.lemma_failures.push_back(f.table + " at kappa=" + std::to_string(f.kappa) +
                                 " a=" + std::to_string(f.a) + " t=" + std::to_string(f.at));
    }
  } else if (p.gamma() < 0.0) {
    const auto [c1, c2] = scalar::critical_points(p);
    const double f1 = map::f_eval(p, c1.real());
    const double f2 = map::f_eval(p, c2.real());
    if (!(f2 < f1 && f1 < 0.0)) r.lemma_failures.push_back("f(alpha2) < f(alpha1) < 0");
  }
  if (!r.exists) return r;

  r.sign_violations = interior_sign_check(params, 2000, seed);
  const Box box = sample_box(p);
  const domain::DomainDescription desc = domain::omega_description(p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(box.x0, box.x1);
  std::uniform_real_distribution<double> uy(-box.y1, box.y1);
  int taken = 0;
  for (long tries = 0; taken < 200 && tries < 200000; ++tries) {
    const Complex zp(ux(rng), uy(rng));
    if (domain::membership(desc, zp, 1e-6) != domain::Membership::inside) continue;
    ++taken;
    Complex z = zp;
    if (params.is_finite() && params.k() < 0.0) z = reduce_negative_kappa(params).backward(zp);
    const Complex w = map::f_eval(params, z);
    const Complex back = inverse::w_eval(params, w).z;
    r.residual_max = std::max(r.residual_max, std::abs(back - z) / std::max(1.0, std::abs(z)));
  }
  return r;
}

}  // namespace lt::verify
