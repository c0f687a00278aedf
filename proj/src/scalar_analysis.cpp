#include "lambert_tsallis/scalar_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/roots.hpp"

namespace lt::scalar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleEps = 1e-15;

bool near(double x, double y) { return std::abs(x - y) <= 1e-12; }

void require_positive_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorKind::invalid_parameter, "kappa must be finite and positive");
  }
}

// Build a sign table from ordered interior breakpoints and an initial sign.
SignTable alternating(double lo, double hi, const std::vector<double>& cuts, int first) {
  SignTable t;
  double start = lo;
  int s = first;
  for (double c : cuts) {
    if (c >= hi) break;
    t.push_back({start, c, s});
    start = c;
    s = -s;
  }
  t.push_back({start, hi, s});
  return t;
}

// Continuous stand-in for sign(b) on the closure of I₀.
double b_sign_fn(double kappa, double a, double theta) {
  if (theta < kLimitWindow) return b_theta(kappa, a, 0.0);
  return b_times_sin(kappa, a, theta);
}

// B(θ)/θ³, continuous at 0 with limit 4κ²(a - G).
double b_scaled(double kappa, double a, double theta) {
  if (theta < kLimitWindow) return 4.0 * kappa * kappa * (a - g_threshold(kappa));
  return big_b(kappa, a, theta) / (theta * theta * theta);
}

}  // namespace

double h_alpha(double alpha, double x) { return std::sin(alpha * x) - alpha * std::sin(x); }

double h_alpha_accurate(double alpha, double x) {
  if (std::abs(x) * std::max(alpha, 1.0) >= 1.0) return h_alpha(alpha, x);
  // Σ_{k≥1} (-1)^k (α^{2k+1} - α) x^{2k+1} / (2k+1)!
  const double log_alpha = std::log(alpha);
  const double x2 = x * x;
  double xp = x;      // x^{2k+1}
  double fact = 1.0;  // (2k+1)!
  double sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    xp *= x2;
    fact *= (2.0 * k) * (2.0 * k + 1.0);
    const double coef = alpha * std::expm1(2.0 * k * log_alpha);
    const double term = (k % 2 ? -1.0 : 1.0) * coef * xp / fact;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

HProfile h_alpha_sign_profile(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::invalid_parameter, "alpha must be positive");
  if (alpha == 1.0) throw Error(ErrorKind::degenerate, "H_1 vanishes identically");
  HProfile p{};
  p.upper = std::min(2.0 * kPi, 2.0 * kPi / alpha);
  const double turn = 2.0 * kPi / (alpha + 1.0);
  p.derivative_table = alternating(0.0, p.upper, {turn}, alpha < 1.0 ? 1 : -1);
  auto h = [alpha](double x) { return h_alpha_accurate(alpha, x); };
  if (alpha <= 0.5) {
    p.shape = HCase::all_positive;
    p.table = {{0.0, p.upper, 1}};
  } else if (alpha < 1.0) {
    p.shape = HCase::positive_then_negative;
    p.zero = roots::bisect(h, turn, p.upper);
    p.table = alternating(0.0, p.upper, {*p.zero}, 1);
  } else if (alpha < 2.0) {
    p.shape = HCase::negative_then_positive;
    p.zero = roots::bisect(h, turn, p.upper);
    p.table = alternating(0.0, p.upper, {*p.zero}, -1);
  } else {
    p.shape = HCase::all_negative;
    p.table = {{0.0, p.upper, -1}};
  }
  return p;
}

double f_kappa(double kappa, double x) {
  require_positive_kappa(kappa);
  if (std::abs(x) < kLimitWindow) return 1.0 / kappa;
  const double c = std::cos(x);
  const double s = std::sin(kappa * x);
  if (std::abs(c) < kPoleEps) throw Error(ErrorKind::pole, "F_kappa: pole of tan", x);
  if (std::abs(s) < kPoleEps) throw Error(ErrorKind::pole, "F_kappa: pole of cot", x);
  return std::sin(x) * std::cos(kappa * x) / (c * s);
}

FTable f_kappa_table(double kappa) {
  require_positive_kappa(kappa);
  if (kappa == 1.0) throw Error(ErrorKind::degenerate, "F_1 is identically 1");
  FTable t{};
  t.upper = i0_upper(kappa);
  const double half = 0.5 * kPi;
  if (kappa <= 0.5) {
    t.row = FCase::A;
    t.derivative_table = {{0.0, half, 1}, {half, t.upper, 1}};
  } else if (kappa >= 2.0) {
    t.row = FCase::D;
    t.derivative_table = {{0.0, t.upper, -1}};
  } else {
    const HProfile h = h_alpha_sign_profile(kappa);
    const double xs = 0.5 * *h.zero;
    t.x_star = xs;
    t.f_at_x_star = f_kappa(kappa, xs);
    if (kappa < 1.0) {
      t.row = FCase::B;
      t.derivative_table = {{0.0, half, 1}, {half, xs, 1}, {xs, t.upper, -1}};
    } else {
      t.row = FCase::C;
      t.derivative_table = {{0.0, half, -1}, {half, xs, -1}, {xs, t.upper, 1}};
    }
  }
  return t;
}

double j_kappa(double kappa, double x) {
  require_positive_kappa(kappa);
  if (near(kappa, 0.5)) return 1.0;
  const double den = 4.0 * kappa * x - 2.0 * kappa - 1.0;
  if (std::abs(den) < kPoleEps * (2.0 * kappa + 1.0)) {
    throw Error(ErrorKind::pole, "J_kappa: pole", (2.0 * kappa + 1.0) / (4.0 * kappa));
  }
  return (2.0 * x - 2.0 * kappa - 1.0) / den;
}

double g_threshold(double kappa) { return (2.0 * kappa + 1.0) * (kappa + 1.0) / (6.0 * kappa); }

double ell(double kappa, double a) { return 4.0 * a * kappa - 2.0 * kappa - 1.0; }

double i0_upper(double kappa) { return std::min(kPi, kPi / kappa); }

double b_theta(double kappa, double a, double theta) {
  require_positive_kappa(kappa);
  if (std::abs(theta) < kLimitWindow) return (kappa + 1.0) / kappa - 2.0 * a;
  const double s = std::sin(kappa * theta);
  if (std::abs(s) < kPoleEps) throw Error(ErrorKind::pole, "b: sin(kappa*theta) = 0", theta);
  return (1.0 - 2.0 * a) * std::cos(theta) + std::sin(theta) * std::cos(kappa * theta) / s;
}

double b_theta(const Params& params, double theta) {
  return b_theta(params.k(), params.a(), theta);
}

double b_times_sin(double kappa, double a, double theta) {
  return (1.0 - 2.0 * a) * std::cos(theta) * std::sin(kappa * theta) +
         std::sin(theta) * std::cos(kappa * theta);
}

double b_prime(double kappa, double a, double theta) {
  require_positive_kappa(kappa);
  if (std::abs(theta) < kLimitWindow) return 2.0 * (a - g_threshold(kappa)) * theta;
  const double s = std::sin(kappa * theta);
  if (std::abs(s) < kPoleEps) throw Error(ErrorKind::pole, "b': sin(kappa*theta) = 0", theta);
  return h_alpha_accurate(2.0 * kappa + 1.0, theta) / (2.0 * s * s) + 2.0 * a * std::sin(theta);
}

double b_prime(const Params& params, double theta) {
  return b_prime(params.k(), params.a(), theta);
}

double big_b(double kappa, double a, double theta) {
  const double s = std::sin(kappa * theta);
  return h_alpha_accurate(2.0 * kappa + 1.0, theta) + 4.0 * a * std::sin(theta) * s * s;
}

double big_b_prime(double kappa, double a, double theta) {
  const double l = ell(kappa, a);
  const double s = std::sin(kappa * theta);
  const double c = std::cos(theta);
  if (std::abs(l) < 1e-12) return (1.0 - 4.0 * kappa * kappa) / kappa * c * s * s;
  // 2ℓ cosθ sin²(κθ) (F_κ + J_κ(a)), with cosθ·F_κ expanded to stay finite at π/2.
  return 2.0 * l *
         (std::sin(theta) * std::cos(kappa * theta) * s + j_kappa(kappa, a) * c * s * s);
}

double discriminant_d(double kappa, double a, double theta) {
  const double b = b_theta(kappa, a, theta);
  return b * b - 4.0 * a * (a - 1.0);
}

double discriminant_d(const Params& params, double theta) {
  return discriminant_d(params.k(), params.a(), theta);
}

double discriminant_times_sin2(double kappa, double a, double theta) {
  const double bs = b_times_sin(kappa, a, theta);
  const double s = std::sin(kappa * theta);
  return bs * bs - 4.0 * a * (a - 1.0) * s * s;
}

const char* to_string(BPrimeRow row) noexcept {
  switch (row) {
    case BPrimeRow::kappa_one: return "kappa_one";
    case BPrimeRow::small_up_down: return "small_up_down";
    case BPrimeRow::small_negative: return "small_negative";
    case BPrimeRow::half_zero: return "half_zero";
    case BPrimeRow::half_positive: return "half_positive";
    case BPrimeRow::half_negative: return "half_negative";
    case BPrimeRow::mid_down_up: return "mid_down_up";
    case BPrimeRow::mid_positive: return "mid_positive";
    case BPrimeRow::large_up_down: return "large_up_down";
    case BPrimeRow::large_negative: return "large_negative";
  }
  return "unknown";
}

BPrimeProfile b_prime_sign_profile(double kappa, double a) {
  require_positive_kappa(kappa);
  BPrimeProfile p{};
  const double up = i0_upper(kappa);
  auto one_sign = [&](BPrimeRow row, int s) {
    p.row = row;
    p.table = {{0.0, up, s}};
    return p;
  };
  auto split = [&](BPrimeRow row, int first) {
    p.row = row;
    p.phi_star = roots::bisect([&](double t) { return b_scaled(kappa, a, t); }, 0.0, up);
    p.table = alternating(0.0, up, {*p.phi_star}, first);
    return p;
  };
  if (near(kappa, 1.0)) {
    p.row = BPrimeRow::kappa_one;
    p.table = {{0.0, up, roots::sign_of(a - 1.0)}};
    return p;
  }
  const double g = g_threshold(kappa);
  if (near(kappa, 0.5)) {
    if (a == 1.0) return one_sign(BPrimeRow::half_zero, 0);
    return a > 1.0 ? one_sign(BPrimeRow::half_positive, 1)
                   : one_sign(BPrimeRow::half_negative, -1);
  }
  if (kappa < 0.5) {
    return a > g ? split(BPrimeRow::small_up_down, 1) : one_sign(BPrimeRow::small_negative, -1);
  }
  if (kappa < 1.0) {
    return a < g ? split(BPrimeRow::mid_down_up, -1) : one_sign(BPrimeRow::mid_positive, 1);
  }
  return a > g ? split(BPrimeRow::large_up_down, 1) : one_sign(BPrimeRow::large_negative, -1);
}

BPrimeProfile b_prime_sign_profile(const Params& params) {
  return b_prime_sign_profile(params.k(), params.a());
}

const char* to_string(BRow row) noexcept {
  switch (row) {
    case BRow::small_neg_pos: return "small_neg_pos";
    case BRow::small_pos: return "small_pos";
    case BRow::small_pos_neg: return "small_pos_neg";
    case BRow::mid_neg_pos: return "mid_neg_pos";
    case BRow::mid_pos: return "mid_pos";
    case BRow::mid_pos_neg_pos: return "mid_pos_neg_pos";
    case BRow::mid_pos_neg: return "mid_pos_neg";
    case BRow::c_neg_pos_neg: return "c_neg_pos_neg";
    case BRow::c_neg: return "c_neg";
    case BRow::c_pos_neg: return "c_pos_neg";
    case BRow::large_neg: return "large_neg";
    case BRow::large_pos_neg: return "large_pos_neg";
    case BRow::kappa_one: return "kappa_one";
  }
  return "unknown";
}

BProfile b_sign_profile(double kappa, double a) {
  require_positive_kappa(kappa);
  BProfile p{};
  const double up = i0_upper(kappa);
  const double half = 0.5 * kPi;
  const double t = 2.0 * a - 1.0;
  auto zero_in = [&](double lo, double hi) {
    return roots::bisect([&](double th) { return b_sign_fn(kappa, a, th); }, lo, hi);
  };
  auto finish = [&](BRow row, std::vector<double> zeros, int first) {
    p.row = row;
    p.zeros = std::move(zeros);
    p.table = alternating(0.0, up, p.zeros, first);
    return p;
  };

  if (near(kappa, 1.0)) {
    p.row = BRow::kappa_one;
    const int s = roots::sign_of(1.0 - a);
    if (s == 0) {
      p.table = {{0.0, up, 0}};
    } else {
      p.zeros = {half};
      p.table = alternating(0.0, up, p.zeros, s);
    }
    return p;
  }
  if (kappa <= 0.5) {
    if (t > 1.0 / kappa) return finish(BRow::small_neg_pos, {zero_in(0.0, half)}, -1);
    if (t >= 0.0) return finish(BRow::small_pos, {}, 1);
    return finish(BRow::small_pos_neg, {zero_in(half, up)}, 1);
  }
  if (kappa < 1.0) {
    if (t > 1.0 / kappa) return finish(BRow::mid_neg_pos, {zero_in(0.0, half)}, -1);
    const FTable ft = f_kappa_table(kappa);
    const double xs = *ft.x_star;
    const double fx = *ft.f_at_x_star;
    if (t > fx) return finish(BRow::mid_pos, {}, 1);
    if (t >= 0.0) {
      const double z1 = t == fx ? xs : zero_in(half, xs);
      const double z2 = t == fx ? xs : (t == 0.0 ? up : zero_in(xs, up));
      return finish(BRow::mid_pos_neg_pos, {z1, z2}, 1);
    }
    return finish(BRow::mid_pos_neg, {zero_in(half, xs)}, 1);
  }
  if (kappa < 2.0) {
    const FTable ft = f_kappa_table(kappa);
    const double xs = *ft.x_star;
    const double fx = *ft.f_at_x_star;
    if (t >= fx) {
      const double z1 = t == fx ? xs : zero_in(half, xs);
      const double z2 = t == fx ? xs : zero_in(xs, up);
      return finish(BRow::c_neg_pos_neg, {z1, z2}, -1);
    }
    if (t >= 1.0 / kappa) return finish(BRow::c_neg, {}, -1);
    return finish(BRow::c_pos_neg, {zero_in(0.0, half)}, 1);
  }
  if (t >= 1.0 / kappa) return finish(BRow::large_neg, {}, -1);
  return finish(BRow::large_pos_neg, {zero_in(0.0, up)}, 1);
}

namespace {

double linear_coef(const Params& params) {
  return params.is_infinite() ? 1.0 : 1.0 + 1.0 / params.k();
}

}  // namespace

Complex q_poly(const Params& params, Complex z) {
  return (params.gamma() * z + linear_coef(params)) * z + 1.0;
}

double q_poly(const Params& params, double x) {
  return (params.gamma() * x + linear_coef(params)) * x + 1.0;
}

std::pair<Complex, Complex> critical_points(const Params& params) {
  const double c = linear_coef(params);
  const double g = params.gamma();
  if (g == 0.0) {
    if (c == 0.0) throw Error(ErrorKind::not_applicable, "q has no roots");
    const Complex r(-1.0 / c, 0.0);
    return {r, r};
  }
  const double disc = c * c - 4.0 * g;
  if (disc >= 0.0) {
    const double q = -0.5 * (c + std::copysign(std::sqrt(disc), c));
    double r1 = q / g;
    double r2 = 1.0 / q;
    if (r1 > r2) std::swap(r1, r2);
    return {Complex(r1, 0.0), Complex(r2, 0.0)};
  }
  const double re = -c / (2.0 * g);
  const double im = std::sqrt(-disc) / (2.0 * std::abs(g));
  return {Complex(re, im), Complex(re, -im)};
}

bool critical_points_real(const Params& params) { return discriminant_at_zero(params) >= 0.0; }

double discriminant_at_zero(const Params& params) {
  const double c = linear_coef(params);
  return c * c - 4.0 * params.gamma();
}

}  // namespace lt::scalar
