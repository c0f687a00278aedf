#include "lambert_tsallis/tsallis_map.hpp"

#include <cmath>
#include <numbers>

#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/scalar_analysis.hpp"

namespace lt::map {

namespace {

constexpr double kEps = 2.220446049250313e-16;

Complex int_pow(Complex u, long n) {
  const bool inv = n < 0;
  unsigned long e = static_cast<unsigned long>(inv ? -n : n);
  Complex result(1.0, 0.0);
  while (e) {
    if (e & 1UL) result *= u;
    u *= u;
    e >>= 1;
  }
  return inv ? 1.0 / result : result;
}

bool at_pole(const Params& params, Complex z) {
  const double g = params.gamma();
  if (g == 0.0) return false;
  const Complex d = 1.0 + g * z;
  return std::abs(d) <= 4.0 * kEps * std::max(1.0, std::abs(g * z));
}

// u^p for u = 1 + z/κ on the principal branch, p real.
Complex principal_pow(const Params& params, Complex u, double p) {
  if (params.kappa().is_integer()) {
    const long n = std::lround(p);
    if (u == Complex(0.0) && n < 0) {
      throw Error(ErrorKind::pole, "exp_kappa: pole at z = -kappa", -params.k());
    }
    return int_pow(u, n);
  }
  if (u.imag() == 0.0 && u.real() <= 0.0) {
    throw Error(ErrorKind::domain, "exp_kappa: z on the branch cut 1 + z/kappa <= 0");
  }
  return std::exp(p * std::log(u));
}

void check_pole(const Params& params, Complex z) {
  if (at_pole(params, z)) {
    throw Error(ErrorKind::pole, "f: pole at z = -1/gamma", -1.0 / params.gamma());
  }
}

}  // namespace

Complex exp_kappa(const Params& params, Complex z) {
  if (params.is_infinite()) return std::exp(z);
  return principal_pow(params, 1.0 + z / params.k(), params.k());
}

bool in_map_domain(const Params& params, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  if (at_pole(params, z)) return false;
  if (params.is_infinite()) return true;
  const Complex u = 1.0 + z / params.k();
  if (params.kappa().is_integer()) return !(params.k() < 0.0 && u == Complex(0.0));
  return !(u.imag() == 0.0 && u.real() <= 0.0);
}

double f_eval(const Params& params, double x) {
  check_pole(params, Complex(x));
  const double lead = x / (1.0 + params.gamma() * x);
  if (params.is_infinite()) return lead * std::exp(x);
  const double k = params.k();
  const double u = 1.0 + x / k;
  if (params.kappa().is_integer()) {
    if (u == 0.0 && k < 0.0) throw Error(ErrorKind::pole, "f: pole at z = -kappa", -k);
    return lead * std::pow(u, std::round(k));
  }
  if (u <= 0.0) throw Error(ErrorKind::domain, "f: x on the branch cut 1 + x/kappa <= 0");
  return lead * std::pow(u, k);
}

Complex f_eval(const Params& params, Complex z) {
  if (z.imag() == 0.0) return Complex(f_eval(params, z.real()), 0.0);
  check_pole(params, z);
  return z / (1.0 + params.gamma() * z) * exp_kappa(params, z);
}

double f_prime(const Params& params, double x) {
  check_pole(params, Complex(x));
  const double d = 1.0 + params.gamma() * x;
  const double lead = scalar::q_poly(params, x) / (d * d);
  if (params.is_infinite()) return lead * std::exp(x);
  const double k = params.k();
  const double u = 1.0 + x / k;
  if (params.kappa().is_integer()) {
    if (u == 0.0 && k - 1.0 < 0.0) throw Error(ErrorKind::pole, "f': pole at z = -kappa", -k);
    return lead * std::pow(u, std::round(k) - 1.0);
  }
  if (u <= 0.0) throw Error(ErrorKind::domain, "f': x on the branch cut 1 + x/kappa <= 0");
  return lead * std::pow(u, k - 1.0);
}

Complex f_prime(const Params& params, Complex z) {
  if (z.imag() == 0.0) return Complex(f_prime(params, z.real()), 0.0);
  check_pole(params, z);
  const Complex d = 1.0 + params.gamma() * z;
  const Complex lead = scalar::q_poly(params, z) / (d * d);
  if (params.is_infinite()) return lead * std::exp(z);
  return lead * principal_pow(params, 1.0 + z / params.k(), params.k() - 1.0);
}

double theta_xy(const Params& params, Complex z) {
  const Complex u = 1.0 + z / params.k();
  if (u == Complex(0.0)) throw Error(ErrorKind::domain, "theta: 1 + z/kappa = 0");
  return std::arg(u);
}

double implicit_f(const Params& params, double x, double y) {
  const double g = params.gamma();
  const double poly = x + g * x * x + g * y * y;
  if (params.is_infinite()) {
    if (std::abs(y) < scalar::kLimitWindow) return poly + 1.0;
    const double s = std::sin(y);
    if (std::abs(s) < 1e-15) throw Error(ErrorKind::pole, "F: sin(y) = 0", y);
    return poly + y * std::cos(y) / s;
  }
  const double k = params.k();
  const bool integer = params.kappa().is_integer();
  const double ur = 1.0 + x / k;
  if (y == 0.0) {
    // y·cot(κθ) → 1 + x/κ wherever θ → 0 (mod π for integer κ); else → 0.
    if (ur > 0.0 || integer) return poly + ur;
    return poly;
  }
  const double ui = y / k;
  double angle = std::atan2(ui, ur);
  if (integer && ur < 0.0) {
    // cot has period π and integer κ: measure θ from the negative axis.
    angle = std::atan2(-ui, -ur);
  }
  const double kt = k * angle;
  if (std::abs(kt) < scalar::kLimitWindow) return poly + y / kt * std::cos(kt);
  const double s = std::sin(kt);
  if (std::abs(s) < 1e-15) throw Error(ErrorKind::pole, "F: sin(kappa*theta) = 0", x);
  return poly + y * std::cos(kt) / s;
}

int im_f_factorized(const Params& params, double r, double theta) {
  const double k = params.k();
  const double a = params.a();
  const double s = std::sin(k * theta);
  const double b = scalar::b_theta(k, a, theta);
  double value;
  const double disc = b * b - 4.0 * a * (a - 1.0);
  if (a != 0.0 && disc >= 0.0) {
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    const double r1 = q != 0.0 ? q / a : 0.0;
    const double r2 = q != 0.0 ? (a - 1.0) / q : 0.0;
    value = a * (r - r1) * (r - r2);
  } else {
    value = (a * r + b) * r + (a - 1.0);
  }
  return ((value > 0.0) - (value < 0.0)) * ((s > 0.0) - (s < 0.0));
}

}  // namespace lt::map
