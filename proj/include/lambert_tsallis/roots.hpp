#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "lambert_tsallis/error.hpp"

namespace lt::roots {

inline constexpr double kBisectionTol = 1e-13;

inline int sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

/// Bisection on a sign-changing bracket [lo, hi]. Returns the midpoint of the
/// final bracket once its width is below `tol` (absolute). Exact zeros at the
/// endpoints are returned as is.
template <typename Fn>
double bisect(Fn&& fn, double lo, double hi, double tol = kBisectionTol) {
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (sign_of(flo) == sign_of(fhi) || std::isnan(flo) || std::isnan(fhi)) {
    throw Error(ErrorKind::not_applicable, "bisect: bracket does not change sign");
  }
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = fn(mid);
    if (fmid == 0.0) return mid;
    if (sign_of(fmid) == sign_of(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Newton safeguarded by a bracket (rtsafe). `fn` returns f(x), `dfn` f'(x).
/// Converges to machine precision in x; falls back to bisection whenever a
/// Newton step leaves the bracket or fails to halve it.
template <typename Fn, typename DFn>
double safe_newton(Fn&& fn, DFn&& dfn, double lo, double hi, int max_iter = 200) {
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (sign_of(flo) == sign_of(fhi)) {
    throw Error(ErrorKind::not_applicable, "safe_newton: bracket does not change sign");
  }
  if (flo > 0.0) std::swap(lo, hi);  // f(lo) < 0 < f(hi)
  double x = 0.5 * (lo + hi);
  double dx_old = std::abs(hi - lo);
  double dx = dx_old;
  double f = fn(x);
  double df = dfn(x);
  for (int i = 0; i < max_iter; ++i) {
    const bool out = ((x - hi) * df - f) * ((x - lo) * df - f) > 0.0;
    const bool slow = std::abs(2.0 * f) > std::abs(dx_old * df);
    dx_old = dx;
    if (out || slow || df == 0.0) {
      dx = 0.5 * (hi - lo);
      x = lo + dx;
      if (x == lo) return x;
    } else {
      dx = f / df;
      const double prev = x;
      x -= dx;
      if (x == prev) return x;
    }
    if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) return x;
    f = fn(x);
    if (f == 0.0) return x;
    df = dfn(x);
    if (f < 0.0) lo = x; else hi = x;
  }
  return x;
}

}  // namespace lt::roots
