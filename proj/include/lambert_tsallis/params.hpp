#pragma once

#include <complex>
#include <string>

namespace lt {

using Complex = std::complex<double>;

/// Shape parameter of exp_κ. Either a finite nonzero real or the κ = ∞
/// limit, which is a separate variant rather than a large float.
class Kappa {
 public:
  static Kappa finite(double value);
  static Kappa infinite() noexcept { return Kappa(); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Throws for κ = ∞.
  double value() const;

  /// |κ - round(κ)| < 1e-12. Always false for κ = ∞.
  bool is_integer() const noexcept;

  bool operator==(const Kappa& other) const noexcept;

 private:
  Kappa() = default;
  double value_ = 0.0;
  bool infinite_ = true;
};

/// The two knobs (κ, γ) of f_{κ,γ}(z) = z/(1+γz)·(1+z/κ)^κ.
class Params {
 public:
  Params(Kappa kappa, double gamma);
  Params(double kappa, double gamma);
  static Params infinite(double gamma) { return Params(Kappa::infinite(), gamma); }
  /// Finite κ with γ = a/κ.
  static Params from_a(double kappa, double a);

  const Kappa& kappa() const noexcept { return kappa_; }
  double gamma() const noexcept { return gamma_; }
  bool is_infinite() const noexcept { return kappa_.is_infinite(); }
  bool is_finite() const noexcept { return kappa_.is_finite(); }
  /// κ as a double; throws for κ = ∞.
  double k() const { return kappa_.value(); }
  /// a = κγ; throws for κ = ∞.
  double a() const;

  std::string to_string() const;

 private:
  Kappa kappa_;
  double gamma_;
  double a_ = 0.0;
};

}  // namespace lt
