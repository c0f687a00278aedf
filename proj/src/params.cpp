#include "lambert_tsallis/params.hpp"

#include <cmath>
#include <cstdio>

#include "lambert_tsallis/error.hpp"

namespace lt {

Kappa Kappa::finite(double value) {
  if (value == 0.0 || !std::isfinite(value)) {
    throw Error(ErrorKind::invalid_parameter, "kappa must be finite and nonzero");
  }
  Kappa k;
  k.value_ = value;
  k.infinite_ = false;
  return k;
}

double Kappa::value() const {
  if (infinite_) throw Error(ErrorKind::invalid_parameter, "kappa is infinite");
  return value_;
}

bool Kappa::is_integer() const noexcept {
  return !infinite_ && std::abs(value_ - std::round(value_)) < 1e-12;
}

bool Kappa::operator==(const Kappa& other) const noexcept {
  return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
}

Params::Params(Kappa kappa, double gamma) : kappa_(kappa), gamma_(gamma) {
  if (!std::isfinite(gamma)) {
    throw Error(ErrorKind::invalid_parameter, "gamma must be finite");
  }
  if (kappa_.is_finite()) a_ = kappa_.value() * gamma_;
}

Params::Params(double kappa, double gamma)
    : Params(std::isinf(kappa) && kappa > 0 ? Kappa::infinite() : Kappa::finite(kappa),
             gamma) {}

Params Params::from_a(double kappa, double a) {
  Params p(Kappa::finite(kappa), a / kappa);
  p.a_ = a;
  return p;
}

double Params::a() const {
  if (kappa_.is_infinite()) {
    throw Error(ErrorKind::invalid_parameter, "a = kappa*gamma undefined for kappa = inf");
  }
  return a_;
}

std::string Params::to_string() const {
  char buf[96];
  if (kappa_.is_infinite()) {
    std::snprintf(buf, sizeof buf, "(kappa=inf, gamma=%.15g)", gamma_);
  } else {
    std::snprintf(buf, sizeof buf, "(kappa=%.15g, gamma=%.15g)", kappa_.value(), gamma_);
  }
  return buf;
}

}  // namespace lt
