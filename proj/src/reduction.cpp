#include "lambert_tsallis/reduction.hpp"

#include "lambert_tsallis/error.hpp"

namespace lt {

Complex Reduction::forward(Complex z) const {
  const Complex d = 1.0 + z / kappa;
  if (d == Complex(0.0)) throw Error(ErrorKind::domain, "reduction: z = -kappa");
  return z / d;
}

Complex Reduction::backward(Complex z_reduced) const {
  const Complex d = 1.0 + z_reduced / reduced.k();
  if (d == Complex(0.0)) throw Error(ErrorKind::domain, "reduction: z' = -kappa'");
  return z_reduced / d;
}

Reduction reduce_negative_kappa(const Params& params) {
  if (params.is_infinite() || !(params.k() < 0.0)) {
    throw Error(ErrorKind::invalid_parameter, "reduction needs finite kappa < 0");
  }
  const double kp = -params.k();
  return Reduction{Params(kp, params.gamma() + 1.0 / kp), params.k()};
}

}  // namespace lt
