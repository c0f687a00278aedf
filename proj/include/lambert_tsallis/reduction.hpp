#pragma once

#include "lambert_tsallis/params.hpp"

namespace lt {

/// κ < 0 is conjugated to κ' = -κ > 0 by the Möbius map z' = z/(1 + z/κ),
/// under which f_{κ,γ}(z) = f_{κ',γ'}(z') with γ' = γ + 1/κ'.
struct Reduction {
  Params reduced;
  double kappa;  // original κ < 0

  /// z ↦ z' = z/(1 + z/κ). Throws domain at z = -κ.
  Complex forward(Complex z) const;
  /// z' ↦ z = z'/(1 + z'/κ'). Throws domain at z' = -κ'.
  Complex backward(Complex z_reduced) const;
};

/// Throws invalid_parameter unless κ is finite and negative.
Reduction reduce_negative_kappa(const Params& params);

}  // namespace lt
