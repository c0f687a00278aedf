#pragma once

#include "lambert_tsallis/params.hpp"

// Complex evaluation of exp_κ and f_{κ,γ}(z) = z/(1+γz)·exp_κ(z) on the
// principal branch, plus the real boundary function F(x, y).

namespace lt::map {

/// (1 + z/κ)^κ on the principal branch; e^z for κ = ∞. Integer κ uses exact
/// integer powers. Throws domain on the branch cut of non-integer κ.
Complex exp_kappa(const Params& params, Complex z);

/// True iff z lies in the natural domain of f (not the pole, not on the cut).
bool in_map_domain(const Params& params, Complex z);

/// f_{κ,γ}(z). Real z yields an exactly real value.
Complex f_eval(const Params& params, Complex z);
double f_eval(const Params& params, double x);

/// f'(z) = q(z)/(1+γz)²·(1+z/κ)^{κ-1}.
Complex f_prime(const Params& params, Complex z);
double f_prime(const Params& params, double x);

/// Arg(1 + z/κ) in (-π, π]. Finite κ only.
double theta_xy(const Params& params, Complex z);

/// F(x,y) = x + γx² + γy² + y·cot(κθ(x,y)); for κ = ∞ the last term is y·cot y.
/// Sign of F matches the sign of Im f(x+iy)/y.
double implicit_f(const Params& params, double x, double y);

/// Sign of Im f at z = κ(r e^{iθ} - 1) from the factorisation
/// Im f = (positive)·sin(κθ)·(a r² + b(θ) r + a - 1). Finite κ > 0.
int im_f_factorized(const Params& params, double r, double theta);

}  // namespace lt::map
