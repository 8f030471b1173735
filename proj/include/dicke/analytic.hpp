#pragma once

#include <nlohmann/json_fwd.hpp>

#include "dicke/elliptic.hpp"
#include "dicke/model.hpp"
#include "dicke/state.hpp"

namespace dicke {

/// Which sign of the sx amplitude the solution carries. Minus starts the spin
/// in the negative-sx well (positive q side), matching the charging setup.
enum class Branch { Plus, Minus };

const char* to_string(Branch b);

/// Closed-form beat solution: sx(t) = sign * amp * dn(Omega t, k), with the
/// remaining components fixed by sy = -sx'/omega0 and the energy integral.
/// Construct through build_solution, which checks every consistency relation.
struct BoundLuminositySolution {
  ModelParams params;
  Modulus k;
  double omega_big = 0.0;  // beat frequency Omega
  double energy_e = 0.0;   // LMG energy integral E
  double const_c = 0.0;    // "energy" C of the sx equation
  Branch sign = Branch::Minus;

  /// Peak |sx| = omega * Omega / (4 lambda^2 |epsilon|). Never exceeds S.
  double amplitude() const;
  KRegime regime() const { return k.regime(); }

  /// {k, Omega, E, C, lambda_c, regime, amplitude}
  nlohmann::json to_json() const;
};

/// Beat frequency from the biquadratic
///   Omega^4 + 2 omega0^2 (2-k^2)/k^4 Omega^2
///     + [omega0^4 - 64 eps^2 lambda^4 omega0^2 S^2 / omega^2] / k^4 = 0.
/// Above the critical coupling the constant term is negative, so exactly one
/// positive root Omega^2 exists. Throws NoRealSolutionError at or below
/// lambda_c and InfeasibleModulusError when the amplitude bound fails.
double solve_omega(const ModelParams& p, Modulus k);

/// Large-S limit (2 sqrt(2) lambda / k) sqrt(|eps| omega0 S / omega).
double omega_asymptotic(const ModelParams& p, Modulus k);

BoundLuminositySolution build_solution(const ModelParams& p, Modulus k,
                                       Branch sign = Branch::Minus);

/// Spin state at time t. |result| = S up to rounding for every t.
SpinVector spin_trajectory(const BoundLuminositySolution& sol, double t);

/// Double-well potential of the sx equation, sx'^2 + U(sx) = C:
///   U(sx) = -(8 eps lambda^2 E / omega - omega0^2) sx^2
///           + (16 eps^2 lambda^4 / omega^2) sx^4.
/// C < 0, = 0, > 0 puts the motion below, at, or above the barrier top,
/// matching k < 1, k = 1, k > 1.
double effective_potential(const BoundLuminositySolution& sol, double sx);

}  // namespace dicke
