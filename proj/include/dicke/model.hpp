#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dicke/state.hpp"

namespace dicke {

/// Physical parameters of the extended Dicke model in natural units (hbar = 1).
/// epsilon selects the TLS-TLS interaction type; epsilon = -1 is the ordinary
/// Dicke model. spin = N/2 is the total superspin of the N TLSs.
struct ModelParams {
  double omega = 1.0;     // cavity frequency
  double omega0 = 1.0;    // TLS level splitting
  double coupling = 0.0;  // lambda
  double epsilon = -1.0;
  double spin = 0.5;      // S = N/2

  /// Throws std::invalid_argument unless omega, omega0 > 0, coupling >= 0,
  /// spin > 0 and 2*spin is an integer.
  void validate() const;

  double n_tls() const { return 2.0 * spin; }

  /// JSON object with keys omega, omega0, lambda, epsilon, N.
  static ModelParams from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

enum class Phase { Normal, Superradiant };

/// lambda_c = sqrt(omega * omega0 / (8 S |epsilon|)). Scales as N^{-1/2}.
/// Throws DegenerateModelError for epsilon = 0.
double critical_coupling(const ModelParams& p);

/// Superradiant iff coupling > critical_coupling(p); the boundary point
/// classifies Normal (the condensate fixed points only appear strictly above).
Phase classify_phase(const ModelParams& p);

enum class FixedPointKind { NormalPole, SuperradiantPlus, SuperradiantMinus };

const char* to_string(FixedPointKind kind);

struct FixedPoint {
  PhaseState state;
  FixedPointKind kind = FixedPointKind::NormalPole;
};

/// Stationary points of the full 5-variable flow. Always the two poles
/// (0,0,0,0,+-S); above the critical coupling additionally the two condensate
/// points with sz = omega*omega0 / (8 epsilon lambda^2), sx = -+sqrt(S^2-sz^2),
/// q = -2 sqrt(2) lambda sx / omega.
std::vector<FixedPoint> fixed_points(const ModelParams& p);

}  // namespace dicke
