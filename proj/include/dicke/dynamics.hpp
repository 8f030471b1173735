#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/state.hpp"

namespace dicke {

/// Right-hand side of the full 5-variable condensate + superspin flow:
///   sx' = -omega0 sy
///   sy' =  omega0 sx - 2 sqrt(2) lambda q sz - (1+eps) (8 lambda^2/omega) sx sz
///   sz' =  2 sqrt(2) lambda q sy + (1+eps) (8 lambda^2/omega) sx sy
///   q'  =  omega p
///   p'  = -omega q - 2 sqrt(2) lambda sx
PhaseState full_rhs(const PhaseState& s, const ModelParams& p);

/// Reduced spin flow after the photon coordinate is slaved to the spin
/// (q = -2 sqrt(2) lambda sx / omega, p = 0).
SpinVector reduced_rhs(const SpinVector& s, const ModelParams& p);

/// The reduced flow expressed in the canonical pair (big_q = 2 sz, phi).
/// Defined for the ordinary Dicke case only; epsilon != -1 is rejected.
CanonicalSpin qphi_rhs(const CanonicalSpin& s, const ModelParams& p);

/// What to do when converting a pole state (sx = sy = 0), where the azimuth
/// is genuinely undefined.
enum class PolePolicy { Error, PhiZero };

/// (sx, sy, sz) -> (big_q = 2 sz, phi = atan2(sy, sx)).
/// Requires |s| = S within 1e-9 (mixed tolerance).
CanonicalSpin spin_to_canonical(const SpinVector& s, double spin,
                                PolePolicy pole = PolePolicy::Error);

/// Inverse map; requires |big_q| <= 2 S.
SpinVector canonical_to_spin(const CanonicalSpin& c, double spin);

/// Hamiltonian of the full system (cavity + spin + dipole + TLS-TLS term).
double full_energy(const PhaseState& s, const ModelParams& p);

/// LMG generator of the reduced flow: omega0 sz + (4 eps lambda^2/omega) sx^2.
double lmg_energy(const SpinVector& s, const ModelParams& p);
double lmg_energy(const CanonicalSpin& c, const ModelParams& p);

enum class SystemKind { Full, Reduced, QPhi };

const char* to_string(SystemKind system);

struct IntegrationOptions {
  double t_end = 1.0;
  double dt_out = 1e-2;
  double tol = 1e-10;  // accepted range [1e-13, 1e-3]
};

/// Sampled solution on the uniform output grid, with the conserved-quantity
/// diagnostics evaluated at the samples.
struct Trajectory {
  SystemKind system = SystemKind::Full;
  std::vector<double> times;
  std::vector<std::array<double, 5>> states;  // first state_dim() entries used
  std::vector<double> energy;
  std::vector<double> spin_norm2;

  std::size_t state_dim() const;
  std::vector<std::string> columns() const;  // t, state..., energy, norm2

  double max_energy_drift() const;     // relative to the initial sample
  double max_spin_norm_drift() const;  // |norm2 - norm2(0)| / norm2(0)

  /// CSV with one row per sample. `preamble` lines (already '#'-prefixed)
  /// go first; numbers use shortest round-trip formatting.
  void write_csv(std::ostream& os, std::string_view preamble = {}) const;
};

/// Adaptive Dormand-Prince 5(4) integration with dense output on the
/// dt_out grid. Throws StiffnessError / DivergenceError from the stepper and
/// std::invalid_argument for bad options.
Trajectory integrate(SystemKind system, std::span<const double> initial,
                     const ModelParams& p, const IntegrationOptions& opts);

Trajectory integrate_full(const PhaseState& s0, const ModelParams& p,
                          const IntegrationOptions& opts);
Trajectory integrate_reduced(const SpinVector& s0, const ModelParams& p,
                             const IntegrationOptions& opts);
Trajectory integrate_qphi(const CanonicalSpin& s0, const ModelParams& p,
                          const IntegrationOptions& opts);

}  // namespace dicke
