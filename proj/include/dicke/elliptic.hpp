#pragma once

#include <string>

namespace dicke {

// Convention note: every interface in this module takes the Jacobi MODULUS k,
// never the parameter m = k^2. Tables and libraries disagree on this point;
// here dn(u, k) always means dn with modulus k, so dn(K(k), k) = sqrt(1 - k^2).

/// Dynamical regime selected by the modulus.
enum class KRegime {
  Oscillating,  // k < 1, libration inside one well
  Separatrix,   // |k - 1| <= 1e-12, hyperbolic degeneration
  Rotating      // k > 1, meandering across the barrier
};

const char* to_string(KRegime regime);

/// Validated Jacobi modulus. k >= 0 and finite; k > 1 is a legitimate input
/// (handled through the reciprocal-modulus identity), not an error.
class Modulus {
 public:
  explicit Modulus(double k);

  double value() const noexcept { return k_; }
  KRegime regime() const noexcept;

 private:
  double k_;
};

/// Width of the window around k = 1 treated as the separatrix. Inside it the
/// Landen ladder stagnates, so the hyperbolic closed forms are used instead.
inline constexpr double kSeparatrixWindow = 1e-12;

/// sn, cn, dn evaluated at one phase.
struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k')).
/// Requires 0 <= k < 1; the integral diverges as k -> 1.
double complete_elliptic_k(Modulus k);

/// Jacobi elliptic functions sn(u, k), cn(u, k), dn(u, k).
///
/// k < 1: descending Landen/AGM ladder (terminates once the descending
///        modulus drops below 1e-15; good to ~1e-14 for k <= 0.9999).
/// k = 1: (tanh u, sech u, sech u).
/// k > 1: reciprocal-modulus reduction sn(u,k) = sn(uk, 1/k)/k,
///        cn(u,k) = dn(uk, 1/k), dn(u,k) = cn(uk, 1/k).
JacobiTriple jacobi_elliptic(double u, Modulus k);

}  // namespace dicke
