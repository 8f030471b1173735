#pragma once

namespace dicke {

/// Point of the 5-dimensional semiclassical phase space: field quadratures
/// q = (a + a*)/sqrt(2), p = i(a* - a)/sqrt(2) and the superspin components.
struct PhaseState {
  double q = 0.0;
  double p = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
};

/// Superspin alone (reduced system).
struct SpinVector {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
};

/// Canonical pair for the collective spin: big_q = 2 S cos(theta) and the
/// azimuthal angle phi.
struct CanonicalSpin {
  double big_q = 0.0;
  double phi = 0.0;
};

inline double spin_norm2(const SpinVector& s) {
  return s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
}

inline double spin_norm2(const PhaseState& s) {
  return s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
}

}  // namespace dicke
