#include "dicke/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

constexpr double kPi = 3.14159265358979323846;

// c_n / a_n below this stops the Landen ladder.
constexpr double kLandenCutoff = 1e-15;
constexpr int kMaxLadder = 32;

// Complementary modulus, written to avoid cancellation as k -> 1.
double comp_modulus(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

}  // namespace

const char* to_string(KRegime regime) {
  switch (regime) {
    case KRegime::Oscillating:
      return "Oscillating";
    case KRegime::Separatrix:
      return "Separatrix";
    case KRegime::Rotating:
      return "Rotating";
  }
  return "?";
}

Modulus::Modulus(double k) : k_(k) {
  if (!std::isfinite(k) || k < 0.0) {
    throw EllipticDomainError("Jacobi modulus must be finite and >= 0, got " +
                              std::to_string(k));
  }
}

KRegime Modulus::regime() const noexcept {
  if (std::abs(k_ - 1.0) <= kSeparatrixWindow) return KRegime::Separatrix;
  return k_ < 1.0 ? KRegime::Oscillating : KRegime::Rotating;
}

double complete_elliptic_k(Modulus k) {
  const double kv = k.value();
  if (kv >= 1.0) {
    throw EllipticDomainError("K(k) diverges for k >= 1, got k = " +
                              std::to_string(kv));
  }
  double a = 1.0;
  double b = comp_modulus(kv);
  for (int i = 0; i < kMaxLadder && std::abs(a - b) > 0.5e-15 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

namespace {

// Descending Landen ladder, 0 <= k < 1. Phases recurse through
// phi_{n-1} = (phi_n + asin(c_n sin(phi_n) / a_n)) / 2 starting from
// phi_N = 2^N a_N u; then sn = sin(phi_0), cn = cos(phi_0). dn is recovered
// from k'^2 + k^2 cn^2, which stays fully accurate at the quarter period
// where cos(phi_1 - phi_0) underflows.
JacobiTriple jacobi_oscillating(double u, double k) {
  if (k < kLandenCutoff) {
    const double sn = std::sin(u);
    const double cn = std::cos(u);
    return {sn, cn, std::sqrt(1.0 - k * k * sn * sn)};
  }

  double a[kMaxLadder];
  double c[kMaxLadder];
  double an = 1.0;
  double bn = comp_modulus(k);
  a[0] = an;
  c[0] = k;
  int n = 0;
  while (n + 1 < kMaxLadder && std::abs(c[n]) > kLandenCutoff * an) {
    const double next_a = 0.5 * (an + bn);
    const double next_c = 0.5 * (an - bn);
    bn = std::sqrt(an * bn);
    an = next_a;
    ++n;
    a[n] = an;
    c[n] = next_c;
  }

  double phi = std::ldexp(an * u, n);
  for (int i = n; i >= 1; --i) {
    const double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }

  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double kp2 = (1.0 - k) * (1.0 + k);
  const double dn = std::sqrt(kp2 + k * k * cn * cn);
  return {sn, cn, dn};
}

}  // namespace

JacobiTriple jacobi_elliptic(double u, Modulus k) {
  if (!std::isfinite(u)) {
    throw EllipticDomainError("jacobi_elliptic: phase must be finite");
  }
  const double kv = k.value();
  switch (k.regime()) {
    case KRegime::Separatrix: {
      const double sech = 1.0 / std::cosh(u);
      return {std::tanh(u), sech, sech};
    }
    case KRegime::Rotating: {
      const JacobiTriple t = jacobi_oscillating(u * kv, 1.0 / kv);
      return {t.sn / kv, t.dn, t.cn};
    }
    case KRegime::Oscillating:
      break;
  }
  return jacobi_oscillating(u, kv);
}

}  // namespace dicke
