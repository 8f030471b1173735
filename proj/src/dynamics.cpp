#include "dicke/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "dicke/errors.hpp"
#include "dicke/format.hpp"
#include "dicke/rk45.hpp"

namespace dicke {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

PhaseState full_rhs(const PhaseState& s, const ModelParams& p) {
  const double g = 2.0 * kSqrt2 * p.coupling;
  const double h = (1.0 + p.epsilon) * 8.0 * p.coupling * p.coupling / p.omega;
  PhaseState d;
  d.sx = -p.omega0 * s.sy;
  d.sy = p.omega0 * s.sx - g * s.q * s.sz - h * s.sx * s.sz;
  d.sz = g * s.q * s.sy + h * s.sx * s.sy;
  d.q = p.omega * s.p;
  d.p = -p.omega * s.q - g * s.sx;
  return d;
}

SpinVector reduced_rhs(const SpinVector& s, const ModelParams& p) {
  const double h = 8.0 * p.epsilon * p.coupling * p.coupling / p.omega;
  SpinVector d;
  d.sx = -p.omega0 * s.sy;
  d.sy = p.omega0 * s.sx - h * s.sx * s.sz;
  d.sz = h * s.sx * s.sy;
  return d;
}

CanonicalSpin qphi_rhs(const CanonicalSpin& s, const ModelParams& p) {
  if (p.epsilon != -1.0) {
    throw UnsupportedRegimeError(
        "the Q-phi system is defined for the ordinary Dicke model only "
        "(epsilon = -1)");
  }
  const double lam2_w = p.coupling * p.coupling / p.omega;
  const double cphi = std::cos(s.phi);
  const double amp2 = 4.0 * p.spin * p.spin - s.big_q * s.big_q;
  CanonicalSpin d;
  d.big_q = -2.0 * lam2_w * amp2 * std::sin(2.0 * s.phi);
  d.phi = p.omega0 + 4.0 * lam2_w * s.big_q * cphi * cphi;
  return d;
}

CanonicalSpin spin_to_canonical(const SpinVector& s, double spin,
                                PolePolicy pole) {
  const double norm = std::sqrt(spin_norm2(s));
  if (std::abs(norm - spin) > 1e-9 * std::max(1.0, spin)) {
    throw std::invalid_argument("spin_to_canonical: |s| != S");
  }
  CanonicalSpin c;
  c.big_q = 2.0 * s.sz;
  if (s.sx == 0.0 && s.sy == 0.0) {
    if (pole == PolePolicy::Error) {
      throw PoleError("azimuth undefined at a spin pole (sx = sy = 0)");
    }
    c.phi = 0.0;
  } else {
    c.phi = std::atan2(s.sy, s.sx);
  }
  return c;
}

SpinVector canonical_to_spin(const CanonicalSpin& c, double spin) {
  if (std::abs(c.big_q) > 2.0 * spin * (1.0 + 1e-12)) {
    throw std::invalid_argument("canonical_to_spin: |Q| > 2S");
  }
  const double cos_theta = std::clamp(c.big_q / (2.0 * spin), -1.0, 1.0);
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  SpinVector s;
  s.sx = spin * sin_theta * std::cos(c.phi);
  s.sy = spin * sin_theta * std::sin(c.phi);
  s.sz = spin * cos_theta;
  return s;
}

double full_energy(const PhaseState& s, const ModelParams& p) {
  return 0.5 * p.omega * (s.q * s.q + s.p * s.p) + p.omega0 * s.sz +
         2.0 * kSqrt2 * p.coupling * s.q * s.sx +
         (1.0 + p.epsilon) * 4.0 * p.coupling * p.coupling / p.omega * s.sx *
             s.sx;
}

double lmg_energy(const SpinVector& s, const ModelParams& p) {
  return p.omega0 * s.sz +
         4.0 * p.epsilon * p.coupling * p.coupling / p.omega * s.sx * s.sx;
}

double lmg_energy(const CanonicalSpin& c, const ModelParams& p) {
  const double sx2 = (p.spin * p.spin - 0.25 * c.big_q * c.big_q) *
                     std::cos(c.phi) * std::cos(c.phi);
  return 0.5 * p.omega0 * c.big_q +
         4.0 * p.epsilon * p.coupling * p.coupling / p.omega * sx2;
}

const char* to_string(SystemKind system) {
  switch (system) {
    case SystemKind::Full:
      return "full";
    case SystemKind::Reduced:
      return "reduced";
    case SystemKind::QPhi:
      return "qphi";
  }
  return "?";
}

std::size_t Trajectory::state_dim() const {
  switch (system) {
    case SystemKind::Full:
      return 5;
    case SystemKind::Reduced:
      return 3;
    case SystemKind::QPhi:
      return 2;
  }
  return 0;
}

std::vector<std::string> Trajectory::columns() const {
  switch (system) {
    case SystemKind::Full:
      return {"t", "q", "p", "sx", "sy", "sz", "H", "spin_norm2"};
    case SystemKind::Reduced:
      return {"t", "sx", "sy", "sz", "H_lmg", "spin_norm2"};
    case SystemKind::QPhi:
      return {"t", "Q", "phi", "H_lmg", "spin_norm2"};
  }
  return {};
}

double Trajectory::max_energy_drift() const {
  if (energy.empty()) return 0.0;
  const double e0 = energy.front();
  const double scale = std::max(1.0, std::abs(e0));
  double worst = 0.0;
  for (double e : energy) worst = std::max(worst, std::abs(e - e0) / scale);
  return worst;
}

double Trajectory::max_spin_norm_drift() const {
  if (spin_norm2.empty()) return 0.0;
  const double n0 = spin_norm2.front();
  double worst = 0.0;
  for (double n : spin_norm2) worst = std::max(worst, std::abs(n - n0) / n0);
  return worst;
}

void Trajectory::write_csv(std::ostream& os, std::string_view preamble) const {
  if (!preamble.empty()) os << preamble;
  const auto cols = columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    os << (i ? "," : "") << cols[i];
  }
  os << '\n';
  const std::size_t dim = state_dim();
  for (std::size_t row = 0; row < times.size(); ++row) {
    os << format_double(times[row]);
    for (std::size_t i = 0; i < dim; ++i) {
      os << ',' << format_double(states[row][i]);
    }
    os << ',' << format_double(energy[row]) << ','
       << format_double(spin_norm2[row]) << '\n';
  }
}

namespace {

void check_options(const IntegrationOptions& opts) {
  if (!(opts.t_end > 0.0) || !std::isfinite(opts.t_end)) {
    throw std::invalid_argument("t_end must be positive");
  }
  if (!(opts.dt_out > 0.0) || !std::isfinite(opts.dt_out)) {
    throw std::invalid_argument("dt_out must be positive");
  }
  if (!(opts.tol >= 1e-13 && opts.tol <= 1e-3)) {
    throw std::invalid_argument("tol must lie in [1e-13, 1e-3]");
  }
}

template <std::size_t N, typename Rhs, typename Diag>
Trajectory run(SystemKind kind, Rhs&& rhs, Diag&& diag,
               const std::array<double, N>& y0,
               const IntegrationOptions& opts) {
  Trajectory traj;
  traj.system = kind;
  const std::size_t samples =
      static_cast<std::size_t>(opts.t_end / opts.dt_out + 1e-9) + 1;
  traj.times.reserve(samples);
  traj.states.reserve(samples);
  traj.energy.reserve(samples);
  traj.spin_norm2.reserve(samples);

  integrate_dopri5<N>(rhs, y0, opts.t_end, opts.dt_out, opts.tol,
                      [&](double t, const std::array<double, N>& y) {
                        traj.times.push_back(t);
                        std::array<double, 5> row{};
                        for (std::size_t i = 0; i < N; ++i) row[i] = y[i];
                        traj.states.push_back(row);
                        const auto [e, n2] = diag(y);
                        traj.energy.push_back(e);
                        traj.spin_norm2.push_back(n2);
                      });
  return traj;
}

}  // namespace

Trajectory integrate_full(const PhaseState& s0, const ModelParams& p,
                          const IntegrationOptions& opts) {
  p.validate();
  check_options(opts);
  const std::array<double, 5> y0{s0.q, s0.p, s0.sx, s0.sy, s0.sz};
  auto rhs = [&p](double, const std::array<double, 5>& y) {
    const PhaseState d =
        full_rhs(PhaseState{y[0], y[1], y[2], y[3], y[4]}, p);
    return std::array<double, 5>{d.q, d.p, d.sx, d.sy, d.sz};
  };
  auto diag = [&p](const std::array<double, 5>& y) {
    const PhaseState s{y[0], y[1], y[2], y[3], y[4]};
    return std::pair{full_energy(s, p), spin_norm2(s)};
  };
  return run<5>(SystemKind::Full, rhs, diag, y0, opts);
}

Trajectory integrate_reduced(const SpinVector& s0, const ModelParams& p,
                             const IntegrationOptions& opts) {
  p.validate();
  check_options(opts);
  const std::array<double, 3> y0{s0.sx, s0.sy, s0.sz};
  auto rhs = [&p](double, const std::array<double, 3>& y) {
    const SpinVector d = reduced_rhs(SpinVector{y[0], y[1], y[2]}, p);
    return std::array<double, 3>{d.sx, d.sy, d.sz};
  };
  auto diag = [&p](const std::array<double, 3>& y) {
    const SpinVector s{y[0], y[1], y[2]};
    return std::pair{lmg_energy(s, p), spin_norm2(s)};
  };
  return run<3>(SystemKind::Reduced, rhs, diag, y0, opts);
}

Trajectory integrate_qphi(const CanonicalSpin& s0, const ModelParams& p,
                          const IntegrationOptions& opts) {
  p.validate();
  check_options(opts);
  if (p.epsilon != -1.0) {
    throw UnsupportedRegimeError(
        "the Q-phi system is defined for the ordinary Dicke model only "
        "(epsilon = -1)");
  }
  if (std::abs(s0.big_q) > 2.0 * p.spin) {
    throw std::invalid_argument("initial |Q| exceeds 2S");
  }
  const std::array<double, 2> y0{s0.big_q, s0.phi};
  auto rhs = [&p](double, const std::array<double, 2>& y) {
    const CanonicalSpin d = qphi_rhs(CanonicalSpin{y[0], y[1]}, p);
    return std::array<double, 2>{d.big_q, d.phi};
  };
  auto diag = [&p](const std::array<double, 2>& y) {
    const CanonicalSpin c{y[0], y[1]};
    return std::pair{lmg_energy(c, p), p.spin * p.spin};
  };
  return run<2>(SystemKind::QPhi, rhs, diag, y0, opts);
}

Trajectory integrate(SystemKind system, std::span<const double> initial,
                     const ModelParams& p, const IntegrationOptions& opts) {
  switch (system) {
    case SystemKind::Full:
      if (initial.size() != 5) {
        throw std::invalid_argument("full system takes 5 initial values");
      }
      return integrate_full(
          PhaseState{initial[0], initial[1], initial[2], initial[3],
                     initial[4]},
          p, opts);
    case SystemKind::Reduced:
      if (initial.size() != 3) {
        throw std::invalid_argument("reduced system takes 3 initial values");
      }
      return integrate_reduced(SpinVector{initial[0], initial[1], initial[2]},
                               p, opts);
    case SystemKind::QPhi:
      if (initial.size() != 2) {
        throw std::invalid_argument("Q-phi system takes 2 initial values");
      }
      return integrate_qphi(CanonicalSpin{initial[0], initial[1]}, p, opts);
  }
  throw std::invalid_argument("unknown system");
}

}  // namespace dicke
