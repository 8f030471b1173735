#include "dicke/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "dicke/errors.hpp"

namespace dicke {

void ModelParams::validate() const {
  if (!(std::isfinite(omega) && omega > 0.0)) {
    throw std::invalid_argument("omega must be positive");
  }
  if (!(std::isfinite(omega0) && omega0 > 0.0)) {
    throw std::invalid_argument("omega0 must be positive");
  }
  if (!(std::isfinite(coupling) && coupling >= 0.0)) {
    throw std::invalid_argument("coupling must be >= 0");
  }
  if (!std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be finite");
  }
  if (!(std::isfinite(spin) && spin > 0.0)) {
    throw std::invalid_argument("spin must be positive");
  }
  const double n = 2.0 * spin;
  if (std::abs(n - std::round(n)) > 1e-9 * std::max(1.0, n)) {
    throw std::invalid_argument("spin must be a half-integer (N = 2S TLSs)");
  }
}

ModelParams ModelParams::from_json(const nlohmann::json& j) {
  ModelParams p;
  p.omega = j.at("omega").get<double>();
  p.omega0 = j.at("omega0").get<double>();
  p.coupling = j.at("lambda").get<double>();
  p.epsilon = j.at("epsilon").get<double>();
  const auto n = j.at("N");
  if (!n.is_number_integer() || n.get<long long>() <= 0) {
    throw std::invalid_argument("N must be a positive integer");
  }
  p.spin = 0.5 * static_cast<double>(n.get<long long>());
  p.validate();
  return p;
}

nlohmann::json ModelParams::to_json() const {
  return nlohmann::json{{"omega", omega},
                        {"omega0", omega0},
                        {"lambda", coupling},
                        {"epsilon", epsilon},
                        {"N", static_cast<long long>(std::llround(n_tls()))}};
}

double critical_coupling(const ModelParams& p) {
  p.validate();
  if (p.epsilon == 0.0) {
    throw DegenerateModelError(
        "epsilon = 0: no superradiant transition, critical coupling undefined");
  }
  return std::sqrt(p.omega * p.omega0 / (8.0 * p.spin * std::abs(p.epsilon)));
}

Phase classify_phase(const ModelParams& p) {
  return p.coupling > critical_coupling(p) ? Phase::Superradiant
                                           : Phase::Normal;
}

const char* to_string(FixedPointKind kind) {
  switch (kind) {
    case FixedPointKind::NormalPole:
      return "NormalPole";
    case FixedPointKind::SuperradiantPlus:
      return "SuperradiantPlus";
    case FixedPointKind::SuperradiantMinus:
      return "SuperradiantMinus";
  }
  return "?";
}

std::vector<FixedPoint> fixed_points(const ModelParams& p) {
  p.validate();
  std::vector<FixedPoint> pts;
  pts.push_back({PhaseState{0.0, 0.0, 0.0, 0.0, p.spin},
                 FixedPointKind::NormalPole});
  pts.push_back({PhaseState{0.0, 0.0, 0.0, 0.0, -p.spin},
                 FixedPointKind::NormalPole});

  if (p.epsilon == 0.0 || !(p.coupling > critical_coupling(p))) return pts;

  // Stationarity of the sy equation pins sz; lambda > lambda_c guarantees
  // |sz| < S so the root below is real.
  const double lam2 = p.coupling * p.coupling;
  const double sz = p.omega * p.omega0 / (8.0 * p.epsilon * lam2);
  const double r = std::sqrt(p.spin * p.spin - sz * sz);
  const double q = 2.0 * std::sqrt(2.0) * p.coupling / p.omega * r;

  pts.push_back({PhaseState{q, 0.0, -r, 0.0, sz},
                 FixedPointKind::SuperradiantPlus});
  pts.push_back({PhaseState{-q, 0.0, r, 0.0, sz},
                 FixedPointKind::SuperradiantMinus});
  return pts;
}

}  // namespace dicke
