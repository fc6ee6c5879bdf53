#include "bhspin/params.hpp"

#include <cmath>
#include <string>

#include "bhspin/errors.hpp"

namespace bhspin {

EffectiveCouplings map_couplings(const MicroscopicParams& m) {
  if (!(m.t > 0.0) || !std::isfinite(m.t)) {
    throw DomainError("tunneling amplitude t must be positive and finite, got " +
                      std::to_string(m.t));
  }
  const double singlet_channel = m.u0 + m.u2;
  const double quintet_channel = m.u0 - 2.0 * m.u2;
  if (std::abs(singlet_channel) <= kSingularDenominator) {
    throw DomainError("scattering-resonance singularity: U0 + U2 = 0");
  }
  if (std::abs(quintet_channel) <= kSingularDenominator) {
    throw DomainError("scattering-resonance singularity: U0 - 2*U2 = 0");
  }

  const double t2 = m.t * m.t;
  EffectiveCouplings k;
  k.k0 = 4.0 * t2 / (3.0 * singlet_channel) - 4.0 * t2 / (3.0 * quintet_channel);
  k.k1 = 2.0 * t2 / singlet_channel;
  k.k2 = 2.0 * t2 / (3.0 * singlet_channel) + 4.0 * t2 / (3.0 * quintet_channel);
  return k;
}

ModelParams to_model_params(const MicroscopicParams& m, double temperature, double omega) {
  const EffectiveCouplings k = map_couplings(m);
  ModelParams p;
  p.tau = k.k1 / m.t;
  p.gamma = k.k2 / m.t;
  p.omega = omega;
  p.temperature = temperature;
  return p;
}

void require_positive_temperature(const ModelParams& p) {
  if (!(p.temperature > 0.0) || !std::isfinite(p.temperature)) {
    throw DomainError("temperature must be positive and finite, got " +
                      std::to_string(p.temperature));
  }
}

}  // namespace bhspin
