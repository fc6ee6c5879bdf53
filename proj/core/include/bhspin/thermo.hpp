#pragma once

#include <array>

#include "bhspin/params.hpp"
#include "bhspin/spectrum.hpp"

namespace bhspin {

/// Boltzmann populations relative to the ground energy, finite for any
/// beta: weight[k] = exp(-beta (E_k - E_0)), indexed by CoupledLabel::index().
struct BoltzmannWeights {
  std::array<double, kNumLevels> energies{};
  std::array<double, kNumLevels> weights{};
  double ground_energy = 0.0;
  double sum = 0.0;  // >= 1

  [[nodiscard]] double probability(std::size_t k) const noexcept { return weights[k] / sum; }
};

/// Throws DomainError unless T > 0.
[[nodiscard]] BoltzmannWeights boltzmann_weights(const ModelParams& p);

/// ln Z from the closed form
///   Z = e^{-beta tau}[2 cosh(beta tau)(1 + 2 cosh(beta omega))
///                     + 2 e^{-beta tau} cosh(2 beta omega) + e^{-beta(3 gamma - 2 tau)}],
/// with each bracket term carried in log space. Throws DomainError unless T > 0.
[[nodiscard]] double log_partition_function(const ModelParams& p);

/// The closed form evaluated directly while every exponent is within +-500,
/// otherwise exp(log_partition_function(p)); +inf once ln Z exceeds ~709.
[[nodiscard]] double partition_function(const ModelParams& p);

/// U = T^2 d(ln Z)/dT = <E>.
[[nodiscard]] double internal_energy(const ModelParams& p);

/// U - E_0: the thermally excited part of the internal energy.
[[nodiscard]] double excitation_energy(const ModelParams& p);

/// C_V = dU/dT = beta^2 (<E^2> - <E>^2), evaluated on energies shifted by E_0.
[[nodiscard]] double heat_capacity(const ModelParams& p);

struct ThermoPoint {
  ModelParams params;
  double z = 0.0;
  double log_z = 0.0;
  double u = 0.0;
  double c_v = 0.0;
};

[[nodiscard]] ThermoPoint thermo_point(const ModelParams& p);

}  // namespace bhspin
