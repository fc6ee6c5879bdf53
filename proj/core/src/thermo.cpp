#include "bhspin/thermo.hpp"

#include <algorithm>
#include <cmath>

namespace bhspin {

namespace {

// ln(2 cosh x)
double log_two_cosh(double x) noexcept {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a));
}

// ln(1 + 2 cosh x)
double log_one_plus_two_cosh(double x) noexcept {
  const double a = std::abs(x);
  const double e = std::exp(-a);
  return a + std::log1p(e + e * e);
}

double log_sum_exp(std::initializer_list<double> terms) noexcept {
  const double top = std::max(terms);
  double s = 0.0;
  for (double t : terms) s += std::exp(t - top);
  return top + std::log(s);
}

struct Moments {
  double ground = 0.0;
  double mean_shifted = 0.0;  // <E - E_0>
  double variance = 0.0;
};

Moments moments(const ModelParams& p) {
  const BoltzmannWeights w = boltzmann_weights(p);
  Moments m;
  m.ground = w.ground_energy;
  for (std::size_t k = 0; k < kNumLevels; ++k) {
    m.mean_shifted += w.probability(k) * (w.energies[k] - w.ground_energy);
  }
  for (std::size_t k = 0; k < kNumLevels; ++k) {
    const double d = w.energies[k] - w.ground_energy - m.mean_shifted;
    m.variance += w.probability(k) * d * d;
  }
  return m;
}

}  // namespace

BoltzmannWeights boltzmann_weights(const ModelParams& p) {
  require_positive_temperature(p);
  BoltzmannWeights w;
  w.energies = label_energies(p);
  w.ground_energy = *std::min_element(w.energies.begin(), w.energies.end());
  const double beta = p.beta();
  for (std::size_t k = 0; k < kNumLevels; ++k) {
    w.weights[k] = std::exp(-beta * (w.energies[k] - w.ground_energy));
    w.sum += w.weights[k];
  }
  return w;
}

double log_partition_function(const ModelParams& p) {
  require_positive_temperature(p);
  const double beta = p.beta();
  const double bt = beta * p.tau;
  const double bw = beta * p.omega;
  // Bracket terms: 2cosh(bt)(1 + 2cosh(bw)), 2 e^{-bt} cosh(2 bw), e^{-beta(3 gamma - 2 tau)}.
  const double first = log_two_cosh(bt) + log_one_plus_two_cosh(bw);
  const double second = -bt + log_two_cosh(2.0 * bw);
  const double third = -beta * (3.0 * p.gamma - 2.0 * p.tau);
  return -bt + log_sum_exp({first, second, third});
}

double partition_function(const ModelParams& p) {
  require_positive_temperature(p);
  const double beta = p.beta();
  const double bt = beta * p.tau;
  const double bw = beta * p.omega;
  const double b3g = beta * (3.0 * p.gamma - 2.0 * p.tau);
  if (std::max({std::abs(bt), std::abs(2.0 * bw), std::abs(b3g), std::abs(bt + b3g)}) > 500.0) {
    return std::exp(log_partition_function(p));
  }
  return std::exp(-bt) * (2.0 * std::cosh(bt) * (1.0 + 2.0 * std::cosh(bw)) +
                          2.0 * std::exp(-bt) * std::cosh(2.0 * bw) + std::exp(-b3g));
}

double internal_energy(const ModelParams& p) {
  const Moments m = moments(p);
  return m.ground + m.mean_shifted;
}

double excitation_energy(const ModelParams& p) { return moments(p).mean_shifted; }

double heat_capacity(const ModelParams& p) {
  const double beta = p.beta();
  return beta * beta * moments(p).variance;
}

ThermoPoint thermo_point(const ModelParams& p) {
  const Moments m = moments(p);
  ThermoPoint t;
  t.params = p;
  t.log_z = log_partition_function(p);
  t.z = partition_function(p);
  t.u = m.ground + m.mean_shifted;
  t.c_v = p.beta() * p.beta() * m.variance;
  return t;
}

}  // namespace bhspin
