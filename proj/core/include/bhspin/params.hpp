#pragma once

namespace bhspin {

/// Parameters (t, U0, U2) of the spin-1 lattice Hamiltonian. The atom
/// self-energy is taken to be zero and is not represented.
struct MicroscopicParams {
  double t = 1.0;   // tunneling amplitude, > 0
  double u0 = 0.0;  // contact scattering amplitude
  double u2 = 0.0;  // spin-dependent scattering amplitude
};

/// Second-order effective couplings of the two-site spin Hamiltonian.
struct EffectiveCouplings {
  double k0 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
};

/// One evaluation point of the dimensionless two-atom model
///   H = omega Jz + tau (S1.S2) + gamma (S1.S2)^2 + (tau - gamma) I
/// with energies in units of t and k_B = 1.
struct ModelParams {
  double tau = 0.0;
  double gamma = 0.0;
  double omega = 0.0;
  double temperature = 1.0;

  /// Coefficient of the identity term; always recomputed.
  [[nodiscard]] constexpr double r() const noexcept { return tau - gamma; }
  [[nodiscard]] constexpr double beta() const noexcept { return 1.0 / temperature; }

  friend constexpr bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Absolute threshold below which a coupling denominator counts as singular.
inline constexpr double kSingularDenominator = 1e-300;

/// K0 = 4t^2/(3(U0+U2)) - 4t^2/(3(U0-2U2)), K1 = 2t^2/(U0+U2),
/// K2 = 2t^2/(3(U0+U2)) + 4t^2/(3(U0-2U2)).
///
/// Throws DomainError for t <= 0 or a scattering-resonance singularity
/// (U0 + U2 = 0 or U0 - 2 U2 = 0).
[[nodiscard]] EffectiveCouplings map_couplings(const MicroscopicParams& m);

/// tau = K1/t, gamma = K2/t. The external field is not fixed by the lattice
/// parameters and is supplied by the caller.
[[nodiscard]] ModelParams to_model_params(const MicroscopicParams& m, double temperature,
                                          double omega = 0.0);

/// Throws DomainError unless temperature > 0 and finite.
void require_positive_temperature(const ModelParams& p);

}  // namespace bhspin
