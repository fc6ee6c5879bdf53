#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bhspin/params.hpp"

namespace bhspin {

/// Coupled-basis label |j, m> of two spin-1 particles, j in {0, 1, 2}.
struct CoupledLabel {
  int j = 0;
  int m = 0;

  [[nodiscard]] constexpr bool valid() const noexcept {
    return j >= 0 && j <= 2 && m >= -j && m <= j;
  }
  /// Position in the (j, m)-lexicographic enumeration of all nine labels.
  [[nodiscard]] constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(j * j + (m + j));
  }

  friend constexpr auto operator<=>(const CoupledLabel&, const CoupledLabel&) = default;
};

inline constexpr std::size_t kNumLevels = 9;

/// All nine labels in ascending (j, m) order.
inline constexpr std::array<CoupledLabel, kNumLevels> kCoupledLabels{{
    {0, 0},
    {1, -1}, {1, 0}, {1, 1},
    {2, -2}, {2, -1}, {2, 0}, {2, 1}, {2, 2},
}};

[[nodiscard]] std::string to_string(const CoupledLabel& label);

struct Level {
  CoupledLabel label;
  double energy = 0.0;
};

/// Nine levels sorted by energy, ties broken by ascending (j, m).
struct Spectrum {
  std::array<Level, kNumLevels> levels{};

  [[nodiscard]] const Level& ground() const noexcept { return levels[0]; }
  /// E_1 - E_0 of the sorted list; zero at a degeneracy.
  [[nodiscard]] double gap() const noexcept { return levels[1].energy - levels[0].energy; }
};

/// E_jM = omega M + (tau/2)(j(j+1) - 2) + (gamma/4)[(j(j+1) - 4)^2 - 4].
/// Temperature is ignored. Throws InvalidArgument for an invalid label.
[[nodiscard]] double eigenvalue(const ModelParams& p, const CoupledLabel& label);

/// Energies indexed by CoupledLabel::index(), unsorted.
[[nodiscard]] std::array<double, kNumLevels> label_energies(const ModelParams& p) noexcept;

[[nodiscard]] Spectrum full_spectrum(const ModelParams& p);
[[nodiscard]] double ground_state_energy(const ModelParams& p);
[[nodiscard]] CoupledLabel ground_label(const ModelParams& p);

struct TauRange {
  double start = 0.0;
  double stop = 0.0;
};

/// One ground-state level crossing.
struct Crossing {
  double tau = 0.0;
  double bracket_lo = 0.0;  // last grid/bisection point with label `before`
  double bracket_hi = 0.0;  // first point with label `after`
  double energy = 0.0;      // ground energy at tau
  double residual_gap = 0.0;  // |E_before - E_after| at tau
  CoupledLabel before;
  CoupledLabel after;
};

struct CrossingReport {
  double gamma = 0.0;
  double omega = 0.0;
  TauRange range;
  std::vector<Crossing> crossings;         // ascending in tau
  std::vector<CoupledLabel> ground_labels;  // ground label sequence along the range

  [[nodiscard]] std::optional<double> tau_a() const;
  [[nodiscard]] std::optional<double> tau_b() const;
};

inline constexpr double kCrossingTolerance = 1e-9;
inline constexpr int kCrossingScanSteps = 10000;

/// Scans tau over `range` on a grid of width/1e4, tracking the analytic
/// ground-state label, and bisects every label change to kCrossingTolerance.
///
/// For gamma > 0 and omega > 0 the ground label runs (2,-2) -> (1,-1) at
/// tau = omega/2, then -> (0,0) at tau = omega + 3 gamma.
///
/// Throws InvalidArgument for an empty or non-finite range and
/// NoCrossingError if the label never changes (which includes a gap that
/// vanishes on the whole range).
[[nodiscard]] CrossingReport find_crossings(double gamma, double omega, TauRange range);

}  // namespace bhspin
