#include "bhspin/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "bhspin/errors.hpp"

namespace bhspin {

namespace {

constexpr double energy_of(const ModelParams& p, int j, int m) noexcept {
  const double casimir = static_cast<double>(j * (j + 1));
  const double shifted = casimir - 4.0;
  return p.omega * m + 0.5 * p.tau * (casimir - 2.0) + 0.25 * p.gamma * (shifted * shifted - 4.0);
}

CoupledLabel argmin_label(const std::array<double, kNumLevels>& energies) noexcept {
  // kCoupledLabels is (j, m)-ascending, so strict < keeps the lexicographic tie-break.
  std::size_t best = 0;
  for (std::size_t k = 1; k < kNumLevels; ++k) {
    if (energies[k] < energies[best]) best = k;
  }
  return kCoupledLabels[best];
}

CoupledLabel ground_label_at(double gamma, double omega, double tau) noexcept {
  return argmin_label(label_energies(ModelParams{tau, gamma, omega, 1.0}));
}

}  // namespace

std::string to_string(const CoupledLabel& label) {
  return "(j=" + std::to_string(label.j) + ",m=" + std::to_string(label.m) + ")";
}

double eigenvalue(const ModelParams& p, const CoupledLabel& label) {
  if (!label.valid()) {
    throw InvalidArgument("invalid coupled label " + to_string(label));
  }
  return energy_of(p, label.j, label.m);
}

std::array<double, kNumLevels> label_energies(const ModelParams& p) noexcept {
  std::array<double, kNumLevels> e{};
  for (const CoupledLabel& l : kCoupledLabels) e[l.index()] = energy_of(p, l.j, l.m);
  return e;
}

Spectrum full_spectrum(const ModelParams& p) {
  const auto energies = label_energies(p);
  Spectrum s;
  for (std::size_t k = 0; k < kNumLevels; ++k) s.levels[k] = Level{kCoupledLabels[k], energies[k]};
  std::stable_sort(s.levels.begin(), s.levels.end(),
                   [](const Level& a, const Level& b) { return a.energy < b.energy; });
  return s;
}

double ground_state_energy(const ModelParams& p) {
  const auto e = label_energies(p);
  return *std::min_element(e.begin(), e.end());
}

CoupledLabel ground_label(const ModelParams& p) { return argmin_label(label_energies(p)); }

std::optional<double> CrossingReport::tau_a() const {
  if (crossings.empty()) return std::nullopt;
  return crossings[0].tau;
}

std::optional<double> CrossingReport::tau_b() const {
  if (crossings.size() < 2) return std::nullopt;
  return crossings[1].tau;
}

CrossingReport find_crossings(double gamma, double omega, TauRange range) {
  if (!std::isfinite(range.start) || !std::isfinite(range.stop) || !(range.start < range.stop)) {
    throw InvalidArgument("tau range must satisfy start < stop");
  }
  if (!std::isfinite(gamma) || !std::isfinite(omega)) {
    throw InvalidArgument("gamma and omega must be finite");
  }

  CrossingReport report;
  report.gamma = gamma;
  report.omega = omega;
  report.range = range;

  const double width = range.stop - range.start;
  auto grid = [&](int k) {
    return k == kCrossingScanSteps ? range.stop
                                   : range.start + width * static_cast<double>(k) / kCrossingScanSteps;
  };

  double prev_tau = grid(0);
  CoupledLabel prev_label = ground_label_at(gamma, omega, prev_tau);
  report.ground_labels.push_back(prev_label);

  for (int k = 1; k <= kCrossingScanSteps; ++k) {
    const double tau = grid(k);
    const CoupledLabel label = ground_label_at(gamma, omega, tau);
    if (label != prev_label) {
      double lo = prev_tau;
      double hi = tau;
      while (hi - lo > kCrossingTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (ground_label_at(gamma, omega, mid) == prev_label) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      Crossing c;
      c.bracket_lo = lo;
      c.bracket_hi = hi;
      c.before = prev_label;
      c.after = ground_label_at(gamma, omega, hi);
      // Label energies are linear in tau: one secant step on the bracket lands on the root.
      const auto gap_at = [&](double x) {
        const ModelParams q{x, gamma, omega, 1.0};
        return eigenvalue(q, c.before) - eigenvalue(q, c.after);
      };
      const double g_lo = gap_at(lo);
      const double g_hi = gap_at(hi);
      c.tau = 0.5 * (lo + hi);
      if (g_hi != g_lo) c.tau = std::clamp(lo - g_lo * (hi - lo) / (g_hi - g_lo), lo, hi);
      const ModelParams at{c.tau, gamma, omega, 1.0};
      const double e_before = eigenvalue(at, c.before);
      const double e_after = eigenvalue(at, c.after);
      c.energy = std::min(e_before, e_after);
      c.residual_gap = std::abs(e_before - e_after);
      report.crossings.push_back(c);
      report.ground_labels.push_back(c.after);
      // A second change inside the same grid cell is picked up from hi onward.
      prev_label = c.after;
      prev_tau = hi;
      if (label != c.after) {
        --k;
        continue;
      }
    }
    prev_label = label;
    prev_tau = tau;
  }

  if (report.crossings.empty()) {
    throw NoCrossingError("no crossing in range [" + std::to_string(range.start) + ", " +
                          std::to_string(range.stop) + "]");
  }
  return report;
}

}  // namespace bhspin
