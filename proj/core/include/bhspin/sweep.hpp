#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhspin/entanglement.hpp"
#include "bhspin/params.hpp"
#include "bhspin/spectrum.hpp"

namespace bhspin {

enum class SweepVariable { kTau, kGamma, kOmega, kTemperature };

enum class Output {
  kNegativity,
  kHeatCapacity,
  kInternalEnergy,
  kPartitionFunction,
  kSpectrum,
  kGroundLabel,
};

[[nodiscard]] SweepVariable parse_variable(std::string_view name);
[[nodiscard]] std::string_view to_string(SweepVariable v) noexcept;
[[nodiscard]] Output parse_output(std::string_view name);
[[nodiscard]] std::string_view to_string(Output o) noexcept;
/// Comma-separated output names; result is deduplicated in canonical order.
[[nodiscard]] std::vector<Output> parse_outputs(std::string_view csv);

struct SweepSpec {
  SweepVariable variable = SweepVariable::kTau;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
  ModelParams fixed;  // the swept field is overwritten per row
  std::vector<Output> outputs{Output::kNegativity};
};

/// Throws InvalidArgument for steps < 2, start > stop, non-finite bounds or
/// an empty output list; DomainError for a non-positive temperature anywhere
/// on the grid when thermal outputs are requested.
void validate(const SweepSpec& spec);

/// Grid value k of steps, with the last point pinned to `stop`.
[[nodiscard]] double grid_value(const SweepSpec& spec, int k) noexcept;

struct SweepRow {
  ModelParams params;
  std::optional<double> negativity;
  std::optional<Phase> phase;
  std::optional<double> heat_capacity;
  std::optional<double> internal_energy;
  std::optional<double> partition_function;
  std::optional<Spectrum> spectrum;
  std::optional<CoupledLabel> ground_label;
  std::optional<double> gap;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // grid order
};

/// Evaluates one grid point. Throws DomainError on a non-finite value.
[[nodiscard]] SweepRow evaluate_row(const SweepSpec& spec, int k);

/// Evaluates the grid on `threads` workers (0 = hardware concurrency).
/// Rows come back in grid order whatever the worker count; the first failing
/// row by grid index is rethrown.
[[nodiscard]] SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Nine E_jM columns versus tau.
struct LevelsTable {
  double gamma = 0.0;
  double omega = 0.0;
  std::vector<double> tau;
  std::vector<std::array<double, kNumLevels>> energies;  // by CoupledLabel::index()
};

[[nodiscard]] LevelsTable emit_levels(double gamma, double omega, TauRange range, int steps);

// CSV output: header row, comma separator, LF endings, 17 significant digits.

[[nodiscard]] std::string format_double(double v);
[[nodiscard]] std::string level_column_name(const CoupledLabel& label);

void write_csv(std::ostream& os, const SweepResult& result);
void write_levels_csv(std::ostream& os, const LevelsTable& table);
void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum);
void write_crossings_csv(std::ostream& os, const CrossingReport& report);

}  // namespace bhspin
