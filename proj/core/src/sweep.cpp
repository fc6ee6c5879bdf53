#include "bhspin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "bhspin/errors.hpp"
#include "bhspin/thermo.hpp"

namespace bhspin {

namespace {

constexpr std::array<Output, 6> kCanonicalOutputs{
    Output::kNegativity,        Output::kHeatCapacity, Output::kInternalEnergy,
    Output::kPartitionFunction, Output::kSpectrum,     Output::kGroundLabel,
};

bool wants(const SweepSpec& spec, Output o) {
  return std::find(spec.outputs.begin(), spec.outputs.end(), o) != spec.outputs.end();
}

bool needs_temperature(const SweepSpec& spec) {
  return wants(spec, Output::kNegativity) || wants(spec, Output::kHeatCapacity) ||
         wants(spec, Output::kInternalEnergy) || wants(spec, Output::kPartitionFunction);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double finite_or_throw(double v, const char* what, const ModelParams& p) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " is not finite at tau=" + format_double(p.tau) +
                      " gamma=" + format_double(p.gamma) + " omega=" + format_double(p.omega) +
                      " temperature=" + format_double(p.temperature));
  }
  return v;
}

ModelParams params_at(const SweepSpec& spec, double x) {
  ModelParams p = spec.fixed;
  switch (spec.variable) {
    case SweepVariable::kTau: p.tau = x; break;
    case SweepVariable::kGamma: p.gamma = x; break;
    case SweepVariable::kOmega: p.omega = x; break;
    case SweepVariable::kTemperature: p.temperature = x; break;
  }
  return p;
}

}  // namespace

SweepVariable parse_variable(std::string_view name) {
  if (name == "tau") return SweepVariable::kTau;
  if (name == "gamma") return SweepVariable::kGamma;
  if (name == "omega") return SweepVariable::kOmega;
  if (name == "temperature" || name == "temp") return SweepVariable::kTemperature;
  throw InvalidArgument("unknown sweep variable '" + std::string(name) + "'");
}

std::string_view to_string(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::kTau: return "tau";
    case SweepVariable::kGamma: return "gamma";
    case SweepVariable::kOmega: return "omega";
    case SweepVariable::kTemperature: return "temperature";
  }
  return "tau";
}

Output parse_output(std::string_view name) {
  for (Output o : kCanonicalOutputs) {
    if (to_string(o) == name) return o;
  }
  throw InvalidArgument("unknown output '" + std::string(name) + "'");
}

std::string_view to_string(Output o) noexcept {
  switch (o) {
    case Output::kNegativity: return "negativity";
    case Output::kHeatCapacity: return "heat_capacity";
    case Output::kInternalEnergy: return "internal_energy";
    case Output::kPartitionFunction: return "partition_function";
    case Output::kSpectrum: return "spectrum";
    case Output::kGroundLabel: return "ground_label";
  }
  return "negativity";
}

std::vector<Output> parse_outputs(std::string_view csv) {
  std::vector<Output> requested;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string_view item = trim(csv.substr(pos, comma - pos));
    if (!item.empty()) requested.push_back(parse_output(item));
    pos = comma + 1;
  }
  std::vector<Output> out;
  for (Output o : kCanonicalOutputs) {
    if (std::find(requested.begin(), requested.end(), o) != requested.end()) out.push_back(o);
  }
  if (out.empty()) throw InvalidArgument("no outputs requested");
  return out;
}

void validate(const SweepSpec& spec) {
  if (spec.steps < 2) throw InvalidArgument("steps must be at least 2");
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop)) {
    throw InvalidArgument("sweep bounds must be finite");
  }
  if (spec.start > spec.stop) throw InvalidArgument("sweep range must satisfy start <= stop");
  if (spec.outputs.empty()) throw InvalidArgument("no outputs requested");
  for (double v : {spec.fixed.tau, spec.fixed.gamma, spec.fixed.omega}) {
    if (!std::isfinite(v)) throw InvalidArgument("fixed parameters must be finite");
  }
  if (needs_temperature(spec)) {
    if (spec.variable == SweepVariable::kTemperature) {
      if (!(spec.start > 0.0)) throw DomainError("temperature sweep must start above zero");
    } else {
      require_positive_temperature(spec.fixed);
    }
  }
}

double grid_value(const SweepSpec& spec, int k) noexcept {
  if (k == spec.steps - 1) return spec.stop;
  return spec.start + (spec.stop - spec.start) * static_cast<double>(k) / (spec.steps - 1);
}

SweepRow evaluate_row(const SweepSpec& spec, int k) {
  SweepRow row;
  row.params = params_at(spec, grid_value(spec, k));
  const ModelParams& p = row.params;

  if (wants(spec, Output::kNegativity)) {
    row.negativity = finite_or_throw(negativity(p).negativity, "negativity", p);
    row.phase = classify_phase(*row.negativity);
  }
  if (wants(spec, Output::kHeatCapacity)) {
    row.heat_capacity = finite_or_throw(heat_capacity(p), "heat capacity", p);
  }
  if (wants(spec, Output::kInternalEnergy)) {
    row.internal_energy = finite_or_throw(internal_energy(p), "internal energy", p);
  }
  if (wants(spec, Output::kPartitionFunction)) {
    row.partition_function = finite_or_throw(partition_function(p), "partition function", p);
  }
  if (wants(spec, Output::kSpectrum) || wants(spec, Output::kGroundLabel)) {
    const Spectrum s = full_spectrum(p);
    if (wants(spec, Output::kSpectrum)) row.spectrum = s;
    if (wants(spec, Output::kGroundLabel)) {
      row.ground_label = s.ground().label;
      row.gap = s.gap();
    }
  }
  return row;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec);
  SweepResult result;
  result.spec = spec;
  result.rows.resize(static_cast<std::size_t>(spec.steps));

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.steps));

  std::vector<std::exception_ptr> errors(result.rows.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next.fetch_add(1); k < spec.steps; k = next.fetch_add(1)) {
      try {
        result.rows[static_cast<std::size_t>(k)] = evaluate_row(spec, k);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

LevelsTable emit_levels(double gamma, double omega, TauRange range, int steps) {
  if (steps < 2) throw InvalidArgument("steps must be at least 2");
  if (!std::isfinite(range.start) || !std::isfinite(range.stop) || !(range.start < range.stop)) {
    throw InvalidArgument("tau range must satisfy start < stop");
  }
  SweepSpec grid;
  grid.start = range.start;
  grid.stop = range.stop;
  grid.steps = steps;

  LevelsTable t;
  t.gamma = gamma;
  t.omega = omega;
  for (int k = 0; k < steps; ++k) {
    const double tau = grid_value(grid, k);
    t.tau.push_back(tau);
    t.energies.push_back(label_energies(ModelParams{tau, gamma, omega, 1.0}));
  }
  return t;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

std::string level_column_name(const CoupledLabel& label) {
  std::string m = label.m < 0 ? "m" + std::to_string(-label.m) : std::to_string(label.m);
  return "E_" + std::to_string(label.j) + "_" + m;
}

void write_csv(std::ostream& os, const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  os << "tau,gamma,omega,temperature";
  for (Output o : spec.outputs) {
    switch (o) {
      case Output::kNegativity: os << ",negativity,phase"; break;
      case Output::kHeatCapacity: os << ",heat_capacity"; break;
      case Output::kInternalEnergy: os << ",internal_energy"; break;
      case Output::kPartitionFunction: os << ",partition_function"; break;
      case Output::kSpectrum:
        for (const CoupledLabel& l : kCoupledLabels) os << ',' << level_column_name(l);
        break;
      case Output::kGroundLabel: os << ",ground_j,ground_m,gap"; break;
    }
  }
  os << '\n';

  for (const SweepRow& row : result.rows) {
    const ModelParams& p = row.params;
    os << format_double(p.tau) << ',' << format_double(p.gamma) << ',' << format_double(p.omega)
       << ',' << format_double(p.temperature);
    for (Output o : spec.outputs) {
      switch (o) {
        case Output::kNegativity:
          os << ',' << format_double(*row.negativity) << ',' << to_string(*row.phase);
          break;
        case Output::kHeatCapacity: os << ',' << format_double(*row.heat_capacity); break;
        case Output::kInternalEnergy: os << ',' << format_double(*row.internal_energy); break;
        case Output::kPartitionFunction: os << ',' << format_double(*row.partition_function); break;
        case Output::kSpectrum: {
          const auto e = label_energies(p);
          for (const CoupledLabel& l : kCoupledLabels) os << ',' << format_double(e[l.index()]);
          break;
        }
        case Output::kGroundLabel:
          os << ',' << row.ground_label->j << ',' << row.ground_label->m << ','
             << format_double(*row.gap);
          break;
      }
    }
    os << '\n';
  }
}

void write_levels_csv(std::ostream& os, const LevelsTable& table) {
  os << "tau";
  for (const CoupledLabel& l : kCoupledLabels) os << ',' << level_column_name(l);
  os << '\n';
  for (std::size_t k = 0; k < table.tau.size(); ++k) {
    os << format_double(table.tau[k]);
    for (double e : table.energies[k]) os << ',' << format_double(e);
    os << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum) {
  os << "rank,j,m,energy\n";
  for (std::size_t k = 0; k < spectrum.levels.size(); ++k) {
    const Level& l = spectrum.levels[k];
    os << k << ',' << l.label.j << ',' << l.label.m << ',' << format_double(l.energy) << '\n';
  }
}

void write_crossings_csv(std::ostream& os, const CrossingReport& report) {
  os << "point,tau,energy,bracket_lo,bracket_hi,residual_gap,from_j,from_m,to_j,to_m\n";
  for (std::size_t k = 0; k < report.crossings.size(); ++k) {
    const Crossing& c = report.crossings[k];
    const std::string name = k < 26 ? std::string(1, static_cast<char>('A' + k)) : std::to_string(k);
    os << name << ',' << format_double(c.tau) << ',' << format_double(c.energy) << ','
       << format_double(c.bracket_lo) << ',' << format_double(c.bracket_hi) << ','
       << format_double(c.residual_gap) << ',' << c.before.j << ',' << c.before.m << ','
       << c.after.j << ',' << c.after.m << '\n';
  }
}

}  // namespace bhspin
