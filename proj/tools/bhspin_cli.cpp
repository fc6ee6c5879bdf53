// bhspin: spectrum, thermodynamics and negativity of the two-atom spin-1
// Bose-Hubbard model from the command line. All tables are CSV.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "bhspin/bhspin.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kDomainError = 3,
  kNoCrossing = 4,
};

// Every option may also come from the --config file; flags win.
struct Settings {
  std::optional<double> tau, gamma, omega, temp;
  std::optional<double> start, stop;
  std::optional<int> steps;
  std::optional<std::string> var, outputs, out;
  std::optional<unsigned> threads;
  std::optional<double> t, u0, u2;
  std::optional<std::string> config;
};

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    T v{};
    if constexpr (std::is_same_v<T, double>) {
      v = std::stod(text, &used);
    } else if constexpr (std::is_same_v<T, int>) {
      v = std::stoi(text, &used);
    } else {
      const long long x = std::stoll(text, &used);
      if (x < 0) throw std::invalid_argument("negative");
      v = static_cast<T>(x);
    }
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw bhspin::InvalidArgument("config key '" + key + "': cannot parse '" + text + "'");
  }
}

void merge_config(Settings& s) {
  if (!s.config) return;
  const auto entries = bhspin::load_config(*s.config);

  std::map<std::string, std::function<void(const std::string&)>> setters;
  auto num = [&](const char* key, auto& field) {
    setters[key] = [key, &field](const std::string& v) {
      using T = typename std::remove_reference_t<decltype(field)>::value_type;
      if (!field) field = parse_value<T>(key, v);
    };
  };
  auto str = [&](const char* key, std::optional<std::string>& field) {
    setters[key] = [&field](const std::string& v) {
      if (!field) field = v;
    };
  };
  num("tau", s.tau);
  num("gamma", s.gamma);
  num("omega", s.omega);
  num("temp", s.temp);
  num("start", s.start);
  num("stop", s.stop);
  num("steps", s.steps);
  num("threads", s.threads);
  num("t", s.t);
  num("u0", s.u0);
  num("u2", s.u2);
  str("var", s.var);
  str("outputs", s.outputs);
  str("out", s.out);

  for (const auto& [key, value] : entries) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw bhspin::InvalidArgument("unknown config key '" + key + "'");
    it->second(value);
  }
}

bhspin::ModelParams point(const Settings& s) {
  return bhspin::ModelParams{s.tau.value_or(0.0), s.gamma.value_or(1.0), s.omega.value_or(1.0),
                             s.temp.value_or(0.05)};
}

// Runs `body` with the selected output stream.
void with_output(const Settings& s, const std::function<void(std::ostream&)>& body) {
  const std::string path = s.out.value_or("-");
  if (path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw bhspin::InvalidArgument("cannot open output file " + path);
  body(file);
}

void add_point_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--tau", s.tau, "Linear coupling tau (default 0)");
  cmd->add_option("--gamma", s.gamma, "Quadratic coupling gamma (default 1)");
  cmd->add_option("--omega", s.omega, "Magnetic field omega (default 1)");
  cmd->add_option("--temp", s.temp, "Temperature T > 0 (default 0.05)");
}

void add_common_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--config", s.config, "key=value file; flags override its values");
  cmd->add_option("--out", s.out, "Output path, '-' for standard output (default)");
}

void add_range_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--start", s.start, "Range start");
  cmd->add_option("--stop", s.stop, "Range stop");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-atom spin-1 Bose-Hubbard model: spectrum, heat capacity, negativity"};
  app.require_subcommand(1);
  Settings s;

  auto* spectrum = app.add_subcommand("spectrum", "Nine levels at one point, ascending");
  add_point_options(spectrum, s);
  add_common_options(spectrum, s);

  auto* levels = app.add_subcommand("levels-sweep", "All nine E_jM versus tau");
  levels->add_option("--gamma", s.gamma, "Quadratic coupling gamma (default 7)");
  levels->add_option("--omega", s.omega, "Magnetic field omega (default 1)");
  add_range_options(levels, s);
  levels->add_option("--steps", s.steps, "Grid points (default 301)");
  add_common_options(levels, s);

  auto* neg = app.add_subcommand("negativity", "Negativity and partial-transpose spectrum at one point");
  add_point_options(neg, s);
  add_common_options(neg, s);

  auto* heat = app.add_subcommand("heat-capacity", "Z, U and C_V at one point");
  add_point_options(heat, s);
  add_common_options(heat, s);

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep (CSV, grid order)");
  add_point_options(sweep, s);
  sweep->add_option("--var", s.var, "Swept variable: tau, gamma, omega, temperature (default tau)");
  add_range_options(sweep, s);
  sweep->add_option("--steps", s.steps, "Grid points, >= 2 (default 600)");
  sweep->add_option("--outputs", s.outputs,
                    "Comma list of negativity, heat_capacity, internal_energy, "
                    "partition_function, spectrum, ground_label (default negativity)");
  sweep->add_option("--threads", s.threads, "Worker threads, 0 = all cores (default 0)");
  add_common_options(sweep, s);

  auto* crossings = app.add_subcommand("crossings", "Ground-state level crossings in tau");
  crossings->add_option("--gamma", s.gamma, "Quadratic coupling gamma (default 7)");
  crossings->add_option("--omega", s.omega, "Magnetic field omega (default 1)");
  add_range_options(crossings, s);
  add_common_options(crossings, s);

  auto* map = app.add_subcommand("map-params", "Lattice (t, U0, U2) to effective couplings");
  map->add_option("--t", s.t, "Tunneling amplitude t > 0 (default 1)");
  map->add_option("--u0", s.u0, "Contact scattering amplitude U0");
  map->add_option("--u2", s.u2, "Spin-dependent scattering amplitude U2");
  map->add_option("--omega", s.omega, "Magnetic field omega (default 0)");
  map->add_option("--temp", s.temp, "Temperature passed through (default 1)");
  add_common_options(map, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    merge_config(s);

    if (*spectrum) {
      const auto sp = bhspin::full_spectrum(point(s));
      with_output(s, [&](std::ostream& os) { bhspin::write_spectrum_csv(os, sp); });
    } else if (*levels) {
      const auto table = bhspin::emit_levels(
          s.gamma.value_or(7.0), s.omega.value_or(1.0),
          bhspin::TauRange{s.start.value_or(0.0), s.stop.value_or(30.0)}, s.steps.value_or(301));
      with_output(s, [&](std::ostream& os) { bhspin::write_levels_csv(os, table); });
    } else if (*neg) {
      const auto p = point(s);
      const auto n = bhspin::negativity(p);
      with_output(s, [&](std::ostream& os) {
        os << "tau,gamma,omega,temperature,negativity,phase";
        for (int i = 1; i <= 9; ++i) os << ",lambda_" << i;
        os << '\n'
           << bhspin::format_double(p.tau) << ',' << bhspin::format_double(p.gamma) << ','
           << bhspin::format_double(p.omega) << ',' << bhspin::format_double(p.temperature) << ','
           << bhspin::format_double(n.negativity) << ','
           << bhspin::to_string(bhspin::classify_phase(n.negativity));
        for (double l : n.eigenvalues) os << ',' << bhspin::format_double(l);
        os << '\n';
      });
    } else if (*heat) {
      const auto t = bhspin::thermo_point(point(s));
      const auto& p = t.params;
      with_output(s, [&](std::ostream& os) {
        os << "tau,gamma,omega,temperature,partition_function,log_partition_function,"
              "internal_energy,heat_capacity\n"
           << bhspin::format_double(p.tau) << ',' << bhspin::format_double(p.gamma) << ','
           << bhspin::format_double(p.omega) << ',' << bhspin::format_double(p.temperature) << ','
           << bhspin::format_double(t.z) << ',' << bhspin::format_double(t.log_z) << ','
           << bhspin::format_double(t.u) << ',' << bhspin::format_double(t.c_v) << '\n';
      });
    } else if (*sweep) {
      bhspin::SweepSpec spec;
      spec.fixed = point(s);
      spec.variable = bhspin::parse_variable(s.var.value_or("tau"));
      spec.start = s.start.value_or(0.0);
      spec.stop = s.stop.value_or(6.0);
      spec.steps = s.steps.value_or(600);
      spec.outputs = bhspin::parse_outputs(s.outputs.value_or("negativity"));
      const auto result = bhspin::run_sweep(spec, s.threads.value_or(0));
      with_output(s, [&](std::ostream& os) { bhspin::write_csv(os, result); });
    } else if (*crossings) {
      const auto report = bhspin::find_crossings(
          s.gamma.value_or(7.0), s.omega.value_or(1.0),
          bhspin::TauRange{s.start.value_or(0.0), s.stop.value_or(30.0)});
      with_output(s, [&](std::ostream& os) { bhspin::write_crossings_csv(os, report); });
    } else if (*map) {
      const bhspin::MicroscopicParams m{s.t.value_or(1.0), s.u0.value_or(0.0), s.u2.value_or(0.0)};
      const auto k = bhspin::map_couplings(m);
      const auto p = bhspin::to_model_params(m, s.temp.value_or(1.0), s.omega.value_or(0.0));
      with_output(s, [&](std::ostream& os) {
        os << "K0,K1,K2,tau,gamma,omega,temperature,r\n"
           << bhspin::format_double(k.k0) << ',' << bhspin::format_double(k.k1) << ','
           << bhspin::format_double(k.k2) << ',' << bhspin::format_double(p.tau) << ','
           << bhspin::format_double(p.gamma) << ',' << bhspin::format_double(p.omega) << ','
           << bhspin::format_double(p.temperature) << ',' << bhspin::format_double(p.r()) << '\n';
      });
    }
  } catch (const bhspin::NoCrossingError& e) {
    std::cerr << "bhspin: " << e.what() << '\n';
    return kNoCrossing;
  } catch (const bhspin::DomainError& e) {
    std::cerr << "bhspin: domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bhspin: invalid argument: " << e.what() << '\n';
    return kInvalidArguments;
  }
  return kOk;
}
