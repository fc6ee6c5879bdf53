// Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bhspin/bhspin.hpp"
#include "cli_runner.hpp"
#include "oracles.hpp"

using bhspin::ModelParams;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

int g_failures = 0;

void run_criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && secs >= time_limit_s) {
    o.pass = false;
    o.detail += "; runtime limit " + bhspin::format_double(time_limit_s) + " s exceeded";
  }
  std::printf("[%s] AC%-2d %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  for (const auto& n : o.notes) std::printf("         %s\n", n.c_str());
  std::fflush(stdout);
  if (!o.pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bhspin::SweepSpec tau_sweep(double start, double stop, int steps, double gamma, double omega, double temp,
                            std::vector<bhspin::Output> outputs) {
  bhspin::SweepSpec s;
  s.variable = bhspin::SweepVariable::kTau;
  s.start = start;
  s.stop = stop;
  s.steps = steps;
  s.fixed = {0.0, gamma, omega, temp};
  s.outputs = std::move(outputs);
  return s;
}

const bhspin::SweepRow& row_at(const bhspin::SweepResult& r, double tau) {
  return *std::min_element(r.rows.begin(), r.rows.end(), [tau](const auto& a, const auto& b) {
    return std::abs(a.params.tau - tau) < std::abs(b.params.tau - tau);
  });
}

double max_adjacent_jump(const bhspin::SweepResult& r) {
  double m = 0.0;
  for (std::size_t k = 1; k < r.rows.size(); ++k) {
    m = std::max(m, std::abs(*r.rows[k].negativity - *r.rows[k - 1].negativity));
  }
  return m;
}

// Widths of contiguous CROSSOVER runs, each grid point covering one grid step.
std::vector<double> crossover_widths(const bhspin::SweepResult& r) {
  const double step = (r.spec.stop - r.spec.start) / (r.spec.steps - 1);
  std::vector<double> widths;
  int run = 0;
  for (const auto& row : r.rows) {
    if (*row.phase == bhspin::Phase::kCrossover) {
      ++run;
    } else if (run > 0) {
      widths.push_back(run * step);
      run = 0;
    }
  }
  if (run > 0) widths.push_back(run * step);
  return widths;
}

// Parse "A,tau,..." / "B,tau,..." lines of the crossings CSV.
std::vector<double> parse_crossing_taus(const std::string& csv) {
  std::vector<double> taus;
  std::size_t pos = csv.find('\n');
  while (pos != std::string::npos && pos + 1 < csv.size()) {
    const std::size_t end = csv.find('\n', pos + 1);
    const std::string line = csv.substr(pos + 1, end - pos - 1);
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = line.find(',', c1 + 1);
    taus.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    pos = end;
  }
  return taus;
}

}  // namespace

int main() {
  std::printf("bhspin acceptance suite\n");

  run_criterion(1, "partition-function identity", 1.0, [] {
    oracle::PointSampler sample(1001);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const ModelParams p = sample();
      const double d = std::abs(bhspin::log_partition_function(p) -
                                static_cast<double>(oracle::log_boltzmann_sum(p)));
      worst = std::max(worst, d);
    }
    return Outcome{worst <= 1e-12, "1000 points, max relative deviation of Z = " + fmt(worst) + " (tol 1e-12)", {}};
  });

  run_criterion(2, "partial-transpose oracle equivalence", 5.0, [] {
    oracle::PointSampler sample(1002);
    double worst_entry = 0.0, worst_eig = 0.0, worst_eig_eigen = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const ModelParams p = sample();
      const auto closed = bhspin::partial_transpose_closed_form(p);
      const auto numeric = bhspin::partial_transpose_numeric(p);
      worst_entry = std::max(worst_entry, oracle::max_abs_diff(closed.matrix(), numeric.matrix()));

      auto assembled = bhspin::negativity(p).eigenvalues;
      std::sort(assembled.begin(), assembled.end());
      const std::vector<double> a(assembled.begin(), assembled.end());
      worst_eig = std::max(worst_eig, oracle::max_abs_diff(a, bhspin::linalg::sym_eigenvalues(numeric.matrix())));
      worst_eig_eigen = std::max(worst_eig_eigen, oracle::max_abs_diff(a, oracle::sorted_eigenvalues(numeric.matrix())));
    }
    const bool pass = worst_entry <= 1e-12 && worst_eig <= 1e-10 && worst_eig_eigen <= 1e-10;
    return Outcome{pass,
                   "1000 points, max entry diff = " + fmt(worst_entry) + " (tol 1e-12), eigenvalue multiset diff = " +
                       fmt(worst_eig) + " Jacobi / " + fmt(worst_eig_eigen) + " Eigen (tol 1e-10)",
                   {}};
  });

  run_criterion(3, "critical points", 0.0, [] {
    Outcome o;
    const auto wide_gap = run_cli("crossings --gamma 7 --omega 1 --start 0 --stop 30");
    const auto unit_gap = run_cli("crossings --gamma 1 --omega 1 --start 0 --stop 10");
    const auto t3 = parse_crossing_taus(wide_gap.out);
    const auto t1 = parse_crossing_taus(unit_gap.out);
    const bool cli_ok = wide_gap.exit_code == 0 && unit_gap.exit_code == 0 && t3.size() == 2 && t1.size() == 2 &&
                        std::abs(t3[0] - 0.5) <= 1e-6 && std::abs(t3[1] - 22.0) <= 1e-6 &&
                        std::abs(t1[0] - 0.5) <= 1e-6 && std::abs(t1[1] - 4.0) <= 1e-6;

    std::mt19937_64 rng(1003);
    std::uniform_real_distribution<double> d(0.01, 20.0);
    double worst = 0.0;
    bool all_two = true;
    for (int i = 0; i < 100; ++i) {
      const double gamma = d(rng), omega = d(rng);
      const auto r = bhspin::find_crossings(gamma, omega, {0.0, 2.0 * (omega + 3.0 * gamma) + 1.0});
      if (r.crossings.size() != 2) {
        all_two = false;
        continue;
      }
      worst = std::max({worst, std::abs(*r.tau_a() - omega / 2.0), std::abs(*r.tau_b() - (omega + 3.0 * gamma))});
    }
    o.pass = cli_ok && all_two && worst <= 1e-6;
    o.detail = "(7,1): " + (t3.size() == 2 ? fmt(t3[0]) + ", " + fmt(t3[1]) : "?") +
               "; (1,1): " + (t1.size() == 2 ? fmt(t1[0]) + ", " + fmt(t1[1]) : "?") +
               "; 100 random pairs max |dev| = " + fmt(worst) + " (tol 1e-6)";
    return o;
  });

  run_criterion(4, "negativity staircase (gamma = omega = 1)", 10.0, [&] {
    using bhspin::Output;
    const auto cold = bhspin::run_sweep(tau_sweep(0, 6, 601, 1, 1, 0.05, {Output::kNegativity}));
    const auto mid = bhspin::run_sweep(tau_sweep(0, 6, 601, 1, 1, 0.6, {Output::kNegativity}));
    const auto warm = bhspin::run_sweep(tau_sweep(0, 6, 601, 1, 1, 1.0, {Output::kNegativity}));
    const double n02 = *row_at(cold, 0.2).negativity;
    const double n2 = *row_at(cold, 2.0).negativity;
    const double n5 = *row_at(cold, 5.0).negativity;
    const double j_cold = max_adjacent_jump(cold), j_mid = max_adjacent_jump(mid), j_warm = max_adjacent_jump(warm);
    Outcome o;
    o.pass = std::abs(n02) <= 0.01 && std::abs(n2 - 0.5) <= 0.01 && std::abs(n5 - 1.0) <= 0.01 &&
             j_cold > j_mid && j_mid > j_warm;
    o.detail = "T=0.05: N(0.2)=" + fmt(n02) + ", N(2)=" + fmt(n2) + ", N(5)=" + fmt(n5) +
               "; max |dN| per step T=0.05/0.6/1: " + fmt(j_cold) + " > " + fmt(j_mid) + " > " + fmt(j_warm);
    return o;
  });

  run_criterion(5, "zero-temperature sharpening", 0.0, [] {
    using bhspin::Output;
    const auto grid = bhspin::run_sweep(tau_sweep(0, 6, 601, 1, 1, 1e-3, {Output::kNegativity}));
    const auto fine = bhspin::run_sweep(tau_sweep(0, 6, 60001, 1, 1, 1e-3, {Output::kNegativity}));
    const auto w_grid = crossover_widths(grid);
    const auto w_fine = crossover_widths(fine);
    double worst_grid = 0.0, worst_fine = 0.0;
    for (double w : w_grid) worst_grid = std::max(worst_grid, w);
    for (double w : w_fine) worst_fine = std::max(worst_fine, w);
    Outcome o;
    o.pass = !w_grid.empty() && worst_grid < 0.02 && worst_fine < 0.02;
    o.detail = "T=1e-3: " + std::to_string(w_grid.size()) + " crossover regions, widest " + fmt(worst_grid) +
               " on the 0.01 grid, " + fmt(worst_fine) + " on a 1e-4 grid (limit 0.02)";
    return o;
  });

  run_criterion(6, "heat-capacity profile (gamma = 7, omega = 1, T = 0.6)", 0.0, [] {
    using bhspin::Output;
    const double tau_a = 0.5, tau_b = 22.0;
    const auto r = bhspin::run_sweep(tau_sweep(0, 30, 30001, 7, 1, 0.6, {Output::kNegativity, Output::kHeatCapacity}));
    auto cv = [&](std::size_t k) { return *r.rows[k].heat_capacity; };

    // (a) interior local maxima of C_V near the critical points
    std::vector<double> maxima, minima;
    for (std::size_t k = 1; k + 1 < r.rows.size(); ++k) {
      if (cv(k) > cv(k - 1) && cv(k) > cv(k + 1)) maxima.push_back(r.rows[k].params.tau);
      if (cv(k) < cv(k - 1) && cv(k) < cv(k + 1)) minima.push_back(r.rows[k].params.tau);
    }
    auto nearest = [](const std::vector<double>& xs, double x) {
      double best = INFINITY;
      for (double v : xs) best = std::min(best, std::abs(v - x));
      return best;
    };
    const double da = nearest(maxima, tau_a), db = nearest(maxima, tau_b);
    auto argmax_in = [&](double lo, double hi) {
      double best_tau = lo, best = -1.0;
      for (std::size_t k = 0; k < r.rows.size(); ++k) {
        const double t = r.rows[k].params.tau;
        if (t >= lo && t <= hi && cv(k) > best) {
          best = cv(k);
          best_tau = t;
        }
      }
      return best_tau;
    };
    const double arg_a = argmax_in(0.0, 2.0), arg_b = argmax_in(20.0, 24.0);
    const bool a_ok = da <= 0.5 && db <= 0.5 && std::abs(arg_a - tau_a) <= 0.5 && std::abs(arg_b - tau_b) <= 0.5;

    // (b) mid-plateau flatness
    double worst_flat = 0.0;
    for (double t : {5.0, 10.0, 15.0}) {
      worst_flat = std::max(worst_flat, std::abs(bhspin::heat_capacity({t + 0.1, 7, 1, 0.6}) -
                                                 bhspin::heat_capacity({t, 7, 1, 0.6})));
    }
    const bool b_ok = worst_flat < 1e-3;

    // (c) anticorrelation: N=1 plateau (tau >= 26) vs N=0 plateau (tau <= 0.2)
    double max_cv_n1 = 0.0, min_cv_n0 = INFINITY, tau_at_max_n1 = 0.0, min_n_n1 = 1.0, max_n_n0 = 0.0;
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      const double t = r.rows[k].params.tau;
      if (t >= 26.0) {
        if (cv(k) > max_cv_n1) {
          max_cv_n1 = cv(k);
          tau_at_max_n1 = t;
        }
        min_n_n1 = std::min(min_n_n1, *r.rows[k].negativity);
      }
      if (t <= 0.2) {
        min_cv_n0 = std::min(min_cv_n0, cv(k));
        max_n_n0 = std::max(max_n_n0, *r.rows[k].negativity);
      }
    }
    const bool c_ok = max_cv_n1 < 0.05 && min_cv_n0 > max_cv_n1;

    std::string max_list, min_list;
    for (double m : maxima) max_list += (max_list.empty() ? "" : ", ") + fmt(m);
    for (double m : minima) min_list += (min_list.empty() ? "" : ", ") + fmt(m);

    Outcome o;
    o.pass = a_ok && b_ok && c_ok;
    o.detail = std::string("(a) ") + (a_ok ? "pass" : "FAIL") + ", (b) " + (b_ok ? "pass" : "FAIL") + ", (c) " +
               (c_ok ? "pass" : "FAIL");
    o.notes.push_back("(a) C_V local maxima at tau = {" + max_list + "}; nearest to tau_A " + fmt(da) +
                      " away, to tau_B " + fmt(db) + " away (limit 0.5); argmax on [0,2] = " + fmt(arg_a) +
                      ", on [20,24] = " + fmt(arg_b) + "; local minima at tau = {" + min_list + "}");
    o.notes.push_back("(b) max |C_V(tau+0.1) - C_V(tau)| at tau in {5,10,15} = " + fmt(worst_flat) + " (limit 1e-3)");
    o.notes.push_back("(c) max C_V on tau >= 26 = " + fmt(max_cv_n1) + " at tau = " + fmt(tau_at_max_n1) +
                      " (limit 0.05, N >= " + fmt(min_n_n1) + "); min C_V on tau <= 0.2 = " + fmt(min_cv_n0) +
                      " (N <= " + fmt(max_n_n0) + ")");
    return o;
  });

  run_criterion(7, "thermodynamic derivative check", 0.0, [] {
    oracle::PointSampler sample(1007);
    double worst = 0.0;
    int compared = 0;
    for (int i = 0; i < 1000; ++i) {
      const ModelParams p = sample();
      const double cv = bhspin::heat_capacity(p);
      if (cv <= 1e-3) continue;
      ++compared;
      const double fd = bhspin::linalg::central_diff(
          [&](double t) { return bhspin::internal_energy({p.tau, p.gamma, p.omega, t}); }, p.temperature,
          1e-5 * p.temperature);
      worst = std::max(worst, std::abs(fd - cv) / cv);
    }
    return Outcome{compared > 0 && worst <= 1e-6,
                   std::to_string(compared) + " of 1000 points with C_V > 1e-3, max relative deviation = " +
                       fmt(worst) + " (tol 1e-6)",
                   {}};
  });

  run_criterion(8, "state validity", 0.0, [] {
    oracle::PointSampler sample(1008);
    std::vector<ModelParams> points;
    for (int i = 0; i < 1000; ++i) points.push_back(sample());
    for (double tau = 0.0; tau <= 30.0; tau += 0.05) {
      points.push_back({tau, 7, 1, 0.6});
      points.push_back({tau / 5.0, 1, 1, 0.05});
      points.push_back({tau / 5.0, 1, 1, 1e-3});
    }
    double min_rho_eig = INFINITY, worst_rho_tr = 0.0, worst_sigma_tr = 0.0, min_n = INFINITY, max_n = -INFINITY,
           min_cv = INFINITY;
    for (const ModelParams& p : points) {
      const auto rho = bhspin::thermal_density_matrix(p);
      min_rho_eig = std::min(min_rho_eig, bhspin::linalg::sym_eigenvalues(rho).front());
      worst_rho_tr = std::max(worst_rho_tr, std::abs(rho.trace() - 1.0));
      worst_sigma_tr =
          std::max(worst_sigma_tr, std::abs(bhspin::partial_transpose_closed_form(p).matrix().trace() - 1.0));
      const double n = bhspin::negativity(p).negativity;
      min_n = std::min(min_n, n);
      max_n = std::max(max_n, n);
      min_cv = std::min(min_cv, bhspin::heat_capacity(p));
    }
    Outcome o;
    o.pass = min_rho_eig >= -1e-12 && worst_rho_tr <= 1e-12 && worst_sigma_tr <= 1e-12 && min_n >= 0.0 &&
             max_n <= 1.0 && min_cv >= 0.0;
    o.detail = std::to_string(points.size()) + " points: min eig(rho) = " + fmt(min_rho_eig) + ", |tr rho - 1| <= " +
               fmt(worst_rho_tr) + ", |tr sigma - 1| <= " + fmt(worst_sigma_tr) + ", N in [" + fmt(min_n) + ", " +
               fmt(max_n) + "], min C_V = " + fmt(min_cv);
    return o;
  });

  run_criterion(9, "parameter-map identity", 0.0, [] {
    std::mt19937_64 rng(1009);
    std::uniform_real_distribution<double> t_dist(1e-3, 10.0), u_dist(-100.0, 100.0);
    double worst = 0.0;
    int n = 0;
    while (n < 1000) {
      const bhspin::MicroscopicParams m{t_dist(rng), u_dist(rng), u_dist(rng)};
      if (std::abs(m.u0 + m.u2) < 1e-9 || std::abs(m.u0 - 2 * m.u2) < 1e-9) continue;
      const auto k = bhspin::map_couplings(m);
      const double scale = std::max({std::abs(k.k0), std::abs(k.k1), std::abs(k.k2)});
      worst = std::max(worst, std::abs(k.k0 - (k.k1 - k.k2)) / scale);
      ++n;
    }
    const int e1 = run_cli("map-params --t 1 --u0 1 --u2 -1").exit_code;
    const int e2 = run_cli("map-params --t 1 --u0 2 --u2 1").exit_code;
    const int ok = run_cli("map-params --t 1 --u0 4 --u2 1").exit_code;
    Outcome o;
    o.pass = worst <= 1e-12 && e1 == 3 && e2 == 3 && ok == 0;
    o.detail = "1000 points, max relative |K0-(K1-K2)| = " + fmt(worst) + " (tol 1e-12); singular inputs exit " +
               std::to_string(e1) + "/" + std::to_string(e2) + " (expected 3)";
    return o;
  });

  run_criterion(10, "determinism", 0.0, [] {
    const std::string args =
        "sweep --var tau --start 0 --stop 30 --steps 3001 --gamma 7 --omega 1 --temp 0.6 "
        "--outputs negativity,heat_capacity,internal_energy,partition_function,spectrum,ground_label";
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto serial = run_cli(args + " --threads 1");
    const auto wide = run_cli(args + " --threads 64");
    const auto native = run_cli(args + " --threads 0");
    const auto again = run_cli(args + " --threads 64");
    Outcome o;
    o.pass = serial.exit_code == 0 && !serial.out.empty() && serial.out == wide.out && serial.out == native.out &&
             serial.out == again.out;
    o.detail = "4 runs (1, 64, " + std::to_string(hw) + " (auto), 64 threads), " +
               std::to_string(serial.out.size()) + " bytes each, " + (o.pass ? "byte-identical" : "DIFFER");
    return o;
  });

  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
