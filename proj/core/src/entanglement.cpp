#include "bhspin/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "bhspin/errors.hpp"
#include "bhspin/spectrum.hpp"
#include "bhspin/thermo.hpp"

namespace bhspin {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

linalg::Matrix build_cg_matrix() {
  linalg::Matrix c(kHilbertDim);
  for (const CoupledLabel& l : kCoupledLabels) {
    for (std::size_t row = 0; row < kHilbertDim; ++row) {
      const ProductState s = kProductBasis[row];
      c(row, l.index()) = clebsch_gordan(1, s.s1, 1, s.s2, l.j, l.m);
    }
  }
  return c;
}

}  // namespace

std::size_t product_index(int s1, int s2) {
  for (std::size_t k = 0; k < kHilbertDim; ++k) {
    if (kProductBasis[k] == ProductState{s1, s2}) return k;
  }
  throw InvalidArgument("no product state |" + std::to_string(s1) + "," + std::to_string(s2) + ">");
}

double clebsch_gordan(int j1, int m1, int j2, int m2, int big_j, int big_m) {
  if (m1 + m2 != big_m) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(big_m) > big_j) return 0.0;
  if (big_j < std::abs(j1 - j2) || big_j > j1 + j2) return 0.0;

  const double prefactor =
      std::sqrt((2.0 * big_j + 1.0) * factorial(big_j + j1 - j2) * factorial(big_j - j1 + j2) *
                factorial(j1 + j2 - big_j) / factorial(j1 + j2 + big_j + 1)) *
      std::sqrt(factorial(big_j + big_m) * factorial(big_j - big_m) * factorial(j1 - m1) *
                factorial(j1 + m1) * factorial(j2 - m2) * factorial(j2 + m2));

  double sum = 0.0;
  for (int k = 0; k <= j1 + j2 - big_j; ++k) {
    const int d1 = j1 + j2 - big_j - k;
    const int d2 = j1 - m1 - k;
    const int d3 = j2 + m2 - k;
    const int d4 = big_j - j2 + m1 + k;
    const int d5 = big_j - j1 - m2 + k;
    if (d1 < 0 || d2 < 0 || d3 < 0 || d4 < 0 || d5 < 0) continue;
    const double term = 1.0 / (factorial(k) * factorial(d1) * factorial(d2) * factorial(d3) *
                               factorial(d4) * factorial(d5));
    sum += (k % 2 == 0) ? term : -term;
  }
  return prefactor * sum;
}

const linalg::Matrix& clebsch_gordan_1x1() {
  static const linalg::Matrix cg = build_cg_matrix();
  return cg;
}

linalg::Matrix thermal_density_matrix(const ModelParams& p) {
  const BoltzmannWeights w = boltzmann_weights(p);
  const linalg::Matrix& c = clebsch_gordan_1x1();
  linalg::Matrix rho(kHilbertDim);
  for (std::size_t a = 0; a < kHilbertDim; ++a) {
    for (std::size_t b = a; b < kHilbertDim; ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < kNumLevels; ++k) s += c(a, k) * w.probability(k) * c(b, k);
      rho(a, b) = s;
      rho(b, a) = s;
    }
  }
  return rho;
}

linalg::Matrix partial_transpose(const linalg::Matrix& rho) {
  if (rho.dim() != kHilbertDim) throw InvalidArgument("partial transpose needs a 9x9 operator");
  linalg::Matrix sigma(kHilbertDim);
  for (std::size_t row = 0; row < kHilbertDim; ++row) {
    for (std::size_t col = 0; col < kHilbertDim; ++col) {
      const ProductState bra = kProductBasis[row];
      const ProductState ket = kProductBasis[col];
      sigma(product_index(ket.s1, bra.s2), product_index(bra.s1, ket.s2)) = rho(row, col);
    }
  }
  return sigma;
}

linalg::SymMatrix PartialTransposeMatrix::block_b() const {
  linalg::Matrix b(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = sigma_(6 + i, 6 + j);
  }
  return b;
}

PartialTransposeMatrix partial_transpose_closed_form(const ModelParams& p) {
  const double log_z = log_partition_function(p);
  const double beta = p.beta();
  const double bt = beta * p.tau;
  const double bw = beta * p.omega;
  const double b3g = beta * (3.0 * p.gamma - 2.0 * p.tau);
  // exp(x) / Z
  auto boltz = [log_z](double x) { return std::exp(x - log_z); };

  // e^{-2 beta (tau +- omega)} / Z
  const double l_plus = boltz(-2.0 * (bt + bw));
  const double l_minus = boltz(-2.0 * (bt - bw));
  // -e^{-beta (tau +- omega)} sinh(beta tau) / Z and the cosh counterpart
  const double m_plus = -0.5 * (boltz(-(bt + bw) + bt) - boltz(-(bt + bw) - bt));
  const double m_minus = -0.5 * (boltz(-(bt - bw) + bt) - boltz(-(bt - bw) - bt));
  const double p_plus = 0.5 * (boltz(-(bt + bw) + bt) + boltz(-(bt + bw) - bt));
  const double p_minus = 0.5 * (boltz(-(bt - bw) + bt) + boltz(-(bt - bw) - bt));
  // e^{-beta tau}(e^{-beta tau} +- 3 e^{beta tau} + 2 e^{-beta(3 gamma - 2 tau)}) / 6Z
  const double r_plus = (boltz(-bt - bt) + 3.0 * boltz(-bt + bt) + 2.0 * boltz(-bt - b3g)) / 6.0;
  const double r_minus = (boltz(-bt - bt) - 3.0 * boltz(-bt + bt) + 2.0 * boltz(-bt - b3g)) / 6.0;
  // e^{-beta tau}((3 +- 1)/2 e^{-beta tau} +- e^{-beta(3 gamma - 2 tau)}) / 3Z
  const double q_plus = (2.0 * boltz(-bt - bt) + boltz(-bt - b3g)) / 3.0;
  const double q_minus = (boltz(-bt - bt) - boltz(-bt - b3g)) / 3.0;

  linalg::Matrix s(kHilbertDim);
  s(0, 0) = r_plus;
  s(1, 1) = r_plus;
  for (std::size_t base : {std::size_t{2}, std::size_t{4}}) {
    s(base, base) = p_minus;
    s(base + 1, base + 1) = p_plus;
    s(base, base + 1) = q_minus;
    s(base + 1, base) = q_minus;
  }
  s(6, 6) = l_minus;
  s(7, 7) = q_plus;
  s(8, 8) = l_plus;
  s(6, 7) = s(7, 6) = m_minus;
  s(7, 8) = s(8, 7) = m_plus;
  s(6, 8) = s(8, 6) = r_minus;
  return PartialTransposeMatrix(s);
}

PartialTransposeMatrix partial_transpose_numeric(const ModelParams& p) {
  return PartialTransposeMatrix(partial_transpose(thermal_density_matrix(p)));
}

NegativityResult negativity(const ModelParams& p) {
  const PartialTransposeMatrix sigma = partial_transpose_closed_form(p);

  const double pp = sigma.p_plus();
  const double pm = sigma.p_minus();
  const double qm = sigma.q_minus();
  const double root = std::sqrt((pp - pm) * (pp - pm) + 4.0 * qm * qm);
  const double lower = 0.5 * (pp + pm - root);
  const double upper = 0.5 * (pp + pm + root);

  const std::vector<double> block = linalg::sym_eigenvalues(sigma.block_b());

  NegativityResult out;
  out.eigenvalues = {sigma.r_plus(), sigma.r_plus(), lower, upper, lower, upper,
                     block[0],       block[1],       block[2]};
  double abs_sum = 0.0;
  for (double l : out.eigenvalues) abs_sum += std::abs(l);
  out.negativity = std::max(0.0, 0.5 * (abs_sum - 1.0));
  return out;
}

double negativity_of(const linalg::Matrix& rho) {
  const std::vector<double> eig = linalg::sym_eigenvalues(partial_transpose(rho));
  double abs_sum = 0.0;
  for (double l : eig) abs_sum += std::abs(l);
  return std::max(0.0, 0.5 * (abs_sum - rho.trace()));
}

Phase classify_phase(double negativity) noexcept {
  if (std::abs(negativity) <= kPhaseTolerance) return Phase::kN0;
  if (std::abs(negativity - 0.5) <= kPhaseTolerance) return Phase::kNHalf;
  if (std::abs(negativity - 1.0) <= kPhaseTolerance) return Phase::kN1;
  return Phase::kCrossover;
}

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::kN0: return "N0";
    case Phase::kNHalf: return "N_HALF";
    case Phase::kN1: return "N1";
    case Phase::kCrossover: return "CROSSOVER";
  }
  return "CROSSOVER";
}

}  // namespace bhspin
