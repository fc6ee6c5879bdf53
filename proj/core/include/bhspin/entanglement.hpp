#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "bhspin/linalg.hpp"
#include "bhspin/params.hpp"

namespace bhspin {

/// Two-spin product state |s1, s2>, each s in {-1, 0, 1}.
struct ProductState {
  int s1 = 0;
  int s2 = 0;
  friend constexpr bool operator==(const ProductState&, const ProductState&) = default;
};

inline constexpr std::size_t kHilbertDim = 9;

/// Fixed product-basis ordering used for rho and its partial transpose.
/// The ordering groups sigma into blocks {0}, {1}, {2,3}, {4,5}, {6,7,8}.
inline constexpr std::array<ProductState, kHilbertDim> kProductBasis{{
    {-1, 1}, {1, -1}, {-1, 0}, {0, 1}, {0, -1}, {1, 0}, {-1, -1}, {0, 0}, {1, 1},
}};

/// Index of |s1, s2> in kProductBasis. Throws InvalidArgument for |s| > 1.
[[nodiscard]] std::size_t product_index(int s1, int s2);

/// <j1 m1; j2 m2 | J M> for integer spins, Condon-Shortley phases (Racah formula).
[[nodiscard]] double clebsch_gordan(int j1, int m1, int j2, int m2, int big_j, int big_m);

/// Orthogonal 9x9 change of basis: column CoupledLabel::index() holds the
/// coupled state |j, M> expanded over kProductBasis. Computed once.
[[nodiscard]] const linalg::Matrix& clebsch_gordan_1x1();

/// rho = sum_{jM} (e^{-beta E_jM} / Z) |jM><jM| in kProductBasis.
[[nodiscard]] linalg::Matrix thermal_density_matrix(const ModelParams& p);

/// Transpose of the spin-1 indices of an arbitrary 9x9 operator given in
/// kProductBasis: sigma[(a', b), (a, b')] = rho[(a, b), (a', b')].
[[nodiscard]] linalg::Matrix partial_transpose(const linalg::Matrix& rho);

/// Partial transpose of the thermal state with named access to its
/// distinct entries.
class PartialTransposeMatrix {
 public:
  explicit PartialTransposeMatrix(linalg::Matrix sigma) : sigma_(sigma) {}

  [[nodiscard]] const linalg::Matrix& matrix() const noexcept { return sigma_; }

  [[nodiscard]] double r_plus() const noexcept { return sigma_(0, 0); }
  [[nodiscard]] double p_minus() const noexcept { return sigma_(2, 2); }
  [[nodiscard]] double p_plus() const noexcept { return sigma_(3, 3); }
  [[nodiscard]] double q_minus() const noexcept { return sigma_(2, 3); }
  [[nodiscard]] double l_minus() const noexcept { return sigma_(6, 6); }
  [[nodiscard]] double l_plus() const noexcept { return sigma_(8, 8); }
  [[nodiscard]] double m_minus() const noexcept { return sigma_(6, 7); }
  [[nodiscard]] double m_plus() const noexcept { return sigma_(7, 8); }
  [[nodiscard]] double r_minus() const noexcept { return sigma_(6, 8); }
  [[nodiscard]] double q_plus() const noexcept { return sigma_(7, 7); }

  /// The 3x3 block on {|-1,-1>, |0,0>, |1,1>}.
  [[nodiscard]] linalg::SymMatrix block_b() const;

 private:
  linalg::Matrix sigma_;
};

/// Entries L, M, P, R, Q from their closed forms, evaluated against the
/// closed-form ln Z so that large |beta E| stays finite.
[[nodiscard]] PartialTransposeMatrix partial_transpose_closed_form(const ModelParams& p);

/// partial_transpose(thermal_density_matrix(p)).
[[nodiscard]] PartialTransposeMatrix partial_transpose_numeric(const ModelParams& p);

struct NegativityResult {
  /// Order: R+, R+, the 2x2-block pair (minus, plus) twice, then the three
  /// eigenvalues of block B ascending.
  std::array<double, kHilbertDim> eigenvalues{};
  double negativity = 0.0;
};

/// N = (sum |lambda_i| - 1) / 2 from the block-structured eigenvalues.
[[nodiscard]] NegativityResult negativity(const ModelParams& p);

/// Negativity of an arbitrary density matrix in kProductBasis, using the
/// general eigensolver on its full partial transpose.
[[nodiscard]] double negativity_of(const linalg::Matrix& rho);

enum class Phase { kN0, kNHalf, kN1, kCrossover };

inline constexpr double kPhaseTolerance = 0.01;

/// N within kPhaseTolerance of 0, 1/2 or 1; anything else is a crossover.
[[nodiscard]] Phase classify_phase(double negativity) noexcept;
[[nodiscard]] std::string_view to_string(Phase phase) noexcept;

}  // namespace bhspin
