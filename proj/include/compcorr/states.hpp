#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "compcorr/matcore.hpp"

namespace compcorr {

/// Thrown when a state (or state parameterization) fails positivity.
class UnphysicalState : public std::domain_error {
public:
  UnphysicalState(const std::string& what, double eigenvalue)
      : std::domain_error(what), eigenvalue_(eigenvalue) {}
  /// The offending (most negative) eigenvalue.
  double eigenvalue() const noexcept { return eigenvalue_; }

private:
  double eigenvalue_;
};

/// Hermitian, unit-trace, positive semidefinite operator together with its
/// tensor-factor dimensions. Validated on construction (tolerance 1e-10).
class DensityMatrix {
public:
  static constexpr double kTolerance = 1e-10;

  DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> factor_dims);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::size_t>& factor_dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  std::size_t num_factors() const noexcept { return dims_.size(); }

private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t factor);
double von_neumann_entropy(const DensityMatrix& rho);
/// Pure state |psi><psi| on qubits; psi need not be normalized.
DensityMatrix pure_state(std::span<const Complex> psi);

/// Coefficients (c1, c2, c3) of 1/4 (I + sum c_n sigma_n (x) sigma_n).
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double operator[](std::size_t k) const { return k == 0 ? c1 : (k == 1 ? c2 : c3); }
  std::array<double, 3> as_array() const { return {c1, c2, c3}; }
};

inline constexpr double kBellPhysicalTolerance = 1e-12;

/// Closed-form eigenvalues in Bell-basis order (Psi-, Phi-, Phi+, Psi+).
std::array<double, 4> bell_basis_eigenvalues(const BellDiagonalParams& p);
/// The same four values sorted ascending.
Spectrum bd_spectrum(const BellDiagonalParams& p);
bool is_physical_bd(const BellDiagonalParams& p);
/// Throws UnphysicalState naming the most negative closed-form eigenvalue.
void require_physical_bd(const BellDiagonalParams& p);
/// PPT (equivalently separable) test: max eigenvalue <= 1/2 + 1e-12.
bool is_separable_bd(const BellDiagonalParams& p);
/// Count of closed-form eigenvalues above 1e-12.
int bd_rank(const BellDiagonalParams& p);

DensityMatrix bell_diagonal(const BellDiagonalParams& p);

struct BlochDecomposition {
  std::array<double, 3> a{};  // Alice
  std::array<double, 3> b{};  // Bob
  std::array<std::array<double, 3>, 3> T{};  // T[n][m] = Tr(rho sigma_n (x) sigma_m)

  BellDiagonalParams diagonal() const { return {T[0][0], T[1][1], T[2][2]}; }
  /// True when a = b = 0 and T is diagonal, all within tol.
  bool is_bell_diagonal(double tol = 1e-10) const;
};

BlochDecomposition bloch_decompose(const DensityMatrix& rho);
/// Rebuilds the 4x4 operator from its Bloch form (no positivity check).
ComplexMatrix reconstruct(const BlochDecomposition& d);

struct NormalForm {
  DensityMatrix state;
  BlochDecomposition bloch;
  ComplexMatrix u_a;  // applied local unitaries: state = (u_a (x) u_b) rho (...)^dagger
  ComplexMatrix u_b;
};

/// Locally unitarily equivalent state with diagonal correlation matrix.
NormalForm normal_form(const DensityMatrix& rho);

/// SU(2) element whose adjoint action realizes the rotation R in SO(3):
/// U (n.sigma) U^dagger = (R n).sigma.
ComplexMatrix su2_from_rotation(const std::array<std::array<double, 3>, 3>& R);

namespace bell {
/// Normalized Bell vectors in the computational basis |00>,|01>,|10>,|11>.
std::array<Complex, 4> phi_plus();
std::array<Complex, 4> phi_minus();
std::array<Complex, 4> psi_plus();
std::array<Complex, 4> psi_minus();
} // namespace bell

/// (1 + c3)/2 |Psi+><Psi+| + (1 - c3)/2 |Phi+><Phi+|, for |c3| <= 1.
DensityMatrix psi_phi_mixture(double c3);

/// p |Psi-><Psi-| + (1 - p) I/4, physical for p in [-1/3, 1].
DensityMatrix werner(double p);
BellDiagonalParams werner_params(double p);

/// (|00><00| + |11><11|) / 2.
DensityMatrix classically_correlated();

/// State file: a JSON document {"dims": [...], "matrix_re": [...],
/// "matrix_im": [...]} with row-major entries. Loading validates the state.
DensityMatrix read_state(std::istream& in);
DensityMatrix read_state_file(const std::filesystem::path& path);
void write_state(std::ostream& out, const DensityMatrix& rho);

} // namespace compcorr
