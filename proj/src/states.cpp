#include "compcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

namespace compcorr {

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> factor_dims)
    : matrix_(std::move(matrix)), dims_(std::move(factor_dims)) {
  if (dims_.empty()) throw std::invalid_argument("DensityMatrix: empty factor list");
  const std::size_t total =
      std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
  if (!matrix_.square() || matrix_.rows() != total) {
    throw std::invalid_argument("DensityMatrix: " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) +
                                " matrix does not match factor dimensions");
  }
  if (!matrix_.is_hermitian(kTolerance)) throw std::invalid_argument("DensityMatrix: not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTolerance) {
    throw std::invalid_argument("DensityMatrix: trace " + format_double(tr.real()) + " is not 1");
  }
  const double lo = hermitian_spectrum(matrix_).min();
  if (lo < -kTolerance) {
    throw UnphysicalState("DensityMatrix: negative eigenvalue " + format_double(lo), lo);
  }
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.factor_dims();
  dims.insert(dims.end(), b.factor_dims().begin(), b.factor_dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.factor_dims(), keep);
  std::vector<std::size_t> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<std::size_t> dims;
  for (std::size_t k : keep_sorted) dims.push_back(rho.factor_dims()[k]);
  return DensityMatrix(std::move(reduced), std::move(dims));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t factor) {
  return partial_transpose(rho.matrix(), rho.factor_dims(), factor);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_bits(hermitian_spectrum(rho.matrix()).eigenvalues);
}

DensityMatrix pure_state(std::span<const Complex> psi) {
  const std::size_t n = psi.size();
  if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("pure_state: dimension must be a power of two");
  double norm2 = 0.0;
  for (const auto& v : psi) norm2 += std::norm(v);
  if (norm2 <= 0.0) throw std::invalid_argument("pure_state: zero vector");
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = psi[r] * std::conj(psi[c]) / norm2;
  std::vector<std::size_t> dims;
  for (std::size_t d = n; d > 1; d /= 2) dims.push_back(2);
  return DensityMatrix(std::move(m), std::move(dims));
}

std::array<double, 4> bell_basis_eigenvalues(const BellDiagonalParams& p) {
  return {(1.0 - p.c1 - p.c2 - p.c3) / 4.0, (1.0 - p.c1 + p.c2 + p.c3) / 4.0,
          (1.0 + p.c1 - p.c2 + p.c3) / 4.0, (1.0 + p.c1 + p.c2 - p.c3) / 4.0};
}

Spectrum bd_spectrum(const BellDiagonalParams& p) {
  const auto ev = bell_basis_eigenvalues(p);
  Spectrum s{{ev.begin(), ev.end()}};
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

bool is_physical_bd(const BellDiagonalParams& p) { return bd_spectrum(p).min() >= -kBellPhysicalTolerance; }

void require_physical_bd(const BellDiagonalParams& p) {
  const double lo = bd_spectrum(p).min();
  if (lo < -kBellPhysicalTolerance) {
    throw UnphysicalState("unphysical Bell-diagonal parameters (" + format_double(p.c1) + ", " +
                              format_double(p.c2) + ", " + format_double(p.c3) +
                              "): eigenvalue " + format_double(lo),
                          lo);
  }
}

bool is_separable_bd(const BellDiagonalParams& p) {
  require_physical_bd(p);
  return bd_spectrum(p).max() <= 0.5 + kBellPhysicalTolerance;
}

int bd_rank(const BellDiagonalParams& p) {
  const auto ev = bell_basis_eigenvalues(p);
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [](double v) { return v > 1e-12; }));
}

DensityMatrix bell_diagonal(const BellDiagonalParams& p) {
  require_physical_bd(p);
  ComplexMatrix m = ComplexMatrix::identity(4);
  const double c[3] = {p.c1, p.c2, p.c3};
  for (std::size_t k = 0; k < 3; ++k) m += Complex(c[k]) * kron(pauli::axis(k), pauli::axis(k));
  m *= 0.25;
  return DensityMatrix(std::move(m), {2, 2});
}

bool BlochDecomposition::is_bell_diagonal(double tol) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(a[i]) > tol || std::abs(b[i]) > tol) return false;
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && std::abs(T[i][j]) > tol) return false;
  }
  return true;
}

BlochDecomposition bloch_decompose(const DensityMatrix& rho) {
  if (rho.factor_dims() != std::vector<std::size_t>{2, 2}) {
    throw std::invalid_argument("bloch_decompose: expected a two-qubit state");
  }
  const auto expect = [&](const ComplexMatrix& op) { return (rho.matrix() * op).trace().real(); };
  BlochDecomposition d;
  for (std::size_t n = 0; n < 3; ++n) {
    d.a[n] = expect(kron(pauli::axis(n), pauli::I()));
    d.b[n] = expect(kron(pauli::I(), pauli::axis(n)));
    for (std::size_t m = 0; m < 3; ++m) d.T[n][m] = expect(kron(pauli::axis(n), pauli::axis(m)));
  }
  return d;
}

ComplexMatrix reconstruct(const BlochDecomposition& d) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m += kron(pauli::dot(d.a), pauli::I());
  m += kron(pauli::I(), pauli::dot(d.b));
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t k = 0; k < 3; ++k)
      if (d.T[n][k] != 0.0) m += Complex(d.T[n][k]) * kron(pauli::axis(n), pauli::axis(k));
  m *= 0.25;
  return m;
}

ComplexMatrix su2_from_rotation(const std::array<std::array<double, 3>, 3>& R) {
  Eigen::Matrix3d rot;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rot(i, j) = R[i][j];
  if (std::abs(rot.determinant() - 1.0) > 1e-9 || (rot * rot.transpose() - Eigen::Matrix3d::Identity()).norm() > 1e-9) {
    throw std::invalid_argument("su2_from_rotation: not a proper rotation");
  }
  const Eigen::AngleAxisd aa(rot);
  const double half = 0.5 * aa.angle();
  const std::array<double, 3> axis{aa.axis()(0), aa.axis()(1), aa.axis()(2)};
  ComplexMatrix u = Complex(std::cos(half)) * pauli::I();
  u -= Complex(0.0, std::sin(half)) * pauli::dot(axis);
  return u;
}

NormalForm normal_form(const DensityMatrix& rho) {
  BlochDecomposition d = bloch_decompose(rho);
  const bool already_diagonal = [&] {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j && std::abs(d.T[i][j]) > 1e-12) return false;
    return true;
  }();
  if (already_diagonal) {
    return {rho, d, pauli::I(), pauli::I()};
  }

  Eigen::Matrix3d T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) T(i, j) = d.T[i][j];
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d ra = svd.matrixU();
  Eigen::Matrix3d rb = svd.matrixV();
  // Keep both rotations special orthogonal; the signs go onto the diagonal.
  if (ra.determinant() < 0) ra.col(2) *= -1.0;
  if (rb.determinant() < 0) rb.col(2) *= -1.0;

  std::array<std::array<double, 3>, 3> oa{}, ob{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      oa[i][j] = ra(j, i);
      ob[i][j] = rb(j, i);
    }
  const ComplexMatrix ua = su2_from_rotation(oa);
  const ComplexMatrix ub = su2_from_rotation(ob);
  const ComplexMatrix u = kron(ua, ub);
  ComplexMatrix out = conjugate(u, rho.matrix());
  // Re-symmetrize rounding noise before validation.
  out = 0.5 * (out + out.adjoint());
  DensityMatrix state(std::move(out), {2, 2});
  BlochDecomposition nd = bloch_decompose(state);
  return {std::move(state), nd, ua, ub};
}

namespace bell {
namespace {
constexpr double kS = 0.70710678118654752440;
}
std::array<Complex, 4> phi_plus() { return {kS, 0.0, 0.0, kS}; }
std::array<Complex, 4> phi_minus() { return {kS, 0.0, 0.0, -kS}; }
std::array<Complex, 4> psi_plus() { return {0.0, kS, kS, 0.0}; }
std::array<Complex, 4> psi_minus() { return {0.0, kS, -kS, 0.0}; }
} // namespace bell

DensityMatrix psi_phi_mixture(double c3) {
  if (!(std::abs(c3) <= 1.0)) throw std::out_of_range("psi_phi_mixture: |c3| must be <= 1");
  const auto psi = bell::psi_plus();
  const auto phi = bell::phi_plus();
  ComplexMatrix m = Complex((1.0 + c3) / 2.0) * pure_state(psi).matrix();
  m += Complex((1.0 - c3) / 2.0) * pure_state(phi).matrix();
  return DensityMatrix(std::move(m), {2, 2});
}

BellDiagonalParams werner_params(double p) { return {-p, -p, -p}; }

DensityMatrix werner(double p) {
  if (!(p >= -1.0 / 3.0 - kBellPhysicalTolerance && p <= 1.0 + kBellPhysicalTolerance)) {
    throw std::out_of_range("werner: p must lie in [-1/3, 1]");
  }
  const auto singlet = bell::psi_minus();
  ComplexMatrix m = Complex(p) * pure_state(singlet).matrix();
  m += Complex((1.0 - p) / 4.0) * ComplexMatrix::identity(4);
  return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix classically_correlated() {
  const double diag[4] = {0.5, 0.0, 0.0, 0.5};
  return DensityMatrix(ComplexMatrix::diagonal(diag), {2, 2});
}

DensityMatrix read_state(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("state file: ") + e.what());
  }
  for (const char* key : {"dims", "matrix_re", "matrix_im"}) {
    if (!doc.contains(key) || !doc[key].is_array()) {
      throw std::invalid_argument(std::string("state file: missing array field '") + key + "'");
    }
  }
  std::vector<std::size_t> dims;
  std::vector<double> re, im;
  try {
    dims = doc["dims"].get<std::vector<std::size_t>>();
    re = doc["matrix_re"].get<std::vector<double>>();
    im = doc["matrix_im"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("state file: ") + e.what());
  }
  const std::size_t n = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (dims.empty() || re.size() != n * n || im.size() != n * n) {
    throw std::invalid_argument("state file: matrix_re/matrix_im must hold prod(dims)^2 entries");
  }
  std::vector<Complex> entries(n * n);
  for (std::size_t i = 0; i < n * n; ++i) entries[i] = {re[i], im[i]};
  return DensityMatrix(ComplexMatrix(n, n, std::move(entries)), std::move(dims));
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file " + path.string());
  return read_state(in);
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  nlohmann::json doc;
  doc["dims"] = rho.factor_dims();
  std::vector<double> re, im;
  for (const auto& v : rho.matrix().entries()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  doc["matrix_re"] = re;
  doc["matrix_im"] = im;
  out << doc.dump(2) << '\n';
}

} // namespace compcorr
