#include "compcorr/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace compcorr {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols, std::vector<Complex>(entries)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.data_[i * values.size() + i] = values[i];
  return m;
}

Complex& ComplexMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("ComplexMatrix index (" + std::to_string(r) + ", " +
                            std::to_string(c) + ") outside " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
  return data_[r * cols_ + c];
}

const Complex& ComplexMatrix::at(std::size_t r, std::size_t c) const {
  return const_cast<ComplexMatrix*>(this)->at(r, c);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = std::conj(data_[r * cols_ + c]);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = data_[r * cols_ + c];
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += data_[i * cols_ + i];
  return t;
}

static void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs(data_[r * cols_ + c] - std::conj(data_[c * cols_ + r])) > tol) return false;
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimensions " + std::to_string(a.cols()) +
                                " and " + std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  const auto ae = a.entries();
  const auto be = b.entries();
  auto oe = out.entries();
  const std::size_t n = a.cols(), m = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = ae[i * n + k];
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < m; ++j) oe[i * m + j] += aik * be[k * m + j];
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const std::size_t oc = out.cols();
  auto oe = out.entries();
  const auto ae = a.entries();
  const auto be = b.entries();
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = ae[ar * a.cols() + ac];
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          oe[(ar * b.rows() + br) * oc + ac * b.cols() + bc] = s * be[br * b.cols() + bc];
    }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) { return u * m * u.adjoint(); }

namespace pauli {
const ComplexMatrix& I() {
  static const ComplexMatrix m(2, 2, {1.0, 0.0, 0.0, 1.0});
  return m;
}
const ComplexMatrix& X() {
  static const ComplexMatrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
  return m;
}
const ComplexMatrix& Y() {
  static const ComplexMatrix m(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
  return m;
}
const ComplexMatrix& Z() {
  static const ComplexMatrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
  return m;
}
const ComplexMatrix& axis(std::size_t k) {
  switch (k) {
  case 0: return X();
  case 1: return Y();
  case 2: return Z();
  default: throw std::out_of_range("Pauli axis must be 0, 1 or 2");
  }
}
ComplexMatrix dot(std::span<const double, 3> n) {
  return ComplexMatrix(2, 2, {n[2], Complex(n[0], -n[1]), Complex(n[0], n[1]), -n[2]});
}
} // namespace pauli

double Spectrum::sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }

double max_deviation(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) throw std::invalid_argument("spectra of different sizes");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
  return worst;
}

Spectrum hermitian_spectrum(const ComplexMatrix& m) {
  if (!m.is_hermitian(1e-10)) throw std::invalid_argument("hermitian_spectrum: input is not Hermitian");
  const std::size_t n = m.rows();
  Spectrum out;
  if (n == 0) return out;
  if (n == 1) {
    out.eigenvalues = {m(0, 0).real()};
    return out;
  }
  if (n == 2) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    out.eigenvalues = {mid - rad, mid + rad};
    return out;
  }
  Eigen::MatrixXcd em(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) em(r, c) = m(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_spectrum: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void require_square_with_dims(const ComplexMatrix& m, std::span<const std::size_t> dims, const char* what) {
  if (dims.empty()) throw std::invalid_argument(std::string(what) + ": empty factor list");
  if (!m.square() || m.rows() != product(dims)) {
    throw std::invalid_argument(std::string(what) + ": matrix of size " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " does not match its factor dimensions");
  }
}

// Mixed-radix digits of a flat index, most significant factor first.
void unflatten(std::size_t index, std::span<const std::size_t> dims, std::span<std::size_t> digits) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

std::size_t flatten(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

} // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_square_with_dims(m, dims, "partial_trace");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw std::out_of_range("partial_trace: subsystem index " + std::to_string(k) + " out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: subsystem " + std::to_string(k) + " listed twice");
    kept[k] = true;
  }
  std::vector<std::size_t> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<std::size_t> kept_dims;
  for (std::size_t k : keep_sorted) kept_dims.push_back(dims[k]);
  const std::size_t out_dim = product(kept_dims);

  ComplexMatrix out(out_dim, out_dim);
  const std::size_t n = m.rows();
  std::vector<std::size_t> rd(dims.size()), cd(dims.size()), ro(kept_dims.size()), co(kept_dims.size());
  for (std::size_t r = 0; r < n; ++r) {
    unflatten(r, dims, rd);
    for (std::size_t c = 0; c < n; ++c) {
      unflatten(c, dims, cd);
      bool diagonal_in_traced = true;
      for (std::size_t k = 0; k < dims.size() && diagonal_in_traced; ++k)
        if (!kept[k] && rd[k] != cd[k]) diagonal_in_traced = false;
      if (!diagonal_in_traced) continue;
      for (std::size_t j = 0; j < keep_sorted.size(); ++j) {
        ro[j] = rd[keep_sorted[j]];
        co[j] = cd[keep_sorted[j]];
      }
      out(flatten(ro, kept_dims), flatten(co, kept_dims)) += m(r, c);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims, std::size_t factor) {
  require_square_with_dims(m, dims, "partial_transpose");
  if (factor >= dims.size()) {
    throw std::out_of_range("partial_transpose: factor " + std::to_string(factor) + " out of range");
  }
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  std::vector<std::size_t> rd(dims.size()), cd(dims.size());
  for (std::size_t r = 0; r < n; ++r) {
    unflatten(r, dims, rd);
    for (std::size_t c = 0; c < n; ++c) {
      unflatten(c, dims, cd);
      std::swap(rd[factor], cd[factor]);
      out(flatten(rd, dims), flatten(cd, dims)) = m(r, c);
      std::swap(rd[factor], cd[factor]);
    }
  }
  return out;
}

double entropy_bits(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p < -1e-10) throw std::domain_error("entropy: negative eigenvalue " + std::to_string(p));
    if (p <= 0.0) continue;
    h -= p * std::log(p);
  }
  return h / std::log(2.0);
}

double binary_entropy(double p) {
  const double q[2] = {p, 1.0 - p};
  return entropy_bits(q);
}

} // namespace compcorr
