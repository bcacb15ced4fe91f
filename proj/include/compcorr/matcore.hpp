#pragma once

// Small dense complex linear algebra for one- to three-qubit operators.
// Qubit ordering is big-endian: factor 0 is the leftmost tensor slot.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace compcorr {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  // Both accessors are bounds-checked and throw std::out_of_range.
  Complex& at(std::size_t r, std::size_t c);
  const Complex& at(std::size_t r, std::size_t c) const;
  Complex& operator()(std::size_t r, std::size_t c) { return at(r, c); }
  const Complex& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  // Max entrywise modulus of (this - other); dimensions must agree.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_hermitian(double tol) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

/// Kronecker product; result dimensions are the products of the inputs'.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// U m U^dagger.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m);

namespace pauli {
const ComplexMatrix& I();
const ComplexMatrix& X();
const ComplexMatrix& Y();
const ComplexMatrix& Z();
/// sigma_1, sigma_2, sigma_3 for axis 0, 1, 2.
const ComplexMatrix& axis(std::size_t k);
/// n . sigma for a real 3-vector n.
ComplexMatrix dot(std::span<const double, 3> n);
} // namespace pauli

/// Real eigenvalues of a Hermitian matrix, ascending.
struct Spectrum {
  std::vector<double> eigenvalues;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  double sum() const;
  std::size_t size() const noexcept { return eigenvalues.size(); }
};

/// Largest |a_i - b_i| between two spectra of equal size (both ascending).
double max_deviation(const Spectrum& a, const Spectrum& b);

/// Throws std::invalid_argument if m is not Hermitian within 1e-10.
Spectrum hermitian_spectrum(const ComplexMatrix& m);

/// Partial trace over every factor not listed in `keep`. `dims` gives the
/// tensor-factor dimensions of m; kept factors stay in their original order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Transpose on the single tensor factor `factor`.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t factor);

/// -sum p log2 p over a probability-like list; entries in [-1e-10, 0) are
/// clamped to zero, anything more negative throws std::domain_error.
double entropy_bits(std::span<const double> probabilities);

/// Binary entropy H2(p) in bits.
double binary_entropy(double p);

} // namespace compcorr
