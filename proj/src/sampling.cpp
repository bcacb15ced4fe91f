#include "compcorr/sampling.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace compcorr::sampling {

BellDiagonalParams random_bd(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double cuts[3] = {u(rng), u(rng), u(rng)};
  std::sort(cuts, cuts + 3);
  // Bell weights in (Psi-, Phi-, Phi+, Psi+) order.
  const double w[4] = {cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]};
  return {-w[0] - w[1] + w[2] + w[3], -w[0] + w[1] - w[2] + w[3], -w[0] + w[1] + w[2] - w[3]};
}

BellDiagonalParams random_separable_bd(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const BellDiagonalParams p{u(rng), u(rng), u(rng)};
    if (std::abs(p.c1) + std::abs(p.c2) + std::abs(p.c3) <= 1.0) return p;
  }
}

namespace {

Eigen::MatrixXcd ginibre(Rng& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
  return m;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

} // namespace

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  const Eigen::MatrixXcd z = ginibre(rng, n);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return from_eigen(q);
}

DensityMatrix random_state(Rng& rng, std::size_t n_qubits) {
  const std::size_t n = std::size_t{1} << n_qubits;
  const Eigen::MatrixXcd g = ginibre(rng, n);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(from_eigen(rho), std::vector<std::size_t>(n_qubits, 2));
}

} // namespace compcorr::sampling
