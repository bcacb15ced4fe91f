#include "compcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace compcorr {

ProjectiveMeasurement::ProjectiveMeasurement(std::array<double, 3> bloch) : n_(bloch) {
  const double norm = std::sqrt(n_[0] * n_[0] + n_[1] * n_[1] + n_[2] * n_[2]);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("ProjectiveMeasurement: Bloch vector must have unit length");
  }
}

ProjectiveMeasurement ProjectiveMeasurement::axis(std::size_t k) {
  if (k > 2) throw std::out_of_range("ProjectiveMeasurement::axis: k must be 0, 1 or 2");
  std::array<double, 3> n{};
  n[k] = 1.0;
  return ProjectiveMeasurement(n);
}

ProjectiveMeasurement ProjectiveMeasurement::from_angles(double polar, double azimuthal) {
  return ProjectiveMeasurement({std::sin(polar) * std::cos(azimuthal), std::sin(polar) * std::sin(azimuthal),
                                std::cos(polar)});
}

ComplexMatrix ProjectiveMeasurement::projector(int outcome) const {
  if (outcome != 0 && outcome != 1) throw std::out_of_range("projector outcome must be 0 or 1");
  const double sign = outcome == 0 ? 1.0 : -1.0;
  ComplexMatrix p = pauli::I();
  p += Complex(sign) * pauli::dot(n_);
  p *= 0.5;
  return p;
}

JointDistribution JointDistribution::from_table(std::array<std::array<double, 2>, 2> table) {
  double total = 0.0;
  for (auto& row : table)
    for (double& v : row) {
      if (v < -1e-12) throw std::invalid_argument("JointDistribution: negative probability");
      if (v < 0.0) v = 0.0;
      total += v;
    }
  if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("JointDistribution: probabilities do not sum to 1");
  return JointDistribution{table};
}

namespace {

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.factor_dims() != std::vector<std::size_t>{2, 2}) {
    throw std::invalid_argument(std::string(what) + ": expected a two-qubit state");
  }
}

double plogp_nats(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

// Tr_B[(I (x) proj) rho] for a 4x4 rho.
ComplexMatrix conditional_alice_operator(const ComplexMatrix& rho, const ComplexMatrix& proj) {
  ComplexMatrix m(2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t ap = 0; ap < 2; ++ap) {
      Complex s = 0.0;
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t bp = 0; bp < 2; ++bp) s += proj(b, bp) * rho(a * 2 + bp, ap * 2 + b);
      m(a, ap) = s;
    }
  return 0.5 * (m + m.adjoint());
}

} // namespace

JointDistribution joint_distribution(const DensityMatrix& rho, const ProjectiveMeasurement& alice,
                                     const ProjectiveMeasurement& bob) {
  require_two_qubit(rho, "joint_distribution");
  std::array<std::array<double, 2>, 2> table{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      table[i][j] = (rho.matrix() * kron(alice.projector(i), bob.projector(j))).trace().real();
  return JointDistribution::from_table(table);
}

double outcome_mutual_information(const JointDistribution& d) {
  const auto& p = d.p;
  const double pa[2] = {p[0][0] + p[0][1], p[1][0] + p[1][1]};
  const double pb[2] = {p[0][0] + p[1][0], p[0][1] + p[1][1]};
  double nats = 0.0;
  for (int i = 0; i < 2; ++i) {
    nats -= plogp_nats(pa[i]) + plogp_nats(pb[i]);
    for (int j = 0; j < 2; ++j) nats += plogp_nats(p[i][j]);
  }
  return std::max(0.0, nats) / std::log(2.0);
}

ComplementaryCorrelations complementary_correlations(const DensityMatrix& rho) {
  double v[3];
  for (std::size_t k = 0; k < 3; ++k) {
    const auto m = ProjectiveMeasurement::axis(k);
    v[k] = outcome_mutual_information(joint_distribution(rho, m, m));
  }
  return {v[0], v[1], v[2]};
}

double holevo_quantity(const DensityMatrix& rho, const ProjectiveMeasurement& bob) {
  require_two_qubit(rho, "holevo_quantity");
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix rho_a = conditional_alice_operator(m, pauli::I());
  double chi = entropy_bits(hermitian_spectrum(rho_a).eigenvalues);
  for (int outcome = 0; outcome < 2; ++outcome) {
    ComplexMatrix branch = conditional_alice_operator(m, bob.projector(outcome));
    const double p = branch.trace().real();
    if (p < 1e-14) continue;
    branch *= 1.0 / p;
    chi -= p * entropy_bits(hermitian_spectrum(branch).eigenvalues);
  }
  return std::max(0.0, chi);
}

double correlation_bits(double c) {
  const double a = std::clamp(std::abs(c), 0.0, 1.0);
  // x log2 x with 0 log 0 = 0
  const auto xlog2x = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
  return 0.5 * (xlog2x(1.0 + a) + xlog2x(1.0 - a));
}

double classical_correlation(const BellDiagonalParams& p) {
  require_physical_bd(p);
  return correlation_bits(std::max({std::abs(p.c1), std::abs(p.c2), std::abs(p.c3)}));
}

double q1(const BellDiagonalParams& p) {
  require_physical_bd(p);
  return correlation_bits(p.c3);
}

double total_mutual_information(const DensityMatrix& rho) {
  require_two_qubit(rho, "total_mutual_information");
  const std::size_t keep_a[] = {0};
  const std::size_t keep_b[] = {1};
  const double value = von_neumann_entropy(partial_trace(rho, keep_a)) +
                       von_neumann_entropy(partial_trace(rho, keep_b)) - von_neumann_entropy(rho);
  return std::max(0.0, value);
}

double total_mutual_information_bd(const BellDiagonalParams& p) {
  require_physical_bd(p);
  auto ev = bell_basis_eigenvalues(p);
  for (double& v : ev) v = std::max(0.0, v);
  return 2.0 - entropy_bits(ev);
}

double discord_bd(const BellDiagonalParams& p) {
  return std::max(0.0, total_mutual_information_bd(p) - classical_correlation(p));
}

} // namespace compcorr
