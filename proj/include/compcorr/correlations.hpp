#pragma once

#include <array>

#include "compcorr/states.hpp"

namespace compcorr {

/// Qubit projective measurement {(I + n.sigma)/2, (I - n.sigma)/2}.
/// Outcome 0 is the +1 eigenvalue of n.sigma.
class ProjectiveMeasurement {
public:
  /// Throws std::invalid_argument unless | |n| - 1 | <= 1e-12.
  explicit ProjectiveMeasurement(std::array<double, 3> bloch);

  /// Pauli eigenbasis along axis 0 (x), 1 (y) or 2 (z).
  static ProjectiveMeasurement axis(std::size_t k);
  /// n = (sin t cos f, sin t sin f, cos t).
  static ProjectiveMeasurement from_angles(double polar, double azimuthal);

  const std::array<double, 3>& bloch() const noexcept { return n_; }
  ComplexMatrix projector(int outcome) const;

private:
  std::array<double, 3> n_;
};

/// p[i][j] = probability of Alice outcome i and Bob outcome j.
struct JointDistribution {
  std::array<std::array<double, 2>, 2> p{};

  /// Clamps entries in [-1e-12, 0) to zero; throws std::invalid_argument on
  /// more negative entries or a total off 1 by more than 1e-10.
  static JointDistribution from_table(std::array<std::array<double, 2>, 2> table);
};

JointDistribution joint_distribution(const DensityMatrix& rho, const ProjectiveMeasurement& alice,
                                     const ProjectiveMeasurement& bob);

/// Shannon mutual information H(A) + H(B) - H(A, B), in bits.
double outcome_mutual_information(const JointDistribution& d);

struct ComplementaryCorrelations {
  double i_x = 0.0;
  double i_y = 0.0;
  double i_z = 0.0;

  double operator[](std::size_t k) const { return k == 0 ? i_x : (k == 1 ? i_y : i_z); }
};

/// Same-axis Pauli outcome mutual informations for x, y and z.
ComplementaryCorrelations complementary_correlations(const DensityMatrix& rho);

/// Holevo quantity of the ensemble Bob's measurement induces on Alice.
/// Outcomes with probability below 1e-14 are skipped.
double holevo_quantity(const DensityMatrix& rho, const ProjectiveMeasurement& bob);

/// (1+c)/2 log2(1+c) + (1-c)/2 log2(1-c) = 1 - H2((1+c)/2).
double correlation_bits(double c);

/// Closed-form classical correlation, attained at the axis of max |c_i|.
double classical_correlation(const BellDiagonalParams& p);
/// z-axis complementary correlation in closed form.
double q1(const BellDiagonalParams& p);
/// S(rho_A) + S(rho_B) - S(rho).
double total_mutual_information(const DensityMatrix& rho);
/// 2 - S(rho) for a Bell-diagonal state, from the closed-form spectrum.
double total_mutual_information_bd(const BellDiagonalParams& p);
/// total_mutual_information_bd - classical_correlation.
double discord_bd(const BellDiagonalParams& p);

} // namespace compcorr
