#pragma once

// Brute-force verifiers, kept independent of the closed forms they check.

#include <array>
#include <vector>

#include "compcorr/correlations.hpp"

namespace compcorr::oracle {

struct HolevoGrid {
  std::size_t polar = 90;       // points on [0, pi], poles included
  std::size_t azimuthal = 180;  // points on [0, 2 pi)
  int refine_rounds = 5;        // 0 disables refinement
};

struct OptimizationResult {
  double value = 0.0;
  std::array<double, 3> argmax_bloch{};
  double polar = 0.0;
  double azimuthal = 0.0;
  std::size_t polar_points = 0;
  std::size_t azimuthal_points = 0;
  bool refined = false;
};

/// Grid search of the Holevo quantity over Bob's measurement direction,
/// then `refine_rounds` rounds of halved-step local search around the best
/// grid point. The grid is evaluated with OpenMP; ties go to the smallest
/// (polar, azimuthal) index pair so the result is thread-count independent.
OptimizationResult maximize_holevo(const DensityMatrix& rho, const HolevoGrid& grid = {});

/// Single-threaded reference for maximize_holevo; results are identical.
OptimizationResult maximize_holevo_reference(const DensityMatrix& rho, const HolevoGrid& grid = {});

/// total_mutual_information(rho) - maximize_holevo(rho).value
double discord_numeric(const DensityMatrix& rho, const HolevoGrid& grid = {});

/// Orthonormal qubit basis as two column vectors.
using QubitBasis = std::array<std::array<Complex, 2>, 2>;

/// Eigenbasis of the Pauli operator along axis 0, 1 or 2 (+1 eigenvector first).
QubitBasis pauli_eigenbasis(std::size_t axis);

/// True iff every cross-basis squared overlap |<a_i|b_j>|^2 equals 1/2
/// within 1e-12. Throws std::invalid_argument for a non-orthonormal basis.
bool mub_check(const std::vector<QubitBasis>& bases);

/// Largest |closed-form - numeric| Bell-diagonal eigenvalue, both sorted.
double spectrum_crosscheck(const BellDiagonalParams& p);

} // namespace compcorr::oracle
