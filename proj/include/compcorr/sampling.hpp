#pragma once

// Seeded generators for property checks.

#include <cstdint>
#include <random>

#include "compcorr/states.hpp"

namespace compcorr::sampling {

using Rng = std::mt19937_64;

/// Uniform over the tetrahedron of physical Bell-diagonal parameters
/// (uniform Bell-basis weights on the probability simplex).
BellDiagonalParams random_bd(Rng& rng);

/// Uniform over the separable octahedron |c1| + |c2| + |c3| <= 1.
BellDiagonalParams random_separable_bd(Rng& rng);

/// Haar-random unitary of dimension n.
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

/// Full-rank random mixed state on `n_qubits` qubits (Ginibre ensemble).
DensityMatrix random_state(Rng& rng, std::size_t n_qubits);

} // namespace compcorr::sampling
