#include <doctest.h>

#include <cmath>
#include <numbers>

#include "compcorr/oracle.hpp"
#include "compcorr/sampling.hpp"

using namespace compcorr;

namespace {

// Basis {R|0>, R|1>} for the real rotation R = [[cos a, -sin a], [sin a, cos a]].
oracle::QubitBasis rotated_z_basis(double a) {
  return {{{std::cos(a), std::sin(a)}, {-std::sin(a), std::cos(a)}}};
}

double angle_to_axis(const std::array<double, 3>& n, std::size_t axis) {
  return std::acos(std::min(1.0, std::abs(n[axis])));
}

} // namespace

TEST_CASE("Holevo maximum matches the closed form and sits on the dominant axis") {
  sampling::Rng rng(301);
  for (int k = 0; k < 20; ++k) {
    const auto p = sampling::random_bd(rng);
    const auto opt = oracle::maximize_holevo(bell_diagonal(p));
    CHECK(std::abs(opt.value - classical_correlation(p)) < 1e-4);
    const auto c = p.as_array();
    std::size_t top = 0;
    for (std::size_t a = 1; a < 3; ++a)
      if (std::abs(c[a]) > std::abs(c[top])) top = a;
    double second = 0.0;
    for (std::size_t a = 0; a < 3; ++a)
      if (a != top) second = std::max(second, std::abs(c[a]));
    if (std::abs(c[top]) - second > 1e-2) CHECK(angle_to_axis(opt.argmax_bloch, top) < 5.0 * std::numbers::pi / 180.0);
    CHECK(opt.refined);
    CHECK(opt.polar_points == 90);
    CHECK(opt.azimuthal_points == 180);
  }
}

TEST_CASE("parallel Holevo search equals the serial reference bit for bit") {
  sampling::Rng rng(303);
  const oracle::HolevoGrid grid{40, 60, 3};
  for (int k = 0; k < 5; ++k) {
    const auto rho = sampling::random_state(rng, 2);
    const auto a = oracle::maximize_holevo(rho, grid);
    const auto b = oracle::maximize_holevo_reference(rho, grid);
    CHECK(a.value == b.value);
    CHECK(a.polar == b.polar);
    CHECK(a.azimuthal == b.azimuthal);
  }
}

TEST_CASE("Holevo grid search is monotone on nested grids") {
  sampling::Rng rng(307);
  for (int k = 0; k < 10; ++k) {
    const auto rho = sampling::random_state(rng, 2);
    const double coarse = oracle::maximize_holevo(rho, {9, 8, 0}).value;
    const double mid = oracle::maximize_holevo(rho, {17, 16, 0}).value;
    const double fine = oracle::maximize_holevo(rho, {33, 32, 0}).value;
    CHECK(mid >= coarse - 1e-14);
    CHECK(fine >= mid - 1e-14);
    CHECK(oracle::maximize_holevo(rho, {33, 32, 5}).value >= fine);
  }
}

TEST_CASE("Holevo grid validation") {
  const auto rho = bell_diagonal({0.1, 0.2, 0.3});
  CHECK_THROWS_AS(oracle::maximize_holevo(rho, {4, 90, 0}), std::invalid_argument);
  CHECK_THROWS_AS(oracle::maximize_holevo(rho, {90, 90, -1}), std::invalid_argument);
}

TEST_CASE("exact ties resolve to the first grid point") {
  // Maximally mixed: every direction gives zero; the first point is the north pole.
  const auto opt = oracle::maximize_holevo(bell_diagonal({0, 0, 0}), {12, 12, 0});
  CHECK(opt.value == 0.0);
  CHECK(opt.polar == 0.0);
  CHECK(opt.azimuthal == 0.0);
}

TEST_CASE("numeric discord matches the closed form") {
  for (const BellDiagonalParams p : {BellDiagonalParams{0.5, 0.25, 0.25}, BellDiagonalParams{0.5, 0.0, 0.25},
                                     BellDiagonalParams{-0.2, 0.6, 0.1}})
    CHECK(std::abs(oracle::discord_numeric(bell_diagonal(p)) - discord_bd(p)) < 1e-4);
}

TEST_CASE("mutually unbiased bases") {
  using oracle::mub_check;
  using oracle::pauli_eigenbasis;
  CHECK(mub_check({pauli_eigenbasis(0), pauli_eigenbasis(1), pauli_eigenbasis(2)}));
  CHECK_FALSE(mub_check({pauli_eigenbasis(2), pauli_eigenbasis(2)}));
  CHECK(mub_check({pauli_eigenbasis(2)}));

  // 45 degrees in Hilbert space takes |0> to |+>: unbiased with z.
  CHECK(mub_check({pauli_eigenbasis(2), rotated_z_basis(std::numbers::pi / 4)}));
  // 45 degrees on the Bloch sphere is 22.5 degrees in Hilbert space: biased.
  CHECK_FALSE(mub_check({pauli_eigenbasis(2), rotated_z_basis(std::numbers::pi / 8)}));

  oracle::QubitBasis bad{{{1.0, 0.0}, {1.0, 0.0}}};
  CHECK_THROWS_AS(mub_check({bad}), std::invalid_argument);
  CHECK_THROWS_AS(pauli_eigenbasis(3), std::out_of_range);
}

TEST_CASE("spectrum crosscheck") {
  sampling::Rng rng(311);
  for (int k = 0; k < 200; ++k) CHECK(oracle::spectrum_crosscheck(sampling::random_bd(rng)) < 1e-10);
}
