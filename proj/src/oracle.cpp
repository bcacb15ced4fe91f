#include "compcorr/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace compcorr::oracle {

namespace {

void require_grid(const HolevoGrid& grid) {
  if (grid.polar < 8 || grid.azimuthal < 8) {
    throw std::invalid_argument("maximize_holevo: need at least 8 points per angle");
  }
  if (grid.refine_rounds < 0) throw std::invalid_argument("maximize_holevo: negative refine_rounds");
}

double polar_at(const HolevoGrid& g, std::size_t i) {
  return std::numbers::pi * static_cast<double>(i) / static_cast<double>(g.polar - 1);
}

double azimuthal_at(const HolevoGrid& g, std::size_t j) {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(g.azimuthal);
}

double evaluate(const DensityMatrix& rho, double polar, double azimuthal) {
  return holevo_quantity(rho, ProjectiveMeasurement::from_angles(polar, azimuthal));
}

OptimizationResult refine(const DensityMatrix& rho, const HolevoGrid& grid, double value, double polar,
                          double azimuthal) {
  double step_p = std::numbers::pi / static_cast<double>(grid.polar - 1);
  double step_a = 2.0 * std::numbers::pi / static_cast<double>(grid.azimuthal);
  for (int round = 0; round < grid.refine_rounds; ++round) {
    step_p *= 0.5;
    step_a *= 0.5;
    const double cp = polar, ca = azimuthal;
    for (int dp = -1; dp <= 1; ++dp)
      for (int da = -1; da <= 1; ++da) {
        if (dp == 0 && da == 0) continue;
        const double p = cp + dp * step_p;
        const double a = ca + da * step_a;
        const double v = evaluate(rho, p, a);
        if (v > value) {
          value = v;
          polar = p;
          azimuthal = a;
        }
      }
  }
  OptimizationResult r;
  r.value = value;
  r.polar = polar;
  r.azimuthal = azimuthal;
  r.argmax_bloch = ProjectiveMeasurement::from_angles(polar, azimuthal).bloch();
  r.polar_points = grid.polar;
  r.azimuthal_points = grid.azimuthal;
  r.refined = grid.refine_rounds > 0;
  return r;
}

} // namespace

OptimizationResult maximize_holevo(const DensityMatrix& rho, const HolevoGrid& grid) {
  require_grid(grid);
  const std::size_t np = grid.polar, na = grid.azimuthal;
  std::vector<double> values(np * na);
  const auto total = static_cast<std::ptrdiff_t>(np * na);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    values[idx] = evaluate(rho, polar_at(grid, idx / na), azimuthal_at(grid, idx % na));
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] > values[best]) best = k;
  return refine(rho, grid, values[best], polar_at(grid, best / na), azimuthal_at(grid, best % na));
}

OptimizationResult maximize_holevo_reference(const DensityMatrix& rho, const HolevoGrid& grid) {
  require_grid(grid);
  double best_value = -1.0, best_p = 0.0, best_a = 0.0;
  for (std::size_t i = 0; i < grid.polar; ++i)
    for (std::size_t j = 0; j < grid.azimuthal; ++j) {
      const double p = polar_at(grid, i), a = azimuthal_at(grid, j);
      const double v = evaluate(rho, p, a);
      if (v > best_value) {
        best_value = v;
        best_p = p;
        best_a = a;
      }
    }
  return refine(rho, grid, best_value, best_p, best_a);
}

double discord_numeric(const DensityMatrix& rho, const HolevoGrid& grid) {
  return total_mutual_information(rho) - maximize_holevo(rho, grid).value;
}

QubitBasis pauli_eigenbasis(std::size_t axis) {
  const double s = std::numbers::sqrt2 / 2.0;
  switch (axis) {
  case 0: return {{{s, s}, {s, -s}}};
  case 1: return {{{s, Complex(0, s)}, {s, Complex(0, -s)}}};
  case 2: return {{{1.0, 0.0}, {0.0, 1.0}}};
  default: throw std::out_of_range("pauli_eigenbasis: axis must be 0, 1 or 2");
  }
}

namespace {

Complex inner(const std::array<Complex, 2>& a, const std::array<Complex, 2>& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

} // namespace

bool mub_check(const std::vector<QubitBasis>& bases) {
  constexpr double tol = 1e-12;
  for (const auto& basis : bases)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const Complex g = inner(basis[i], basis[j]);
        if (std::abs(g - (i == j ? 1.0 : 0.0)) > tol) {
          throw std::invalid_argument("mub_check: basis is not orthonormal");
        }
      }
  for (std::size_t x = 0; x < bases.size(); ++x)
    for (std::size_t y = x + 1; y < bases.size(); ++y)
      for (const auto& a : bases[x])
        for (const auto& b : bases[y])
          if (std::abs(std::norm(inner(a, b)) - 0.5) > tol) return false;
  return true;
}

double spectrum_crosscheck(const BellDiagonalParams& p) {
  return max_deviation(bd_spectrum(p), hermitian_spectrum(bell_diagonal(p).matrix()));
}

} // namespace compcorr::oracle
