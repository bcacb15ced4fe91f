#include "compcorr/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace compcorr {

std::string cut_label(Cut cut, std::size_t num_factors) {
  if (cut.factor >= num_factors) {
    throw std::out_of_range("cut factor " + std::to_string(cut.factor) + " out of range for " +
                            std::to_string(num_factors) + " factors");
  }
  std::string label(1, static_cast<char>('A' + cut.factor));
  label += '|';
  for (std::size_t k = 0; k < num_factors; ++k)
    if (k != cut.factor) label += static_cast<char>('A' + k);
  return label;
}

PptVerdict ppt_verdict(const ComplexMatrix& m, std::span<const std::size_t> dims, Cut cut) {
  PptVerdict v;
  v.cut = cut_label(cut, dims.size());
  v.spectrum = hermitian_spectrum(partial_transpose(m, dims, cut.factor));
  v.min_eigenvalue = v.spectrum.min();
  v.is_ppt = v.min_eigenvalue >= -kPptTolerance;
  return v;
}

PptVerdict ppt_verdict(const DensityMatrix& rho, Cut cut) {
  return ppt_verdict(rho.matrix(), rho.factor_dims(), cut);
}

double negativity(const DensityMatrix& rho, Cut cut) {
  const PptVerdict v = ppt_verdict(rho, cut);
  double n = 0.0;
  for (double e : v.spectrum.eigenvalues)
    if (e < 0.0) n -= e;
  return n;
}

double rel_entropy_entanglement_bd(const BellDiagonalParams& p) {
  require_physical_bd(p);
  const double top = bd_spectrum(p).max();
  if (top <= 0.5) return 0.0;
  return 1.0 - binary_entropy(top);
}

bool necessary_condition_bd(const BellDiagonalParams& p) {
  return std::abs(p.c1) > 1e-12 && std::abs(p.c2) > 1e-12 && std::abs(p.c3) > 1e-12;
}

} // namespace compcorr
