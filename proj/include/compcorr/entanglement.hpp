#pragma once

#include <string>

#include "compcorr/states.hpp"

namespace compcorr {

inline constexpr double kPptTolerance = 1e-12;

/// One tensor factor against the rest, e.g. factor 0 of three qubits is A|BC.
struct Cut {
  std::size_t factor = 0;
};

/// "A|BC", "B|AC", "C|AB" style label for `cut` on `num_factors` factors.
std::string cut_label(Cut cut, std::size_t num_factors);

struct PptVerdict {
  double min_eigenvalue = 0.0;
  bool is_ppt = true;
  std::string cut;
  Spectrum spectrum;  // full partial-transpose spectrum
};

/// Throws std::out_of_range for a factor index past the last factor.
PptVerdict ppt_verdict(const DensityMatrix& rho, Cut cut);
PptVerdict ppt_verdict(const ComplexMatrix& m, std::span<const std::size_t> dims, Cut cut);

/// Sum of |negative eigenvalues| of the partial transpose across `cut`.
double negativity(const DensityMatrix& rho, Cut cut);

/// Closed form: 0 when the largest Bell weight is <= 1/2, else 1 - H2(max).
double rel_entropy_entanglement_bd(const BellDiagonalParams& p);

/// All |c_i| > 1e-12. Necessary, not sufficient, for negativity > 0.
bool necessary_condition_bd(const BellDiagonalParams& p);

} // namespace compcorr
