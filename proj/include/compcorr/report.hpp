#pragma once

#include <string>

#include "compcorr/correlations.hpp"
#include "compcorr/entanglement.hpp"

namespace compcorr {

/// Every scalar measure for one two-qubit state. Entropic values in bits.
struct CorrelationReport {
  double i_x = 0.0;
  double i_y = 0.0;
  double i_z = 0.0;
  double classical_c = 0.0;
  double discord = 0.0;
  double q1 = 0.0;
  double mutual_info = 0.0;
  double negativity = 0.0;
  double e_r = 0.0;  // NaN when the state is not locally Bell-diagonal
  bool all_complementary_nonzero = false;
  bool bell_diagonal = false;
};

/// Closed forms throughout; complementary correlations measured on the
/// constructed state.
CorrelationReport analyze_bd(const BellDiagonalParams& p);

/// Closed forms when rho is locally unitarily Bell-diagonal; otherwise the
/// classical correlation comes from a grid maximization of the Holevo
/// quantity and e_r is NaN.
CorrelationReport analyze_state(const DensityMatrix& rho);

/// Flat JSON object with one key per report field.
std::string report_to_json(const CorrelationReport& r);
/// Two-line CSV: header of field names, then the values.
std::string report_to_csv(const CorrelationReport& r);

} // namespace compcorr
