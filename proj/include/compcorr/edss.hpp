#pragma once

// Entanglement distribution with a separable carrier: Alice applies CNOT
// (control A, target C) to rho_AB (x) rho_C, sends C to Bob, and Bob applies
// CNOT (control B, target C). Qubit order is A, B, C.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "compcorr/entanglement.hpp"
#include "compcorr/report.hpp"

namespace compcorr::edss {

/// Carrier qubit with Bloch vector radius * (sin t cos f, sin t sin f, cos t).
/// radius 1 is a pure state; smaller radii are mixed.
struct Ancilla {
  double polar = 0.0;
  double azimuthal = 0.0;
  double radius = 1.0;

  std::array<double, 3> bloch() const;
  ComplexMatrix matrix() const;
  DensityMatrix state() const;
};

/// Lattice of carriers: polar points on [0, pi] (poles included), azimuthal
/// points on [0, 2 pi), one shell per radius. The best valid carrier is then
/// polished by `refine_rounds` rounds of halved-step local search.
struct AncillaGrid {
  std::size_t polar = 24;
  std::size_t azimuthal = 48;
  std::vector<double> radii = {1.0, 0.875, 0.75, 0.625, 0.5, 0.375, 0.25, 0.125};
  int refine_rounds = 5;

  std::size_t size() const noexcept { return polar * azimuthal * radii.size(); }
};

using AncillaSpec = std::variant<Ancilla, AncillaGrid>;

/// Permutation unitary of CNOT on `n_qubits` qubits (big-endian ordering).
ComplexMatrix cnot(std::size_t n_qubits, std::size_t control, std::size_t target);

inline constexpr std::size_t kStageCount = 3;

struct ProtocolTrace {
  DensityMatrix initial_state;
  DensityMatrix after_alice;
  DensityMatrix after_bob;
  /// stage_verdicts[stage][factor]; stages are initial, after_alice,
  /// after_bob and factors 0, 1, 2 are the cuts A|BC, B|AC, C|AB.
  std::array<std::array<PptVerdict, 3>, kStageCount> stage_verdicts;
  double final_ab_negativity = 0.0;  // Tr_C(after_bob), cut A
  /// A|BC partial transpose of after_alice has an eigenvalue < -1e-12.
  bool success = false;
  /// C|AB of after_alice is PPT, i.e. the carrier can be sent.
  bool send_step_ppt = true;

  /// Success with a PPT carrier; success alone with an NPT carrier is
  /// protocol-invalid.
  bool distributed() const noexcept { return success && send_step_ppt; }
};

ProtocolTrace run_protocol(const DensityMatrix& rho_ab, const DensityMatrix& rho_c);
ProtocolTrace run_protocol(const DensityMatrix& rho_ab, const Ancilla& ancilla);

/// A|BC and C|AB minimum partial-transpose eigenvalues after Alice's CNOT.
struct SendStepEigenvalues {
  double a_cut = 0.0;
  double c_cut = 0.0;
};

/// Fast path used by the searches: builds CNOT_AC (rho_AB (x) rho_C) CNOT_AC
/// by index permutation instead of matrix products.
SendStepEigenvalues send_step_eigenvalues(const ComplexMatrix& rho_ab, const ComplexMatrix& rho_c);

enum class Usefulness {
  useful,      // some carrier gives A|BC NPT with C|AB PPT
  not_useful,  // no carrier gives A|BC NPT at all
  invalid,     // A|BC NPT only with an NPT carrier cut
};

std::string to_string(Usefulness u);

struct EdssResult {
  Usefulness status = Usefulness::not_useful;
  bool useful() const noexcept { return status == Usefulness::useful; }
  /// Carrier with the most negative A|BC eigenvalue among those keeping C|AB
  /// PPT; it is the witness when useful().
  std::optional<Ancilla> best;
  double min_pt_eigenvalue = 0.0;  // A|BC at `best`
  double send_step_min_eigenvalue = 0.0;  // C|AB at `best`
  std::size_t evaluated = 0;
};

/// Requires a physical, separable Bell-diagonal state (throws
/// std::invalid_argument otherwise). Grid carriers are evaluated with OpenMP.
EdssResult edss_useful(const BellDiagonalParams& p, const AncillaSpec& spec);
/// Single-threaded reference for edss_useful; results are identical.
EdssResult edss_useful_reference(const BellDiagonalParams& p, const AncillaSpec& spec);

struct SweepConfig {
  std::size_t resolution = 9;  // grid points per axis on [-1, 1]
  AncillaGrid ancilla;
};

struct SweepRow {
  std::array<std::size_t, 3> index{};  // lexicographic grid index
  BellDiagonalParams params;
  CorrelationReport report;
  int bd_rank = 0;
  EdssResult edss;
};

/// One row per physical separable grid point, in lexicographic index order.
/// Rows are evaluated concurrently; order and values do not depend on it.
std::vector<SweepRow> sweep(const SweepConfig& cfg);
/// Single-threaded reference for sweep.
std::vector<SweepRow> sweep_reference(const SweepConfig& cfg);

/// Header plus one line per row, LF endings, 12 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t useful = 0;
  std::size_t not_useful = 0;
  std::size_t invalid = 0;
};

SweepSummary summarize(const std::vector<SweepRow>& rows);

} // namespace compcorr::edss
