#include "compcorr/edss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "compcorr/format.hpp"

namespace compcorr::edss {

std::array<double, 3> Ancilla::bloch() const {
  return {radius * std::sin(polar) * std::cos(azimuthal), radius * std::sin(polar) * std::sin(azimuthal),
          radius * std::cos(polar)};
}

ComplexMatrix Ancilla::matrix() const {
  if (!(radius >= 0.0 && radius <= 1.0)) throw std::invalid_argument("Ancilla: radius must lie in [0, 1]");
  ComplexMatrix m = pauli::I();
  m += pauli::dot(bloch());
  m *= 0.5;
  return m;
}

DensityMatrix Ancilla::state() const { return DensityMatrix(matrix(), {2}); }

ComplexMatrix cnot(std::size_t n_qubits, std::size_t control, std::size_t target) {
  if (control == target) throw std::invalid_argument("cnot: control and target coincide");
  if (control >= n_qubits || target >= n_qubits) throw std::out_of_range("cnot: qubit index out of range");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t cbit = std::size_t{1} << (n_qubits - 1 - control);
  const std::size_t tbit = std::size_t{1} << (n_qubits - 1 - target);
  ComplexMatrix u(dim, dim);
  for (std::size_t in = 0; in < dim; ++in) {
    const std::size_t out = (in & cbit) ? (in ^ tbit) : in;
    u(out, in) = 1.0;
  }
  return u;
}

namespace {

constexpr std::size_t kThreeQubits[] = {2, 2, 2};

DensityMatrix valid_state(ComplexMatrix m) {
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), {2, 2, 2});
}

std::array<PptVerdict, 3> verdicts_for(const DensityMatrix& rho) {
  return {ppt_verdict(rho, Cut{0}), ppt_verdict(rho, Cut{1}), ppt_verdict(rho, Cut{2})};
}

} // namespace

ProtocolTrace run_protocol(const DensityMatrix& rho_ab, const DensityMatrix& rho_c) {
  if (rho_ab.factor_dims() != std::vector<std::size_t>{2, 2}) {
    throw std::invalid_argument("run_protocol: rho_AB must be a two-qubit state");
  }
  if (rho_c.factor_dims() != std::vector<std::size_t>{2}) {
    throw std::invalid_argument("run_protocol: the carrier must be a single qubit");
  }
  DensityMatrix initial = kron(rho_ab, rho_c);
  DensityMatrix after_alice = valid_state(conjugate(cnot(3, 0, 2), initial.matrix()));
  DensityMatrix after_bob = valid_state(conjugate(cnot(3, 1, 2), after_alice.matrix()));

  const std::size_t keep_ab[] = {0, 1};
  const double final_neg = negativity(partial_trace(after_bob, keep_ab), Cut{0});

  std::array<std::array<PptVerdict, 3>, kStageCount> verdicts{verdicts_for(initial), verdicts_for(after_alice),
                                                               verdicts_for(after_bob)};
  const bool success = verdicts[1][0].min_eigenvalue < -kPptTolerance;
  const bool send_ppt = verdicts[1][2].is_ppt;
  return ProtocolTrace{std::move(initial), std::move(after_alice), std::move(after_bob), std::move(verdicts),
                       final_neg, success, send_ppt};
}

ProtocolTrace run_protocol(const DensityMatrix& rho_ab, const Ancilla& ancilla) {
  return run_protocol(rho_ab, ancilla.state());
}

SendStepEigenvalues send_step_eigenvalues(const ComplexMatrix& rho_ab, const ComplexMatrix& rho_c) {
  // CNOT_AC |a b c> = |a b (c xor a)>, and it is its own inverse.
  ComplexMatrix m(8, 8);
  for (std::size_t r = 0; r < 8; ++r) {
    const std::size_t ra = r >> 2, rab = r >> 1, rc = (r & 1) ^ ra;
    for (std::size_t c = 0; c < 8; ++c) {
      const std::size_t ca = c >> 2, cab = c >> 1, cc = (c & 1) ^ ca;
      m(r, c) = rho_ab(rab, cab) * rho_c(rc, cc);
    }
  }
  return {hermitian_spectrum(partial_transpose(m, kThreeQubits, 0)).min(),
          hermitian_spectrum(partial_transpose(m, kThreeQubits, 2)).min()};
}

std::string to_string(Usefulness u) {
  switch (u) {
  case Usefulness::useful: return "useful";
  case Usefulness::not_useful: return "not_useful";
  case Usefulness::invalid: return "invalid";
  }
  return "unknown";
}

namespace {

struct Candidate {
  Ancilla ancilla;
  SendStepEigenvalues ev;
};

bool valid(const SendStepEigenvalues& ev) { return ev.c_cut >= -kPptTolerance; }

Ancilla grid_ancilla(const AncillaGrid& g, std::size_t k) {
  const std::size_t per_shell = g.polar * g.azimuthal;
  const std::size_t shell = k / per_shell;
  const std::size_t i = (k % per_shell) / g.azimuthal;
  const std::size_t j = k % g.azimuthal;
  return {std::numbers::pi * static_cast<double>(i) / static_cast<double>(g.polar - 1),
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(g.azimuthal), g.radii[shell]};
}

void require_grid(const AncillaGrid& g) {
  if (g.polar < 2 || g.azimuthal < 1 || g.radii.empty()) throw std::invalid_argument("AncillaGrid: empty lattice");
  for (double r : g.radii)
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("AncillaGrid: radii must lie in (0, 1]");
  if (g.refine_rounds < 0) throw std::invalid_argument("AncillaGrid: negative refine_rounds");
}

void require_separable(const BellDiagonalParams& p) {
  if (!is_physical_bd(p)) {
    require_physical_bd(p);  // throws UnphysicalState
  }
  if (!is_separable_bd(p)) {
    throw std::invalid_argument("edss requires a separable Bell-diagonal state; the input is entangled (max Bell weight " +
                                format_g12(bd_spectrum(p).max()) + " > 1/2)");
  }
}

// Radius step used by refinement: the smallest gap between shells, or 1/8
// for a single shell.
double radius_step(const AncillaGrid& g) {
  std::vector<double> r = g.radii;
  std::sort(r.begin(), r.end());
  double step = 0.125;
  for (std::size_t k = 1; k < r.size(); ++k)
    if (r[k] - r[k - 1] > 0.0) step = std::min(step, r[k] - r[k - 1]);
  return step;
}

Candidate polish(const ComplexMatrix& rho_ab, const AncillaGrid& g, Candidate best, std::size_t& evaluated) {
  double dp = std::numbers::pi / static_cast<double>(g.polar - 1);
  double da = 2.0 * std::numbers::pi / static_cast<double>(g.azimuthal);
  double dr = radius_step(g);
  for (int round = 0; round < g.refine_rounds; ++round) {
    dp *= 0.5;
    da *= 0.5;
    dr *= 0.5;
    const Ancilla centre = best.ancilla;
    for (int sp = -1; sp <= 1; ++sp)
      for (int sa = -1; sa <= 1; ++sa)
        for (int sr = -1; sr <= 1; ++sr) {
          if (sp == 0 && sa == 0 && sr == 0) continue;
          const Ancilla trial{centre.polar + sp * dp, centre.azimuthal + sa * da,
                              std::clamp(centre.radius + sr * dr, 0.0, 1.0)};
          const auto ev = send_step_eigenvalues(rho_ab, trial.matrix());
          ++evaluated;
          if (valid(ev) && ev.a_cut < best.ev.a_cut) best = {trial, ev};
        }
  }
  return best;
}

EdssResult finish(std::optional<Candidate> best, bool raw_npt, std::size_t evaluated) {
  EdssResult r;
  r.evaluated = evaluated;
  if (best) {
    r.best = best->ancilla;
    r.min_pt_eigenvalue = best->ev.a_cut;
    r.send_step_min_eigenvalue = best->ev.c_cut;
  }
  if (best && best->ev.a_cut < -kPptTolerance) {
    r.status = Usefulness::useful;
  } else if (raw_npt) {
    r.status = Usefulness::invalid;
  } else {
    r.status = Usefulness::not_useful;
  }
  return r;
}

// Reduction shared by the parallel and serial paths: first strictly better
// valid candidate in index order wins.
EdssResult reduce(const ComplexMatrix& rho_ab, const AncillaGrid& g, const std::vector<SendStepEigenvalues>& evs) {
  std::optional<Candidate> best;
  bool raw_npt = false;
  for (std::size_t k = 0; k < evs.size(); ++k) {
    if (evs[k].a_cut < -kPptTolerance) raw_npt = true;
    if (valid(evs[k]) && (!best || evs[k].a_cut < best->ev.a_cut)) best = Candidate{grid_ancilla(g, k), evs[k]};
  }
  std::size_t evaluated = evs.size();
  if (best) best = polish(rho_ab, g, *best, evaluated);
  return finish(best, raw_npt, evaluated);
}

EdssResult single_ancilla(const ComplexMatrix& rho_ab, const Ancilla& a) {
  const auto ev = send_step_eigenvalues(rho_ab, a.matrix());
  std::optional<Candidate> best;
  if (valid(ev)) best = Candidate{a, ev};
  EdssResult r = finish(best, ev.a_cut < -kPptTolerance, 1);
  if (!best) {
    r.best = a;
    r.min_pt_eigenvalue = ev.a_cut;
    r.send_step_min_eigenvalue = ev.c_cut;
  }
  return r;
}

} // namespace

EdssResult edss_useful(const BellDiagonalParams& p, const AncillaSpec& spec) {
  require_separable(p);
  const ComplexMatrix rho_ab = bell_diagonal(p).matrix();
  if (const auto* a = std::get_if<Ancilla>(&spec)) return single_ancilla(rho_ab, *a);
  const auto& g = std::get<AncillaGrid>(spec);
  require_grid(g);
  std::vector<SendStepEigenvalues> evs(g.size());
  const auto total = static_cast<std::ptrdiff_t>(evs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    evs[idx] = send_step_eigenvalues(rho_ab, grid_ancilla(g, idx).matrix());
  }
  return reduce(rho_ab, g, evs);
}

EdssResult edss_useful_reference(const BellDiagonalParams& p, const AncillaSpec& spec) {
  require_separable(p);
  const ComplexMatrix rho_ab = bell_diagonal(p).matrix();
  if (const auto* a = std::get_if<Ancilla>(&spec)) return single_ancilla(rho_ab, *a);
  const auto& g = std::get<AncillaGrid>(spec);
  require_grid(g);
  std::vector<SendStepEigenvalues> evs;
  evs.reserve(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) evs.push_back(send_step_eigenvalues(rho_ab, grid_ancilla(g, k).matrix()));
  return reduce(rho_ab, g, evs);
}

namespace {

struct GridPoint {
  std::array<std::size_t, 3> index;
  BellDiagonalParams params;
};

std::vector<GridPoint> separable_grid(std::size_t resolution) {
  if (resolution < 2) throw std::invalid_argument("sweep: resolution must be at least 2");
  const auto value = [&](std::size_t k) {
    return -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(resolution - 1);
  };
  std::vector<GridPoint> points;
  for (std::size_t i = 0; i < resolution; ++i)
    for (std::size_t j = 0; j < resolution; ++j)
      for (std::size_t k = 0; k < resolution; ++k) {
        const BellDiagonalParams p{value(i), value(j), value(k)};
        if (is_physical_bd(p) && is_separable_bd(p)) points.push_back({{i, j, k}, p});
      }
  return points;
}

SweepRow make_row(const GridPoint& pt, const AncillaGrid& grid) {
  SweepRow row;
  row.index = pt.index;
  row.params = pt.params;
  row.report = analyze_bd(pt.params);
  row.bd_rank = bd_rank(pt.params);
  row.edss = edss_useful_reference(pt.params, grid);
  return row;
}

} // namespace

std::vector<SweepRow> sweep(const SweepConfig& cfg) {
  require_grid(cfg.ancilla);
  const auto points = separable_grid(cfg.resolution);
  std::vector<SweepRow> rows(points.size());
  const auto total = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    rows[static_cast<std::size_t>(k)] = make_row(points[static_cast<std::size_t>(k)], cfg.ancilla);
  }
  return rows;
}

std::vector<SweepRow> sweep_reference(const SweepConfig& cfg) {
  require_grid(cfg.ancilla);
  std::vector<SweepRow> rows;
  for (const auto& pt : separable_grid(cfg.resolution)) rows.push_back(make_row(pt, cfg.ancilla));
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "c1,c2,c3,i_x,i_y,i_z,C,D,Q1,I,negativity,bd_rank,edss_useful,witness_theta,witness_phi,witness_r,"
        "min_pt_eigenvalue\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    os << format_g12(row.params.c1) << ',' << format_g12(row.params.c2) << ',' << format_g12(row.params.c3) << ','
       << format_g12(r.i_x) << ',' << format_g12(r.i_y) << ',' << format_g12(r.i_z) << ','
       << format_g12(r.classical_c) << ',' << format_g12(r.discord) << ',' << format_g12(r.q1) << ','
       << format_g12(r.mutual_info) << ',' << format_g12(r.negativity) << ',' << row.bd_rank << ','
       << (row.edss.useful() ? "true" : "false") << ',';
    if (row.edss.useful()) {
      const auto& w = *row.edss.best;
      os << format_g12(w.polar) << ',' << format_g12(w.azimuthal) << ',' << format_g12(w.radius) << ',';
    } else {
      os << ",,,";
    }
    os << format_g12(row.edss.min_pt_eigenvalue) << '\n';
  }
  return os.str();
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.rows = rows.size();
  for (const auto& row : rows) {
    switch (row.edss.status) {
    case Usefulness::useful: ++s.useful; break;
    case Usefulness::not_useful: ++s.not_useful; break;
    case Usefulness::invalid: ++s.invalid; break;
    }
  }
  return s;
}

} // namespace compcorr::edss
