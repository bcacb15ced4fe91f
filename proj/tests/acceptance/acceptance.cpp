// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "compcorr/edss.hpp"
#include "compcorr/format.hpp"
#include "compcorr/oracle.hpp"
#include "compcorr/sampling.hpp"

using namespace compcorr;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> info;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string g(double v) { return format_g12(v); }

std::string triple(const BellDiagonalParams& p) {
  return "(" + g(p.c1) + ", " + g(p.c2) + ", " + g(p.c3) + ")";
}

// Axes whose closed-form correlation is within `tol` bits of the best.
std::vector<std::size_t> leading_axes(const BellDiagonalParams& p, double tol) {
  const double best = classical_correlation(p);
  std::vector<std::size_t> axes;
  for (std::size_t a = 0; a < 3; ++a)
    if (best - correlation_bits(p[a]) <= tol) axes.push_back(a);
  return axes;
}

Outcome holevo_closed_form() {
  const auto t0 = Clock::now();
  sampling::Rng rng(1001);
  constexpr double kTieBits = 1e-4;
  const double max_angle = 5.0 * std::numbers::pi / 180.0;
  double worst_value = 0.0, worst_angle = 0.0;
  std::size_t ties = 0;
  for (int k = 0; k < 200; ++k) {
    const auto p = sampling::random_bd(rng);
    const auto opt = oracle::maximize_holevo(bell_diagonal(p));
    worst_value = std::max(worst_value, std::abs(opt.value - classical_correlation(p)));
    const auto axes = leading_axes(p, kTieBits);
    if (axes.size() > 1) ++ties;
    double angle = std::numbers::pi;
    for (std::size_t a : axes) angle = std::min(angle, std::acos(std::min(1.0, std::abs(opt.argmax_bloch[a]))));
    worst_angle = std::max(worst_angle, angle);
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.passed = worst_value <= 1e-4 && worst_angle <= max_angle && secs < 60.0;
  o.summary = "max |C - oracle| = " + g(worst_value) + ", max argmax angle = " +
              g(worst_angle * 180.0 / std::numbers::pi) + " deg, " + g(secs) + " s";
  o.info.push_back("200 states; ties (leading axes within 1e-4 bits) = " + std::to_string(ties) +
                   "; a tied argmax may sit on any tied axis");
  return o;
}

Outcome psi_phi_family() {
  double closed = 0.0, numeric = 0.0;
  Outcome o;
  for (int k = 1; k <= 9; ++k) {
    const DensityMatrix rho = psi_phi_mixture(0.1 * k);
    const BellDiagonalParams p = bloch_decompose(rho).diagonal();
    const double q = complementary_correlations(rho).i_z;
    const double d = discord_bd(p);
    const double dn = oracle::discord_numeric(rho);
    closed = std::max({closed, std::abs(d - rel_entropy_entanglement_bd(p)), std::abs(d - q)});
    numeric = std::max(numeric, std::abs(dn - q));
    o.info.push_back("c3=" + g(0.1 * k) + " D=" + g(d) + " E_r=" + g(rel_entropy_entanglement_bd(p)) +
                     " Q1=" + g(q) + " D_numeric=" + g(dn));
  }
  o.passed = closed <= 1e-9 && numeric <= 1e-4;
  o.summary = "max closed-form gap = " + g(closed) + ", max |D_numeric - Q1| = " + g(numeric);
  return o;
}

std::vector<BellDiagonalParams> random_sample() {
  sampling::Rng rng(1003);
  std::vector<BellDiagonalParams> out;
  for (int k = 0; k < 10000; ++k) out.push_back(sampling::random_bd(rng));
  return out;
}

std::vector<BellDiagonalParams> werner_sample() {
  std::vector<BellDiagonalParams> out;
  for (int k = 1; k <= 9; ++k) out.push_back(werner_params(0.1 * k));
  return out;
}

bool z_strictly_dominant(const BellDiagonalParams& p) {
  return std::abs(p.c3) > std::abs(p.c1) && std::abs(p.c3) > std::abs(p.c2);
}

// Shared scan for the two inequality criteria. `gap(p)` must be <= 1e-12.
Outcome inequality_scan(const std::function<double(const BellDiagonalParams&)>& gap) {
  const auto sample = random_sample();
  std::size_t violations = 0, z_dominant = 0, violations_off_z = 0;
  double worst = -1.0;
  BellDiagonalParams worst_p;
  for (const auto& p : sample) {
    if (z_strictly_dominant(p)) ++z_dominant;
    const double v = gap(p);
    if (v > 1e-12) {
      ++violations;
      if (!z_strictly_dominant(p)) ++violations_off_z;
    }
    if (v > worst) {
      worst = v;
      worst_p = p;
    }
  }
  std::size_t werner_violations = 0;
  double werner_worst = -1.0;
  for (const auto& p : werner_sample()) {
    werner_violations += gap(p) > 1e-12;
    werner_worst = std::max(werner_worst, gap(p));
  }
  const double cc = gap({0.0, 0.0, 1.0});

  Outcome o;
  o.passed = violations == 0 && werner_violations == 0;
  o.summary = std::to_string(violations) + "/" + std::to_string(sample.size()) + " random states violate, " +
              std::to_string(werner_violations) + "/9 Werner states violate";
  o.info.push_back("largest excess " + g(worst) + " at " + triple(worst_p));
  o.info.push_back("states with |c3| strictly largest: " + std::to_string(z_dominant) +
                   "; violations outside that set: " + std::to_string(violations_off_z));
  o.info.push_back("Werner p = 0.1..0.9 largest excess " + g(werner_worst));
  o.info.push_back("classically correlated state (0, 0, 1): excess " + g(cc));
  return o;
}

Outcome q1_below_discord() {
  auto o = inequality_scan([](const BellDiagonalParams& p) { return q1(p) - discord_bd(p); });
  o.info.push_back("the bound holds whenever the largest |c_i| is not on z; a strictly dominant z axis gives "
                   "Q1 = C and D = I - C, which can be smaller");
  return o;
}

Outcome q1_plus_c_below_i() {
  auto o = inequality_scan(
      [](const BellDiagonalParams& p) { return q1(p) + classical_correlation(p) - total_mutual_information_bd(p); });
  double family = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const BellDiagonalParams p = bloch_decompose(psi_phi_mixture(0.1 * k)).diagonal();
    family = std::max(family, std::abs(q1(p) + classical_correlation(p) - total_mutual_information_bd(p)));
  }
  const bool family_ok = family <= 1e-9;
  o.passed = o.passed && family_ok;
  o.summary += ", family |Q1 + C - I| = " + g(family) + (family_ok ? " (ok)" : " (FAIL)");
  return o;
}

Outcome zero_coefficient() {
  sampling::Rng rng(1005);
  double neg = 0.0, pt_dev = 0.0;
  std::size_t accepted = 0;
  while (accepted < 1000) {
    auto c = sampling::random_bd(rng).as_array();
    c[accepted % 3] = 0.0;
    const BellDiagonalParams p{c[0], c[1], c[2]};
    if (!is_physical_bd(p)) continue;
    ++accepted;
    const DensityMatrix rho = bell_diagonal(p);
    neg = std::max(neg, negativity(rho, Cut{0}));
    pt_dev = std::max(pt_dev, max_deviation(ppt_verdict(rho, Cut{0}).spectrum, hermitian_spectrum(rho.matrix())));
  }
  Outcome o;
  o.passed = neg < 1e-12 && pt_dev <= 1e-10;
  o.summary = "1000 states, max negativity = " + g(neg) + ", max PT spectrum deviation = " + g(pt_dev);
  return o;
}

Outcome discord_comparison() {
  const BellDiagonalParams a{0.5, 0.25, 0.25}, b{0.5, 0.0, 0.25};
  const double da = discord_bd(a), db = discord_bd(b);
  const double na = oracle::discord_numeric(bell_diagonal(a)), nb = oracle::discord_numeric(bell_diagonal(b));
  Outcome o;
  o.passed = da - db > 1e-3 && na - nb > 1e-3 && std::abs(na - da) <= 1e-4 && std::abs(nb - db) <= 1e-4;
  o.summary = "D" + triple(a) + " = " + g(da) + ", D" + triple(b) + " = " + g(db);
  o.info.push_back("numeric: " + g(na) + " and " + g(nb));
  return o;
}

Outcome classically_correlated_state() {
  const auto rho = classically_correlated();
  const auto cc = complementary_correlations(rho);
  const auto p = bloch_decompose(rho).diagonal();
  const double dev = std::max({std::abs(cc.i_x), std::abs(cc.i_y), std::abs(cc.i_z - 1.0),
                               std::abs(cc.i_z - classical_correlation(p))});
  Outcome o;
  o.passed = dev <= 1e-12;
  o.summary = "(i_x, i_y, i_z) = (" + g(cc.i_x) + ", " + g(cc.i_y) + ", " + g(cc.i_z) + "), max deviation " + g(dev);
  return o;
}

Outcome maximal_entanglement() {
  const auto cc = complementary_correlations(pure_state(bell::phi_plus()));
  const double dev = std::abs(cc.i_x + cc.i_z - 2.0);
  Outcome o;
  o.passed = dev <= 1e-12;
  o.summary = "i_x + i_z = " + g(cc.i_x + cc.i_z) + ", deviation " + g(dev);
  return o;
}

bool is_face(const BellDiagonalParams& p) { return p.c1 == 0.0 || p.c2 == 0.0 || p.c3 == 0.0; }

Outcome distribution_sweep() {
  const auto t0 = Clock::now();
  edss::SweepConfig cfg;  // resolution 9, default carrier grid
  const auto rows = edss::sweep(cfg);
  const double secs = seconds_since(t0);

  std::size_t faces = 0, face_useful = 0, interior = 0, interior_useful = 0, rank_bad = 0, send_bad = 0;
  std::vector<std::string> not_useful;
  std::size_t useful_positive_det = 0, not_useful_negative_det = 0;
  for (const auto& row : rows) {
    const auto& p = row.params;
    if (is_face(p)) {
      ++faces;
      face_useful += row.edss.useful();
    } else {
      ++interior;
      const double det = p.c1 * p.c2 * p.c3;
      if (row.edss.useful()) {
        ++interior_useful;
        useful_positive_det += det > 0.0;
      } else {
        not_useful.push_back(triple(p) + " status=" + edss::to_string(row.edss.status));
        not_useful_negative_det += det < 0.0;
      }
    }
    if (row.edss.useful()) {
      if (row.bd_rank < 3) ++rank_bad;
      const auto t = edss::run_protocol(bell_diagonal(p), *row.edss.best);
      if (!t.distributed()) ++send_bad;
    }
  }

  Outcome o;
  o.passed = face_useful == 0 && rank_bad == 0 && send_bad == 0 && secs < 600.0 && !rows.empty();
  o.summary = "faces useful " + std::to_string(face_useful) + "/" + std::to_string(faces) + ", interior useful " +
              std::to_string(interior_useful) + "/" + std::to_string(interior) + ", useful with rank < 3: " +
              std::to_string(rank_bad) + ", useful without PPT carrier on recheck: " + std::to_string(send_bad) +
              ", " + g(secs) + " s";
  o.info.push_back("resolution " + std::to_string(cfg.resolution) + ", " + std::to_string(cfg.ancilla.size()) +
                   " grid carriers per point, interior fraction useful = " +
                   g(interior ? static_cast<double>(interior_useful) / static_cast<double>(interior) : 0.0));
  o.info.push_back("useful interior points with c1*c2*c3 > 0: " + std::to_string(useful_positive_det) +
                   "; not-useful interior points with c1*c2*c3 < 0: " + std::to_string(not_useful_negative_det));
  for (const auto& s : not_useful) o.info.push_back("counterexample candidate (interior, not useful): " + s);
  return o;
}

Outcome kernel_properties() {
  const auto t0 = Clock::now();
  sampling::Rng rng(1007);
  double involution = 0.0, entropy = 0.0, spectrum = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t q = 2 + k % 2;
    const DensityMatrix rho = sampling::random_state(rng, q);
    for (std::size_t f = 0; f < q; ++f) {
      const auto twice = partial_transpose(partial_transpose(rho.matrix(), rho.factor_dims(), f), rho.factor_dims(), f);
      involution = std::max(involution, twice.max_abs_diff(rho.matrix()));
    }
    // invariance under a random unitary, bounds 0 <= S <= log2 d
    ComplexMatrix rotated = conjugate(sampling::random_unitary(rng, rho.dim()), rho.matrix());
    rotated = 0.5 * (rotated + rotated.adjoint());
    const double s = von_neumann_entropy(rho);
    entropy = std::max(entropy, std::abs(von_neumann_entropy(DensityMatrix(rotated, rho.factor_dims())) - s));
    entropy = std::max({entropy, -s, s - static_cast<double>(q)});
    // additivity on products
    if (q == 2) {
      const std::size_t keep_a[] = {0}, keep_b[] = {1};
      const auto ra = partial_trace(rho, keep_a), rb = partial_trace(rho, keep_b);
      entropy = std::max(entropy, std::abs(von_neumann_entropy(kron(ra, rb)) - von_neumann_entropy(ra) -
                                           von_neumann_entropy(rb)));
    }
    spectrum = std::max(spectrum, oracle::spectrum_crosscheck(sampling::random_bd(rng)));
  }
  entropy = std::max({entropy, std::abs(von_neumann_entropy(pure_state(bell::phi_plus()))),
                      std::abs(von_neumann_entropy(bell_diagonal({0, 0, 0})) - 2.0)});
  const double secs = seconds_since(t0);
  Outcome o;
  o.passed = involution < 1e-10 && entropy < 1e-10 && spectrum < 1e-10 && secs < 30.0;
  o.summary = "PT involution " + g(involution) + ", entropy axioms " + g(entropy) + ", spectrum cross-check " +
              g(spectrum) + ", " + g(secs) + " s";
  return o;
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"classical_correlation_matches_holevo_oracle", holevo_closed_form},
      {"psi_phi_family_discord_equals_er_and_q1", psi_phi_family},
      {"q1_bounded_by_discord", q1_below_discord},
      {"q1_plus_c_bounded_by_mutual_information", q1_plus_c_below_i},
      {"zero_coefficient_not_entangled", zero_coefficient},
      {"discord_drops_with_zero_coefficient", discord_comparison},
      {"classically_correlated_state", classically_correlated_state},
      {"maximal_entanglement_sum", maximal_entanglement},
      {"separable_carrier_distribution_sweep", distribution_sweep},
      {"kernel_properties", kernel_properties},
  };

  int failed = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.summary = std::string("exception: ") + e.what();
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << index << ' ' << c.name << ": " << o.summary << '\n';
    for (const auto& line : o.info) std::cout << "    " << line << '\n';
    std::cout.flush();
    failed += !o.passed;
    ++index;
  }
  std::cout << (index - 1 - failed) << '/' << (index - 1) << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
