#include "compcorr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "compcorr/correlations.hpp"
#include "compcorr/entanglement.hpp"
#include "compcorr/format.hpp"
#include "compcorr/oracle.hpp"
#include "compcorr/sampling.hpp"

namespace compcorr::verify {

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

Check bounded(std::string name, double deviation, double tolerance, std::string detail = {}) {
  return {std::move(name), deviation <= tolerance, deviation, tolerance, std::move(detail)};
}

// Relabel axes so that |c1| is the largest magnitude.
BellDiagonalParams x_dominant(BellDiagonalParams p) {
  if (std::abs(p.c2) > std::abs(p.c1) && std::abs(p.c2) >= std::abs(p.c3)) std::swap(p.c1, p.c2);
  else if (std::abs(p.c3) > std::abs(p.c1)) std::swap(p.c1, p.c3);
  return p;
}

} // namespace

Report run(const Config& cfg) {
  Report report;
  sampling::Rng rng(cfg.seed);
  const std::size_t n = std::max<std::size_t>(cfg.samples, 1);

  {
    std::vector<oracle::QubitBasis> paulis{oracle::pauli_eigenbasis(0), oracle::pauli_eigenbasis(1),
                                           oracle::pauli_eigenbasis(2)};
    const bool mub = oracle::mub_check(paulis);
    const bool same = oracle::mub_check({oracle::pauli_eigenbasis(2), oracle::pauli_eigenbasis(2)});
    report.checks.push_back({"mub_pauli_eigenbases", mub, 0.0, 1e-12, "x, y, z eigenbases pairwise unbiased"});
    report.checks.push_back({"mub_rejects_identical_bases", !same, 0.0, 1e-12, "{z, z} is not unbiased"});
    report.notes.push_back(
        "complementarity is checked with squared overlaps |<a_i|b_j>|^2 = 1/d; the unsquared form "
        "|<a_i|b_j>| = 1/d is not satisfied by the Pauli eigenbases (their overlaps have modulus 1/sqrt(2))");
  }

  {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, oracle::spectrum_crosscheck(sampling::random_bd(rng)));
    report.checks.push_back(bounded("bd_spectrum_vs_eigensolver", worst, 1e-10));
  }

  {
    double involution = 0.0, entropy = 0.0;
    const std::size_t m = std::min<std::size_t>(n, 100);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t q = 2 + k % 2;
      const DensityMatrix rho = sampling::random_state(rng, q);
      for (std::size_t f = 0; f < q; ++f) {
        const ComplexMatrix twice =
            partial_transpose(partial_transpose(rho.matrix(), rho.factor_dims(), f), rho.factor_dims(), f);
        involution = std::max(involution, twice.max_abs_diff(rho.matrix()));
      }
      const ComplexMatrix u = sampling::random_unitary(rng, rho.dim());
      ComplexMatrix rotated = conjugate(u, rho.matrix());
      rotated = 0.5 * (rotated + rotated.adjoint());
      const DensityMatrix rho_u(std::move(rotated), rho.factor_dims());
      entropy = std::max(entropy, std::abs(von_neumann_entropy(rho_u) - von_neumann_entropy(rho)));
    }
    report.checks.push_back(bounded("partial_transpose_involution", involution, 1e-12));
    report.checks.push_back(bounded("entropy_unitary_invariance", entropy, 1e-10));
  }

  {
    double worst = 0.0;
    for (std::size_t k = 0; k < std::min<std::size_t>(n, 100); ++k) {
      const auto p = sampling::random_bd(rng);
      worst = std::max(worst, std::abs(q1(p) - complementary_correlations(bell_diagonal(p)).i_z));
    }
    report.checks.push_back(bounded("q1_matches_measured_z_correlation", worst, 1e-12));
  }

  {
    double c_dev = 0.0, d_dev = 0.0;
    const std::size_t m = std::min<std::size_t>(n, 20);
    for (std::size_t k = 0; k < m; ++k) {
      const auto p = sampling::random_bd(rng);
      const DensityMatrix rho = bell_diagonal(p);
      const auto opt = oracle::maximize_holevo(rho);
      c_dev = std::max(c_dev, std::abs(opt.value - classical_correlation(p)));
      d_dev = std::max(d_dev, std::abs(total_mutual_information(rho) - opt.value - discord_bd(p)));
    }
    report.checks.push_back(bounded("classical_correlation_vs_holevo_oracle", c_dev, 1e-4));
    report.checks.push_back(bounded("discord_closed_form_vs_oracle", d_dev, 1e-4));
  }

  {
    double worst = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const DensityMatrix rho = psi_phi_mixture(0.1 * k);
      const BellDiagonalParams p = bloch_decompose(rho).diagonal();
      const double q = complementary_correlations(rho).i_z;
      const double d = discord_bd(p);
      worst = std::max({worst, std::abs(d - q), std::abs(d - rel_entropy_entanglement_bd(p)),
                        std::abs(q + classical_correlation(p) - total_mutual_information_bd(p))});
    }
    report.checks.push_back(bounded("psi_phi_family_discord_equals_q1_and_er", worst, 1e-9));
  }

  {
    // The closed-form classical correlation sits on the axis of max |c_i|;
    // with that axis labelled x the z-correlation is bounded by the discord.
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto p = x_dominant(sampling::random_bd(rng));
      worst = std::max(worst, q1(p) - discord_bd(p));
      worst = std::max(worst, q1(p) + classical_correlation(p) - total_mutual_information_bd(p));
    }
    report.checks.push_back(bounded("q1_le_discord_with_x_dominant_labelling", std::max(0.0, worst), 1e-12,
                                    "also checks q1 + C <= I"));
  }

  {
    double neg = 0.0, pt_dev = 0.0;
    std::size_t accepted = 0;
    while (accepted < n) {
      auto c = sampling::random_bd(rng).as_array();
      c[accepted % 3] = 0.0;
      const BellDiagonalParams p{c[0], c[1], c[2]};
      if (!is_physical_bd(p)) continue;
      ++accepted;
      const DensityMatrix rho = bell_diagonal(p);
      const PptVerdict v = ppt_verdict(rho, Cut{0});
      neg = std::max(neg, negativity(rho, Cut{0}));
      pt_dev = std::max(pt_dev, max_deviation(v.spectrum, hermitian_spectrum(rho.matrix())));
    }
    report.checks.push_back(bounded("zero_coefficient_gives_zero_negativity", neg, 1e-12));
    report.checks.push_back(bounded("zero_coefficient_pt_spectrum_unchanged", pt_dev, 1e-10));
  }

  {
    std::size_t disagreements = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto p = sampling::random_bd(rng);
      const bool sep = is_separable_bd(p);
      const bool zero_neg = negativity(bell_diagonal(p), Cut{0}) < 1e-12;
      if (sep != zero_neg) ++disagreements;
    }
    report.checks.push_back(bounded("separability_matches_zero_negativity", static_cast<double>(disagreements), 0.0,
                                    "deviation counts disagreements"));
  }

  return report;
}

std::string format(const Report& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " deviation=" << format_g12(c.deviation)
       << " tolerance=" << format_g12(c.tolerance);
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  for (const auto& note : report.notes) os << "note: " << note << '\n';
  const auto passed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.passed; });
  os << passed << '/' << report.checks.size() << " checks passed\n";
  return os.str();
}

} // namespace compcorr::verify
