#include <doctest.h>

#include <cmath>

#include "compcorr/entanglement.hpp"
#include "compcorr/sampling.hpp"

using namespace compcorr;

TEST_CASE("cut labels") {
  CHECK(cut_label(Cut{0}, 2) == "A|B");
  CHECK(cut_label(Cut{1}, 2) == "B|A");
  CHECK(cut_label(Cut{0}, 3) == "A|BC");
  CHECK(cut_label(Cut{1}, 3) == "B|AC");
  CHECK(cut_label(Cut{2}, 3) == "C|AB");
}

TEST_CASE("PPT verdicts of reference states") {
  const auto phi = ppt_verdict(pure_state(bell::phi_plus()), Cut{0});
  CHECK_FALSE(phi.is_ppt);
  CHECK(phi.min_eigenvalue == doctest::Approx(-0.5));
  CHECK(phi.cut == "A|B");
  CHECK(ppt_verdict(bell_diagonal({0, 0, 1}), Cut{0}).is_ppt);
  CHECK_THROWS_AS(ppt_verdict(bell_diagonal({0, 0, 1}), Cut{2}), std::out_of_range);
}

TEST_CASE("negativity") {
  CHECK(negativity(pure_state(bell::phi_plus()), Cut{0}) == doctest::Approx(0.5));
  CHECK(negativity(bell_diagonal({1, -1, 1}), Cut{1}) == doctest::Approx(0.5));
  CHECK(negativity(bell_diagonal({0.5, 0.0, 0.25}), Cut{0}) < 1e-12);
  // Werner p = 0.6: smallest PT eigenvalue (1 - 3p)/4 = -0.2
  CHECK(negativity(werner(0.6), Cut{0}) == doctest::Approx(0.2));
}

TEST_CASE("Bell-diagonal partial transpose spectrum is 1/2 minus the Bell weights") {
  sampling::Rng rng(201);
  for (int k = 0; k < 300; ++k) {
    const auto p = sampling::random_bd(rng);
    const auto pt = ppt_verdict(bell_diagonal(p), Cut{0}).spectrum;
    std::vector<double> want;
    for (double w : bell_basis_eigenvalues(p)) want.push_back(0.5 - w);
    std::sort(want.begin(), want.end());
    CHECK(max_deviation(pt, Spectrum{want}) < 1e-10);
    CHECK((pt.min() >= -kPptTolerance) == is_separable_bd(p));
  }
}

TEST_CASE("a zero coefficient leaves the partial transpose spectrum unchanged") {
  sampling::Rng rng(203);
  std::size_t accepted = 0;
  while (accepted < 300) {
    auto c = sampling::random_bd(rng).as_array();
    c[accepted % 3] = 0.0;
    const BellDiagonalParams p{c[0], c[1], c[2]};
    if (!is_physical_bd(p)) continue;
    ++accepted;
    const auto rho = bell_diagonal(p);
    CHECK(negativity(rho, Cut{0}) < 1e-12);
    CHECK(max_deviation(ppt_verdict(rho, Cut{0}).spectrum, hermitian_spectrum(rho.matrix())) < 1e-10);
    CHECK_FALSE(necessary_condition_bd(p));
  }
}

TEST_CASE("relative entropy of entanglement") {
  CHECK(rel_entropy_entanglement_bd({1, -1, 1}) == doctest::Approx(1.0));
  CHECK(rel_entropy_entanglement_bd({0.3, -0.3, 0.3}) == 0.0);
  CHECK(rel_entropy_entanglement_bd({0, 0, 0}) == 0.0);
  // Werner p = 0.6: largest weight 0.7
  CHECK(rel_entropy_entanglement_bd(werner_params(0.6)) == doctest::Approx(1.0 - binary_entropy(0.7)));
}

TEST_CASE("necessary condition for entanglement") {
  CHECK(necessary_condition_bd({0.3, -0.3, 0.3}));
  CHECK_FALSE(necessary_condition_bd({0.5, 0.0, 0.25}));
  sampling::Rng rng(205);
  for (int k = 0; k < 500; ++k) {
    const auto p = sampling::random_bd(rng);
    if (!is_separable_bd(p)) CHECK(necessary_condition_bd(p));
  }
}
