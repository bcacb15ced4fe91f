#include <doctest.h>

#include "compcorr/verify.hpp"

using namespace compcorr;

TEST_CASE("verify suite passes and is deterministic") {
  const auto a = verify::run({7, 50});
  CHECK(a.all_passed());
  CHECK(a.checks.size() >= 10);
  const auto text = verify::format(a);
  CHECK(text == verify::format(verify::run({7, 50})));
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("checks passed") != std::string::npos);
}

TEST_CASE("report formatting") {
  verify::Report r;
  r.checks.push_back({"alpha", true, 0.0, 1e-12, ""});
  r.checks.push_back({"beta", false, 0.5, 0.1, "detail"});
  r.notes.push_back("n");
  CHECK_FALSE(r.all_passed());
  CHECK(verify::format(r) ==
        "PASS alpha deviation=0 tolerance=1e-12\n"
        "FAIL beta deviation=0.5 tolerance=0.1 (detail)\n"
        "note: n\n"
        "1/2 checks passed\n");
}
