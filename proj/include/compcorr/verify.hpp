#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace compcorr::verify {

struct Check {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // measured worst-case deviation (or violation count)
  double tolerance = 0.0;
  std::string detail;
};

struct Config {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
};

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_passed() const;
};

/// Oracle cross-checks and invariant samplers; deterministic for a config.
Report run(const Config& cfg);

/// Plain text: one "PASS|FAIL name deviation=... tolerance=..." line per
/// check, then the notes.
std::string format(const Report& report);

} // namespace compcorr::verify
