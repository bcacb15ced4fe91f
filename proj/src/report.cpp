#include "compcorr/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "compcorr/format.hpp"
#include "compcorr/oracle.hpp"

namespace compcorr {

CorrelationReport analyze_bd(const BellDiagonalParams& p) {
  const DensityMatrix rho = bell_diagonal(p);
  const auto cc = complementary_correlations(rho);
  CorrelationReport r;
  r.i_x = cc.i_x;
  r.i_y = cc.i_y;
  r.i_z = cc.i_z;
  r.classical_c = classical_correlation(p);
  r.mutual_info = total_mutual_information_bd(p);
  r.discord = discord_bd(p);
  r.q1 = cc.i_z;
  r.negativity = negativity(rho, Cut{0});
  r.e_r = rel_entropy_entanglement_bd(p);
  r.all_complementary_nonzero = necessary_condition_bd(p);
  r.bell_diagonal = true;
  return r;
}

CorrelationReport analyze_state(const DensityMatrix& rho) {
  const NormalForm nf = normal_form(rho);
  const auto cc = complementary_correlations(rho);
  CorrelationReport r;
  r.i_x = cc.i_x;
  r.i_y = cc.i_y;
  r.i_z = cc.i_z;
  r.q1 = cc.i_z;
  r.negativity = negativity(rho, Cut{0});
  if (nf.bloch.is_bell_diagonal(1e-10)) {
    const BellDiagonalParams p = nf.bloch.diagonal();
    r.classical_c = classical_correlation(p);
    r.mutual_info = total_mutual_information_bd(p);
    r.discord = discord_bd(p);
    r.e_r = rel_entropy_entanglement_bd(p);
    r.all_complementary_nonzero = necessary_condition_bd(p);
    r.bell_diagonal = true;
  } else {
    r.classical_c = oracle::maximize_holevo(rho).value;
    r.mutual_info = total_mutual_information(rho);
    r.discord = std::max(0.0, r.mutual_info - r.classical_c);
    r.e_r = std::numeric_limits<double>::quiet_NaN();
    r.all_complementary_nonzero = cc.i_x > 1e-12 && cc.i_y > 1e-12 && cc.i_z > 1e-12;
    r.bell_diagonal = false;
  }
  return r;
}

std::string report_to_json(const CorrelationReport& r) {
  nlohmann::ordered_json j;
  const auto num = [](double v) { return std::isnan(v) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v); };
  j["i_x"] = num(r.i_x);
  j["i_y"] = num(r.i_y);
  j["i_z"] = num(r.i_z);
  j["classical_c"] = num(r.classical_c);
  j["discord"] = num(r.discord);
  j["q1"] = num(r.q1);
  j["mutual_info"] = num(r.mutual_info);
  j["negativity"] = num(r.negativity);
  j["e_r"] = num(r.e_r);
  j["all_complementary_nonzero"] = r.all_complementary_nonzero;
  j["bell_diagonal"] = r.bell_diagonal;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const CorrelationReport& r) {
  std::ostringstream os;
  os << "i_x,i_y,i_z,classical_c,discord,q1,mutual_info,negativity,e_r,all_complementary_nonzero,bell_diagonal\n";
  os << format_g12(r.i_x) << ',' << format_g12(r.i_y) << ',' << format_g12(r.i_z) << ','
     << format_g12(r.classical_c) << ',' << format_g12(r.discord) << ',' << format_g12(r.q1) << ','
     << format_g12(r.mutual_info) << ',' << format_g12(r.negativity) << ',' << format_g12(r.e_r) << ','
     << (r.all_complementary_nonzero ? "true" : "false") << ',' << (r.bell_diagonal ? "true" : "false") << '\n';
  return os.str();
}

} // namespace compcorr
