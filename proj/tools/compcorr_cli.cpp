// compcorr: complementary correlations, discord and separable-carrier
// entanglement distribution for two-qubit Bell-diagonal states.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compcorr/edss.hpp"
#include "compcorr/format.hpp"
#include "compcorr/report.hpp"
#include "compcorr/verify.hpp"

namespace {

using namespace compcorr;
using nlohmann::ordered_json;

struct RunConfig {
  std::string bd;
  std::string state_path;
  std::string ancilla = "auto";
  std::size_t grid = 9;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    double v = 0.0;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
      throw std::invalid_argument(std::string("cannot parse ") + what + " '" + text + "'");
    }
    values.push_back(v);
    pos = end + 1;
  }
  return values;
}

BellDiagonalParams parse_bd(const std::string& text) {
  const auto v = parse_list(text, "--bd");
  if (v.size() != 3) throw std::invalid_argument("--bd expects three comma-separated numbers c1,c2,c3");
  return {v[0], v[1], v[2]};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file " + cfg.out);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file " + cfg.out);
}

void require_one_source(const RunConfig& cfg) {
  if (cfg.bd.empty() == cfg.state_path.empty()) {
    throw std::invalid_argument("give exactly one state source: --bd c1,c2,c3 or --state PATH");
  }
}

// Bell-diagonal parameters from either source; a state file must already be
// Bell-diagonal in the computational frame.
BellDiagonalParams bd_source(const RunConfig& cfg) {
  require_one_source(cfg);
  if (!cfg.bd.empty()) return parse_bd(cfg.bd);
  const DensityMatrix rho = read_state_file(cfg.state_path);
  if (rho.factor_dims() != std::vector<std::size_t>{2, 2}) throw std::invalid_argument("expected a two-qubit state");
  const BlochDecomposition d = bloch_decompose(rho);
  if (!d.is_bell_diagonal(1e-10)) throw std::invalid_argument("state file is not Bell-diagonal");
  return d.diagonal();
}

int cmd_analyze(const RunConfig& cfg) {
  require_one_source(cfg);
  CorrelationReport report;
  if (!cfg.bd.empty()) {
    report = analyze_bd(parse_bd(cfg.bd));
  } else {
    const DensityMatrix rho = read_state_file(cfg.state_path);
    if (rho.factor_dims() != std::vector<std::size_t>{2, 2}) throw std::invalid_argument("expected a two-qubit state");
    report = analyze_state(rho);
  }
  emit(cfg, cfg.format == "csv" ? report_to_csv(report) : report_to_json(report));
  return 0;
}

ordered_json ancilla_json(const edss::Ancilla& a) {
  return {{"theta", a.polar}, {"phi", a.azimuthal}, {"r", a.radius}};
}

ordered_json verdict_json(const PptVerdict& v) {
  return {{"cut", v.cut}, {"min_eigenvalue", v.min_eigenvalue}, {"is_ppt", v.is_ppt}, {"spectrum", v.spectrum.eigenvalues}};
}

int cmd_edss(const RunConfig& cfg) {
  const BellDiagonalParams p = bd_source(cfg);
  edss::AncillaSpec spec = edss::AncillaGrid{};
  if (cfg.ancilla != "auto") {
    const auto v = parse_list(cfg.ancilla, "--ancilla");
    if (v.size() != 2 && v.size() != 3) throw std::invalid_argument("--ancilla expects auto or THETA,PHI[,R]");
    spec = edss::Ancilla{v[0], v[1], v.size() == 3 ? v[2] : 1.0};
  }
  const edss::EdssResult result = edss::edss_useful(p, spec);
  const edss::Ancilla used = result.best.value_or(edss::Ancilla{});
  const edss::ProtocolTrace trace = edss::run_protocol(bell_diagonal(p), used);

  static const char* const kStages[] = {"initial", "after_alice", "after_bob"};
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "stage,cut,min_eigenvalue,is_ppt\n";
    for (std::size_t s = 0; s < edss::kStageCount; ++s)
      for (const auto& v : trace.stage_verdicts[s])
        os << kStages[s] << ',' << v.cut << ',' << format_g12(v.min_eigenvalue) << ',' << (v.is_ppt ? "true" : "false")
           << '\n';
    emit(cfg, os.str());
    return 0;
  }

  ordered_json doc;
  doc["input"] = {{"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}};
  doc["ancilla"] = ancilla_json(used);
  doc["search"] = {{"mode", std::holds_alternative<edss::Ancilla>(spec) ? "fixed" : "auto"},
                   {"status", edss::to_string(result.status)},
                   {"evaluated", result.evaluated},
                   {"witness", result.useful() ? ancilla_json(*result.best) : ordered_json(nullptr)}};
  ordered_json stages = ordered_json::array();
  for (std::size_t s = 0; s < edss::kStageCount; ++s) {
    ordered_json cuts = ordered_json::array();
    for (const auto& v : trace.stage_verdicts[s]) cuts.push_back(verdict_json(v));
    stages.push_back({{"stage", kStages[s]}, {"cuts", cuts}});
  }
  doc["stages"] = stages;
  doc["final_ab_negativity"] = trace.final_ab_negativity;
  doc["success"] = trace.success;
  doc["send_step_ppt"] = trace.send_step_ppt;
  doc["distributed"] = trace.distributed();
  emit(cfg, doc.dump(2) + "\n");
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  edss::SweepConfig sc;
  sc.resolution = cfg.grid;
  const auto rows = edss::sweep(sc);
  emit(cfg, edss::sweep_csv(rows));
  const auto s = edss::summarize(rows);
  (cfg.out.empty() ? std::cerr : std::cout) << "rows=" << s.rows << " useful=" << s.useful
                                            << " not_useful=" << s.not_useful << " invalid=" << s.invalid << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const auto report = verify::run({cfg.seed, cfg.samples});
  emit(cfg, verify::format(report));
  return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complementary correlations and separable-carrier entanglement distribution"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_source = [&](CLI::App* sub) {
    sub->add_option("--bd", cfg.bd, "Bell-diagonal coefficients c1,c2,c3");
    sub->add_option("--state", cfg.state_path, "state file (JSON: dims, matrix_re, matrix_im)");
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* analyze = app.add_subcommand("analyze", "all correlation measures for one state");
  add_source(analyze);
  add_output(analyze);

  auto* edss_cmd = app.add_subcommand("edss", "run the distribution protocol on a separable Bell-diagonal state");
  add_source(edss_cmd);
  add_output(edss_cmd);
  edss_cmd->add_option("--ancilla", cfg.ancilla, "auto, or THETA,PHI[,R] for a fixed carrier");

  auto* sweep = app.add_subcommand("sweep", "tabulate the separable Bell-diagonal grid as CSV");
  sweep->add_option("--grid", cfg.grid, "points per axis on [-1, 1]")->required()->check(CLI::Range(2, 1001));
  sweep->add_option("--out", cfg.out, "output path (default: stdout)");
  sweep->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "run the oracle cross-checks");
  verify_cmd->add_option("--seed", cfg.seed, "random seed");
  verify_cmd->add_option("--samples", cfg.samples, "samples per property")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", cfg.out, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (edss_cmd->parsed()) return cmd_edss(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
  } catch (const UnphysicalState& e) {
    std::cerr << "error: unphysical: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
