#include "cli_main.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "milef/errors.hpp"
#include "milef/json_io.hpp"
#include "milef/lattice.hpp"
#include "milef/metrics.hpp"
#include "milef/slicing.hpp"
#include "milef/zoo.hpp"

namespace {

using namespace milef;

// All tolerances are exact rationals given as "p/q"; no float flags exist.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string out_path;
  std::string delta_text = "1/10";
  int v_max = 5;
  long seed = 0;
  Caps caps = Caps::defaults();
};

void apply_env_caps(Caps& caps) {
  auto read = [](const char* name, auto& slot) {
    if (const char* v = std::getenv(name)) slot = static_cast<std::decay_t<decltype(slot)>>(std::atoll(v));
  };
  read("MILEF_MAX_ENUM_DIM", caps.max_enum_dim);
  read("MILEF_MAX_BOX_POINTS", caps.max_box_points);
  read("MILEF_MAX_OUTPUT_VERTICES", caps.max_output_vertices);
  read("MILEF_V_MAX", caps.v_max);
  read("MILEF_MAX_ORACLE_N", caps.max_oracle_n);
  read("MILEF_MAX_DET_SUBSETS", caps.max_det_subsets);
}

void emit(const RunConfig& cfg, const Json& report) {
  if (!cfg.out_path.empty())
    save_json_file(cfg.out_path, report);
  else
    std::cout << report.dump(2) << "\n";
}

int cmd_gen(const RunConfig& cfg, const std::string& family, int n) {
  FormulationBundle b = make_bundle(family, n, cfg.caps);
  if (cfg.out_path.empty()) throw ContractError("gen requires --out");
  save_json_file(cfg.out_path, to_json(b));
  std::cout << "wrote " << b.target_name << " to " << cfg.out_path << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  FormulationBundle b = bundle_from_json(load_json_file(cfg.inputs[0]));
  VerifyReport report = verify_bundle(b, cfg.caps);
  emit(cfg, to_json(report));
  return report.pass ? 0 : 2;
}

int cmd_mihull(const RunConfig& cfg) {
  Milef m = milef_from_json(load_json_file(cfg.inputs[0]));
  VPolytope hull = mixed_integer_hull(m, cfg.caps);
  VPolytope image = map_and_prune(m.pi(), hull);
  emit(cfg, Json{{"hull", to_json(hull)}, {"image", to_json(image)}});
  return 0;
}

int cmd_slice(const RunConfig& cfg) {
  Milef m = milef_from_json(load_json_file(cfg.inputs[0]));
  Rational delta = parse_rational(cfg.delta_text);
  Caps caps = cfg.caps;
  caps.v_max = cfg.v_max;
  SliceCertificate cert = slice_family(m.q(), m.sigma(), delta, caps);
  emit(cfg, to_json(cert));
  return 0;
}

int cmd_lef(const RunConfig& cfg) {
  Milef m = milef_from_json(load_json_file(cfg.inputs[0]));
  Rational delta = parse_rational(cfg.delta_text);
  LefResult result = milef_to_lef(m, delta, cfg.caps);
  emit(cfg, Json{{"lef", to_json(result.lef)},
                 {"proj", to_json(result.proj)},
                 {"report", to_json(result.report)}});
  return 0;
}

int cmd_rdist(const RunConfig& cfg) {
  VPolytope a = vpolytope_from_json(load_json_file(cfg.inputs[0]));
  VPolytope b = vpolytope_from_json(load_json_file(cfg.inputs[1]));
  ExtRational value = rdist(a, b, cfg.caps);
  std::cout << to_string(value) << "\n";
  if (!cfg.out_path.empty()) save_json_file(cfg.out_path, Json{{"rdist", to_json(value)}});
  return 0;
}

int cmd_gap(const RunConfig& cfg, bool use_max) {
  VPolytope a = vpolytope_from_json(load_json_file(cfg.inputs[0]));
  VPolytope b = vpolytope_from_json(load_json_file(cfg.inputs[1]));
  GapResult result = use_max ? lp_gap_max(a, b, cfg.caps) : lp_gap_min(a, b, cfg.caps);
  std::cout << to_string(result.value) << "\n";
  if (!cfg.out_path.empty()) save_json_file(cfg.out_path, to_json(result));
  return 0;
}

int cmd_width(const RunConfig& cfg) {
  HPolyhedron b = hpolyhedron_from_json(load_json_file(cfg.inputs[0]));
  WidthCertificate cert = lattice_width(b, cfg.v_max, cfg.caps);
  emit(cfg, to_json(cert));
  return 0;
}

int cmd_bimod(const RunConfig& cfg) {
  QMatrix m = qmatrix_from_json(load_json_file(cfg.inputs[0]));
  BimodularityReport report = bimodularity_check(m, cfg.caps);
  emit(cfg, to_json(report));
  return report.is_bimodular ? 0 : 2;
}

}  // namespace

int milef_cli_main(int argc, const char* const* argv) {
  CLI::App app{"Exact rational toolkit for mixed-integer extended formulations"};
  app.require_subcommand(1);

  RunConfig cfg;
  apply_env_caps(cfg.caps);
  app.add_option("--seed", cfg.seed, "Seed echoed into reports (reserved for randomized runs)");

  std::string family;
  int n = 4;
  bool gap_max = false, gap_min = false;

  auto* gen = app.add_subcommand("gen", "Generate a formulation bundle");
  gen->add_option("--family", family, "matching|vjoin|cut|oddcut|oddcut-dominant|tsp")
      ->required();
  gen->add_option("--n", n, "Number of vertices")->required();
  gen->add_option("--out", cfg.out_path, "Output bundle path")->required();

  auto* verify = app.add_subcommand("verify", "Verify a bundle against its oracle");
  verify->add_option("bundle", cfg.inputs, "Bundle JSON")->required()->expected(1);
  verify->add_option("--out", cfg.out_path, "Report path");

  auto* mihull = app.add_subcommand("mihull", "Mixed-integer hull of a formulation");
  mihull->add_option("milef", cfg.inputs, "Milef JSON")->required()->expected(1);
  mihull->add_option("--out", cfg.out_path, "Output path");

  auto* slice = app.add_subcommand("slice", "Slicing family for (Q, sigma)");
  slice->add_option("milef", cfg.inputs, "Milef JSON")->required()->expected(1);
  slice->add_option("--delta", cfg.delta_text, "Target relative distance, exact rational")
      ->required();
  slice->add_option("--v-max", cfg.v_max, "Direction search box radius");
  slice->add_option("--out", cfg.out_path, "Output path");

  auto* lef = app.add_subcommand("lef", "Approximate linear extended formulation");
  lef->add_option("milef", cfg.inputs, "Milef JSON")->required()->expected(1);
  lef->add_option("--delta", cfg.delta_text, "Target relative distance, exact rational")
      ->required();
  lef->add_option("--out", cfg.out_path, "Output path");

  auto* rdist_cmd = app.add_subcommand("rdist", "Relative distance between nested polytopes");
  rdist_cmd->add_option("sets", cfg.inputs, "A.json B.json")->required()->expected(2);
  rdist_cmd->add_option("--out", cfg.out_path, "Output path");

  auto* gap = app.add_subcommand("gap", "LP gap between nested polytopes");
  gap->add_option("sets", cfg.inputs, "A.json B.json")->required()->expected(2);
  gap->add_flag("--max", gap_max, "Maximization gap");
  gap->add_flag("--min", gap_min, "Minimization gap");
  gap->add_option("--out", cfg.out_path, "Output path");

  auto* width = app.add_subcommand("width", "Lattice width certificate");
  width->add_option("body", cfg.inputs, "HPolyhedron JSON")->required()->expected(1);
  width->add_option("--v-max", cfg.v_max, "Direction search box radius");
  width->add_option("--out", cfg.out_path, "Output path");

  auto* bimod = app.add_subcommand("bimod", "Bimodularity sweep of an integer matrix");
  bimod->add_option("matrix", cfg.inputs, "Matrix JSON (array of rows)")->required()->expected(1);
  bimod->add_option("--out", cfg.out_path, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, family, n);
    if (verify->parsed()) return cmd_verify(cfg);
    if (mihull->parsed()) return cmd_mihull(cfg);
    if (slice->parsed()) return cmd_slice(cfg);
    if (lef->parsed()) return cmd_lef(cfg);
    if (rdist_cmd->parsed()) return cmd_rdist(cfg);
    if (gap->parsed()) {
      if (gap_max == gap_min) throw milef::ContractError("gap: pass exactly one of --max/--min");
      return cmd_gap(cfg, gap_max);
    }
    if (width->parsed()) return cmd_width(cfg);
    if (bimod->parsed()) return cmd_bimod(cfg);
  } catch (const milef::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const milef::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const milef::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
