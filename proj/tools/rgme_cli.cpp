#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgme/closed_forms.hpp"
#include "rgme/io.hpp"
#include "rgme/sweep.hpp"

namespace {

using namespace rgme;

struct CommonArgs {
  std::string family;
  std::vector<std::string> params;
  std::string state_path;
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

std::map<std::string, Real> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, Real> params;
  for (const std::string& item : items) {
    std::size_t pos = 0;
    while (pos < item.size()) {
      std::size_t end = item.find(',', pos);
      if (end == std::string::npos) end = item.size();
      std::string kv = item.substr(pos, end - pos);
      pos = end + 1;
      if (kv.empty()) continue;
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos)
        throw StructuralError("--params expects k=v, got '" + kv + "'");
      try {
        params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw StructuralError("--params: cannot parse value in '" + kv + "'");
      }
    }
  }
  return params;
}

StateFamily family_from_args(const CommonArgs& args) {
  StateFamily family;
  family.tag = family_tag_from_name(args.family);
  family.params = parse_params(args.params);
  return family;
}

io::CliConfig load_effective_config(const CommonArgs& args) {
  io::CliConfig cfg;
  if (!args.config_path.empty()) cfg = io::load_config(args.config_path);
  if (args.seed_set) cfg.search.seed = args.seed;
  return cfg;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text << std::endl;
  else
    io::write_file(out_path, text);
}

int run_compute(const CommonArgs& args, const std::vector<std::string>& measures) {
  io::CliConfig cfg = load_effective_config(args);
  std::vector<MeasureReport> reports;
  if (!args.family.empty()) {
    StateFamily family = family_from_args(args);
    for (const std::string& m : measures)
      reports.push_back(evaluate_measure(m, family, cfg.search));
  } else if (!args.state_path.empty()) {
    DensityMatrix rho = io::load_state(args.state_path);
    for (const std::string& m : measures) {
      MeasureReport report;
      report.measure = m;
      if (m == "rgme_numeric") {
        report = rgme_numeric(rho, cfg.search);
      } else if (m == "negativity") {
        report.value = negativity(rho, rho.dims().size() - 1);
      } else if (m == "entropy") {
        report.value = von_neumann_entropy(rho);
      } else if (m == "concurrence") {
        report.value = concurrence(rho);
      } else if (m == "gme") {
        EigResult eig = eig_hermitian(rho.matrix());
        if (eig.values[eig.values.size() - 1] < 1 - 1e-10)
          throw StructuralError("gme: raw-state input must be pure");
        Vector top = eig.vectors.col(eig.values.size() - 1);
        GmeOptions opts;
        opts.seed = cfg.search.seed;
        report = gme_pure(PureState(top / top.norm(), rho.dims()), opts);
      } else {
        throw StructuralError("measure '" + m +
                              "' needs a --family state, not a raw state file");
      }
      reports.push_back(std::move(report));
    }
  } else {
    throw StructuralError("compute: provide --family or --state");
  }
  emit(args.out_path, io::reports_to_json(reports));
  return 0;
}

int run_sweep_cmd(const CommonArgs& args, const std::string& grid_spec,
                  const std::vector<std::string>& measures) {
  if (args.family.empty()) throw StructuralError("sweep: --family is required");
  io::CliConfig cfg = load_effective_config(args);
  SweepGrid grid;
  grid.family = family_tag_from_name(args.family);
  grid.axes = parse_grid_spec(grid_spec);
  grid.fixed = parse_params(args.params);
  grid.measures = measures;
  std::string csv = run_sweep(grid, cfg.search);
  emit(args.out_path, csv);
  return 0;
}

int run_verify(const CommonArgs& args, const std::string& suite, bool full) {
  io::CliConfig cfg = load_effective_config(args);
  verify::SuiteOptions opts;
  opts.seed = args.seed_set ? args.seed : 1;
  if (full) {
    opts.random_instances = 500;
    opts.prop4_instances = 500;
    opts.grid_points = cfg.grid_points;
    opts.probe_count = cfg.probes;
  }
  std::vector<verify::ClaimResult> claims = verify::run_suite(suite, opts);
  std::cout << verify::summary_table(claims);
  if (!args.out_path.empty()) io::write_file(args.out_path, io::claims_to_json(claims));
  return verify::all_pass(claims) ? 0 : 1;
}

int run_search(const CommonArgs& args) {
  io::CliConfig cfg = load_effective_config(args);
  DensityMatrix rho = !args.family.empty()
                          ? families::make_state(family_from_args(args))
                          : io::load_state(args.state_path);
  SearchResult result = max_fidelity_separable(rho, cfg.search);
  char line[128];
  std::snprintf(line, sizeof(line), "F_max = %.12g\nrgme  = %.12g\n", result.f_max,
                1 - result.f_max * result.f_max);
  std::cout << line;
  if (!args.out_path.empty())
    io::write_file(args.out_path, io::ensemble_to_json(result.witness));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement measures via closest separable states"};
  app.require_subcommand(1);

  CommonArgs args;
  std::vector<std::string> measures;
  std::string grid_spec;
  std::string suite = "all";
  bool full = false;

  auto add_common = [&](CLI::App* cmd, bool with_state) {
    cmd->add_option("--family", args.family, "State family tag");
    cmd->add_option("--params", args.params,
                    "Family parameters, comma-separated k=v pairs");
    if (with_state)
      cmd->add_option("--state", args.state_path, "Path to a state JSON file");
    cmd->add_option("--config", args.config_path, "JSON config file");
    cmd->add_option("--out", args.out_path, "Output path (default stdout)");
    cmd->add_option("--seed", args.seed, "Random seed")
        ->each([&](const std::string&) { args.seed_set = true; });
  };

  CLI::App* compute = app.add_subcommand("compute", "Evaluate measures on a state");
  add_common(compute, true);
  compute->add_option("--measures", measures, "Comma-separated measure names")
      ->delimiter(',')
      ->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  add_common(sweep, false);
  sweep->add_option("--grid", grid_spec, "Axes as name=start:stop:count,...")
      ->required();
  sweep->add_option("--measures", measures, "Comma-separated measure names")
      ->delimiter(',')
      ->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--suite", suite, "Suite selector (default: all)");
  verify_cmd->add_flag("--full", full, "Full-size instance counts");

  CLI::App* search = app.add_subcommand("search", "Maximize fidelity over separable states");
  add_common(search, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(args, measures);
    if (sweep->parsed()) return run_sweep_cmd(args, grid_spec, measures);
    if (verify_cmd->parsed()) return run_verify(args, suite, full);
    if (search->parsed()) return run_search(args);
  } catch (const rgme::StructuralError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const rgme::NotPsdError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const rgme::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
