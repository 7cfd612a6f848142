#include "rgme/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rgme {
namespace io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw StructuralError("invalid JSON input");
  return j;
}

StateFamily family_from(const json& j) {
  if (!j.contains("family")) throw StructuralError("missing \"family\" key");
  StateFamily family;
  family.tag = family_tag_from_name(j.at("family").get<std::string>());
  if (j.contains("params")) {
    for (const auto& [key, value] : j.at("params").items())
      family.params[key] = value.get<Real>();
  }
  return family;
}

json family_json(const StateFamily& family) {
  json j;
  j["family"] = family_tag_name(family.tag);
  j["params"] = json::object();
  for (const auto& [key, value] : family.params) j["params"][key] = value;
  return j;
}

json complex_entry(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw StructuralError("complex entries must be [re, im] pairs");
  return Complex(j[0].get<Real>(), j[1].get<Real>());
}

}  // namespace

DensityMatrix state_from_json(const std::string& text) {
  json j = parse(text);
  if (j.contains("family")) return families::make_state(family_from(j));
  if (!j.contains("dims") || !j.contains("entries"))
    throw StructuralError("state JSON needs either \"family\" or \"dims\"+\"entries\"");
  Dims dims;
  for (const auto& d : j.at("dims")) dims.push_back(d.get<Index>());
  const Index n = dims_product(dims);
  const auto& entries = j.at("entries");
  if (static_cast<Index>(entries.size()) != n * n)
    throw StructuralError("entry count does not match dims product squared");
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) m(i, k) = complex_from(entries[i * n + k]);
  return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix load_state(const std::string& path) {
  return state_from_json(read_file(path));
}

std::string state_to_json(const DensityMatrix& rho) {
  json j;
  j["dims"] = rho.dims();
  json entries = json::array();
  for (Index i = 0; i < rho.dim(); ++i)
    for (Index k = 0; k < rho.dim(); ++k)
      entries.push_back(complex_entry(rho.matrix()(i, k)));
  j["entries"] = std::move(entries);
  return j.dump();
}

StateFamily family_from_json(const std::string& text) {
  return family_from(parse(text));
}

std::string family_to_json(const StateFamily& family) {
  return family_json(family).dump();
}

std::string ensemble_to_json(const ProductEnsemble& ensemble) {
  json j;
  j["dims"] = ensemble.dims;
  json weights = json::array();
  json factors = json::array();
  for (const auto& term : ensemble.terms) {
    weights.push_back(term.weight);
    json site_list = json::array();
    for (const Vector& f : term.factors) {
      json amps = json::array();
      for (Index i = 0; i < f.size(); ++i) amps.push_back(complex_entry(f[i]));
      site_list.push_back(std::move(amps));
    }
    factors.push_back(std::move(site_list));
  }
  j["weights"] = std::move(weights);
  j["factors"] = std::move(factors);
  return j.dump();
}

ProductEnsemble ensemble_from_json(const std::string& text) {
  json j = parse(text);
  ProductEnsemble ensemble;
  for (const auto& d : j.at("dims")) ensemble.dims.push_back(d.get<Index>());
  const auto& weights = j.at("weights");
  const auto& factors = j.at("factors");
  if (weights.size() != factors.size())
    throw StructuralError("ensemble JSON: weights/factors length mismatch");
  for (std::size_t t = 0; t < weights.size(); ++t) {
    ProductEnsemble::Term term;
    term.weight = weights[t].get<Real>();
    for (const auto& site : factors[t]) {
      Vector f(site.size());
      for (std::size_t i = 0; i < site.size(); ++i)
        f[static_cast<Index>(i)] = complex_from(site[i]);
      term.factors.push_back(std::move(f));
    }
    ensemble.terms.push_back(std::move(term));
  }
  ensemble.validate();
  return ensemble;
}

namespace {

json report_json(const MeasureReport& report) {
  json j;
  j["measure"] = report.measure;
  j["value"] = report.value;
  if (report.family) j["family"] = family_json(*report.family);
  if (!report.diagnostics.empty()) {
    json diag = json::object();
    for (const auto& [key, value] : report.diagnostics) diag[key] = value;
    j["diagnostics"] = std::move(diag);
  }
  if (report.witness_state)
    j["witness"] = json::parse(state_to_json(*report.witness_state));
  if (report.witness_pure) {
    json amps = json::array();
    for (Index i = 0; i < report.witness_pure->dim(); ++i)
      amps.push_back(complex_entry(report.witness_pure->amplitudes()[i]));
    j["witness_pure"] = {{"dims", report.witness_pure->dims()},
                         {"amplitudes", std::move(amps)}};
  }
  return j;
}

}  // namespace

std::string report_to_json(const MeasureReport& report) {
  return report_json(report).dump(2);
}

std::string reports_to_json(const std::vector<MeasureReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

std::string claims_to_json(const std::vector<verify::ClaimResult>& claims) {
  json arr = json::array();
  for (const auto& c : claims) {
    json j;
    j["claim_id"] = c.claim_id;
    j["instance"] = c.instance;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["margin"] = c.margin;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    j["skipped"] = c.skipped;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

CliConfig config_from_json(const std::string& text) {
  json j = parse(text);
  CliConfig cfg;
  if (j.contains("search")) {
    const json& s = j.at("search");
    if (s.contains("term_count")) cfg.search.term_count = s.at("term_count").get<int>();
    if (s.contains("starts")) cfg.search.starts = s.at("starts").get<int>();
    if (s.contains("max_iters")) cfg.search.max_iters = s.at("max_iters").get<int>();
    if (s.contains("als_sweeps")) cfg.search.als_sweeps = s.at("als_sweeps").get<int>();
    if (s.contains("f_tol")) cfg.search.f_tol = s.at("f_tol").get<Real>();
    if (s.contains("stall_iters")) cfg.search.stall_iters = s.at("stall_iters").get<int>();
    if (s.contains("stationarity_tol"))
      cfg.search.stationarity_tol = s.at("stationarity_tol").get<Real>();
    if (s.contains("seed")) cfg.search.seed = s.at("seed").get<std::uint64_t>();
    if (s.contains("threads")) cfg.search.threads = s.at("threads").get<int>();
  }
  if (j.contains("grid_points")) cfg.grid_points = j.at("grid_points").get<int>();
  if (j.contains("probes")) cfg.probes = j.at("probes").get<int>();
  if (cfg.search.starts <= 0 || cfg.search.max_iters <= 0 || cfg.search.f_tol <= 0)
    throw StructuralError("config: counts and tolerances must be positive");
  return cfg;
}

CliConfig load_config(const std::string& path) {
  return config_from_json(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write file: " + path);
  out << contents;
}

}  // namespace io
}  // namespace rgme
