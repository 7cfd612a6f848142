#include "rgme/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "rgme/closed_forms.hpp"

namespace rgme {
namespace {

std::string format_g12(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool is_pure(const DensityMatrix& rho, Vector& out) {
  EigResult eig = eig_hermitian(rho.matrix());
  Index top = eig.values.size() - 1;
  if (eig.values[top] < 1 - 1e-10) return false;
  out = eig.vectors.col(top);
  return true;
}

}  // namespace

std::vector<SweepGrid::Axis> parse_grid_spec(const std::string& spec) {
  std::vector<SweepGrid::Axis> axes;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    std::string part = spec.substr(pos, end - pos);
    pos = end + 1;
    if (part.empty()) continue;
    std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw StructuralError("grid spec: expected name=start:stop:count in '" +
                            part + "'");
    SweepGrid::Axis axis;
    axis.name = part.substr(0, eq);
    std::string range = part.substr(eq + 1);
    std::size_t c1 = range.find(':');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                             : range.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw StructuralError("grid spec: range must be start:stop:count in '" +
                            part + "'");
    try {
      axis.start = std::stod(range.substr(0, c1));
      axis.stop = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
      axis.count = std::stoi(range.substr(c2 + 1));
    } catch (const std::exception&) {
      throw StructuralError("grid spec: cannot parse range in '" + part + "'");
    }
    if (axis.count < 2)
      throw StructuralError("grid spec: axis count must be >= 2");
    axes.push_back(std::move(axis));
  }
  if (axes.empty()) throw StructuralError("grid spec: no axes given");
  return axes;
}

std::vector<std::string> measure_names() {
  return {"rgme_closed", "rgme_numeric", "re_closed",   "gme_closed",
          "gme",         "concurrence",  "negativity",  "negativity_closed",
          "entropy",     "eof",          "iconcurrence"};
}

MeasureReport evaluate_measure(const std::string& name, const StateFamily& family,
                               const SearchConfig& cfg) {
  // Constructing the state validates the parameter domain for every measure,
  // including the closed-form ones.
  DensityMatrix rho = families::make_state(family);
  MeasureReport report;
  report.measure = name;
  report.family = family;
  if (name == "rgme_closed") return rgme_closed(family);
  if (name == "rgme_numeric") return rgme_numeric(rho, cfg);
  if (name == "re_closed") {
    report.value = re_closed(family);
    return report;
  }
  if (name == "gme_closed") {
    report.value = gme_closed(family);
    return report;
  }
  if (name == "gme") {
    Vector amps;
    if (is_pure(rho, amps)) {
      GmeOptions opts;
      opts.seed = cfg.seed;
      MeasureReport inner = gme_pure(PureState(amps / amps.norm(), rho.dims()), opts);
      inner.family = family;
      return inner;
    }
    if (rho.dims() == Dims{2, 2}) {
      report.value = gme_two_qubit(rho);
      return report;
    }
    throw StructuralError(
        "gme: only pure states and 2x2 mixed states are supported; use "
        "rgme_numeric for general mixed states");
  }
  if (name == "concurrence") {
    report.value = concurrence(rho);
    return report;
  }
  if (name == "negativity") {
    report.value = negativity(rho, rho.dims().size() - 1);
    return report;
  }
  if (name == "negativity_closed") {
    report.value = negativity_closed(family);
    return report;
  }
  if (name == "entropy") {
    report.value = von_neumann_entropy(rho);
    return report;
  }
  if (name == "eof") {
    if (family.tag != FamilyTag::Isotropic)
      throw StructuralError("eof: closed form available for isotropic only");
    report.value = eof_isotropic(family.iparam("d"), family.param("alpha"));
    return report;
  }
  if (name == "iconcurrence") {
    if (family.tag != FamilyTag::Isotropic)
      throw StructuralError("iconcurrence: closed form available for isotropic only");
    report.value = iconcurrence_isotropic(family.iparam("d"), family.param("alpha"));
    return report;
  }
  throw StructuralError("unknown measure: " + name);
}

std::string run_sweep(const SweepGrid& grid, const SearchConfig& cfg) {
  if (grid.axes.empty()) throw StructuralError("sweep: no axes");
  if (grid.measures.empty()) throw StructuralError("sweep: no measures");

  std::string csv;
  for (std::size_t a = 0; a < grid.axes.size(); ++a) {
    if (a) csv += ",";
    csv += grid.axes[a].name;
  }
  for (const auto& m : grid.measures) csv += "," + m;
  csv += "\n";

  std::size_t total = 1;
  for (const auto& axis : grid.axes) total *= axis.count;

  std::vector<Real> values(grid.axes.size());
  for (std::size_t row = 0; row < total; ++row) {
    std::size_t rem = row;
    for (std::size_t a = grid.axes.size(); a-- > 0;) {
      const auto& axis = grid.axes[a];
      std::size_t i = rem % axis.count;
      rem /= axis.count;
      values[a] = axis.count == 1
                      ? axis.start
                      : axis.start + (axis.stop - axis.start) *
                                         static_cast<Real>(i) /
                                         static_cast<Real>(axis.count - 1);
    }
    StateFamily family;
    family.tag = grid.family;
    family.params = grid.fixed;
    for (std::size_t a = 0; a < grid.axes.size(); ++a)
      family.params[grid.axes[a].name] = values[a];

    for (std::size_t a = 0; a < grid.axes.size(); ++a) {
      if (a) csv += ",";
      csv += format_g12(values[a]);
    }
    for (const auto& m : grid.measures)
      csv += "," + format_g12(evaluate_measure(m, family, cfg).value);
    csv += "\n";
  }
  return csv;
}

}  // namespace rgme
