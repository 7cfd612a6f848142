#pragma once

#include <string>
#include <vector>

#include "rgme/io.hpp"

namespace rgme {

/// Parameter-grid descriptor driving CSV reproduction of the figure data.
struct SweepGrid {
  struct Axis {
    std::string name;
    Real start = 0;
    Real stop = 0;
    int count = 0;
  };
  FamilyTag family = FamilyTag::Example1;
  std::vector<Axis> axes;                 // first axis slowest
  std::map<std::string, Real> fixed;
  std::vector<std::string> measures;
};

/// Parse "alpha=0:1:101,gamma=0.5:1:21" into sweep axes.
std::vector<SweepGrid::Axis> parse_grid_spec(const std::string& spec);

/// Evaluate one named measure on a family instance. Numeric measures take the
/// search configuration; closed-form ones ignore it.
MeasureReport evaluate_measure(const std::string& name, const StateFamily& family,
                               const SearchConfig& cfg);

/// Names accepted by evaluate_measure.
std::vector<std::string> measure_names();

/// Run the sweep and render CSV text: axis columns then one column per
/// measure, "%.12g" formatting, LF line endings, rows in row-major axis order.
std::string run_sweep(const SweepGrid& grid, const SearchConfig& cfg);

}  // namespace rgme
