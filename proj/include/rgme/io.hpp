#pragma once

#include <string>
#include <vector>

#include "rgme/measures.hpp"
#include "rgme/sep_search.hpp"
#include "rgme/verify.hpp"

namespace rgme {
namespace io {

/// Raw state schema: {"dims": [..], "entries": [[re, im], ...]} row-major,
/// or a family reference {"family": tag, "params": {...}}.
DensityMatrix state_from_json(const std::string& text);
DensityMatrix load_state(const std::string& path);
std::string state_to_json(const DensityMatrix& rho);

StateFamily family_from_json(const std::string& text);
std::string family_to_json(const StateFamily& family);

/// Witness schema: {"dims": [...], "weights": [...], "factors": [[[re,im],..],..]}.
std::string ensemble_to_json(const ProductEnsemble& ensemble);
ProductEnsemble ensemble_from_json(const std::string& text);

std::string report_to_json(const MeasureReport& report);
std::string reports_to_json(const std::vector<MeasureReport>& reports);

std::string claims_to_json(const std::vector<verify::ClaimResult>& claims);

/// Config file: JSON object whose "search" section maps onto SearchConfig
/// and whose "grid_points"/"probes" keys set verification defaults.
struct CliConfig {
  SearchConfig search;
  int grid_points = 21;
  int probes = 200;
};
CliConfig config_from_json(const std::string& text);
CliConfig load_config(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace io
}  // namespace rgme
