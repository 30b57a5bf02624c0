#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "casimir/scan.hpp"

namespace casimir {

/// Everything a run needs, as assembled from a config file and/or CLI flags.
struct RunSetup {
  MaterialDatabase materials;

  std::string material_name = "Au";
  PermittivityModel model;
  double separation_m = 1e-6;
  double thickness_m = 1e-6;
  double t1_k = 300.0;
  double t2_k = 500.0;

  double pressure_rel_tol = 1e-6;
  double find_zero_tol_d = 0.05e-9;

  // scan section (optional)
  std::optional<ScanAxis> scan_axis;
  std::vector<double> scan_grid;
  std::vector<ScanVariant> scan_variants;
  std::vector<OutputField> scan_outputs;

  std::string output_file;
  int workers = 1;

  SystemConfig make_config() const;
  ScanRequest make_scan_request() const;
};

/// Length with unit suffix: "20nm", "0.5um", "1e-6m". Bare numbers are
/// rejected to avoid silent unit bugs.
double parse_length(const std::string& text);

/// "lo:hi:n" (linear, inclusive) or a comma list of lengths.
std::vector<double> parse_grid(const std::string& text);

/// Flat INI-style config file; later keys win. CLI flags are applied on top
/// by the caller. Throws ConfigError on anything unparseable.
void load_config_file(std::istream& is, RunSetup& setup);
void load_config_file(const std::string& path, RunSetup& setup);

}  // namespace casimir
