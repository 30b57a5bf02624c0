#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casimir/nonequilibrium.hpp"

namespace casimir {

enum class ScanAxis { Separation, Thickness };

enum class OutputField {
  PNeq,
  PEqTilde,
  DeltaPNeq,
  DeltaProp,
  DeltaEvan,
  PEqMean,
  DeltaEqRel,
  BlackbodyOffset,
  PIdeal,
  RatioDeltaOverTotal,
  PNeqUpper,
  PNeqMicroPa,   // p_neq in micro-pascal
  PNeqOverP0,    // p_neq normalized to the ideal-metal pressure
};

OutputField parse_output_field(const std::string& name);
std::string output_field_name(OutputField field);
double extract_field(const PressureBreakdown& b, OutputField field);

/// One column group of a scan: a labelled set of overrides applied on top of
/// the base configuration. A plain model comparison uses the model name as
/// the label; figure fixtures additionally pin material/thickness/separation.
struct ScanVariant {
  std::string label;
  std::optional<PermittivityModel> model;
  std::optional<std::string> material;  // looked up in the database
  std::optional<double> thickness_m;
  std::optional<double> separation_m;
  std::optional<double> t1_k;
  std::optional<double> t2_k;
};

struct ScanRequest {
  SystemConfig base;
  ScanAxis axis = ScanAxis::Separation;
  std::vector<double> grid;  // strictly increasing, > 0, in meters
  std::vector<ScanVariant> variants;
  std::vector<OutputField> outputs;

  void validate() const;
};

struct ScanRecord {
  double axis_value = 0.0;
  std::vector<double> values;  // one per (output, variant), outputs major
};

struct ScanResult {
  std::vector<std::string> columns;  // "<field>@<variant>", without axis_value
  std::vector<ScanRecord> records;   // in grid order
};

/// Single-point evaluation (the CLI `point` subcommand).
PressureBreakdown run_point(const SystemConfig& config, double rel_tol = 1e-6);

/// Evaluates the grid; points may run concurrently up to `workers`, output
/// is assembled in grid order regardless.
ScanResult scan(const ScanRequest& request, const MaterialDatabase& db, double rel_tol = 1e-6,
                int workers = 1);

/// Bisection on the plate thickness until the bracket is narrower than
/// tol_d; returns the midpoint. Throws NoZeroCrossing when the proper
/// nonequilibrium term has the same sign at both ends.
double find_zero_thickness(const SystemConfig& config, double d_lo, double d_hi, double tol_d,
                           double rel_tol = 1e-6);

/// CSV emission: '#'-prefixed metadata lines, a header row
/// `axis_value,<field>@<variant>,...`, then one row per record with 12
/// significant digits, LF endings.
void write_csv(std::ostream& os, const ScanResult& result,
               const std::vector<std::string>& metadata);

/// Parses a file produced by write_csv (metadata lines are skipped).
ScanResult read_csv(std::istream& is);

namespace detail {

/// Plain bisection on [lo, hi]; f(lo) and f(hi) must have opposite signs.
double bisect(const std::function<double(double)>& f, double f_lo, double f_hi, double lo,
              double hi, double tol);

std::string format_significant(double value, int digits);

SystemConfig apply_variant(const SystemConfig& base, const ScanVariant& variant,
                           const MaterialDatabase& db);

}  // namespace detail

}  // namespace casimir
