#include "casimir/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "casimir/errors.hpp"

namespace casimir {

OutputField parse_output_field(const std::string& name) {
  if (name == "p_neq") return OutputField::PNeq;
  if (name == "p_eq_tilde") return OutputField::PEqTilde;
  if (name == "delta_p_neq") return OutputField::DeltaPNeq;
  if (name == "delta_prop") return OutputField::DeltaProp;
  if (name == "delta_evan") return OutputField::DeltaEvan;
  if (name == "p_eq_mean") return OutputField::PEqMean;
  if (name == "delta_eq_rel") return OutputField::DeltaEqRel;
  if (name == "blackbody_offset") return OutputField::BlackbodyOffset;
  if (name == "p_ideal") return OutputField::PIdeal;
  if (name == "ratio_delta_over_total") return OutputField::RatioDeltaOverTotal;
  if (name == "p_neq_upper") return OutputField::PNeqUpper;
  if (name == "p_neq_upa") return OutputField::PNeqMicroPa;
  if (name == "p_neq_over_p0") return OutputField::PNeqOverP0;
  throw ConfigError("unknown output field '" + name + "'");
}

std::string output_field_name(OutputField field) {
  switch (field) {
    case OutputField::PNeq: return "p_neq";
    case OutputField::PEqTilde: return "p_eq_tilde";
    case OutputField::DeltaPNeq: return "delta_p_neq";
    case OutputField::DeltaProp: return "delta_prop";
    case OutputField::DeltaEvan: return "delta_evan";
    case OutputField::PEqMean: return "p_eq_mean";
    case OutputField::DeltaEqRel: return "delta_eq_rel";
    case OutputField::BlackbodyOffset: return "blackbody_offset";
    case OutputField::PIdeal: return "p_ideal";
    case OutputField::RatioDeltaOverTotal: return "ratio_delta_over_total";
    case OutputField::PNeqUpper: return "p_neq_upper";
    case OutputField::PNeqMicroPa: return "p_neq_upa";
    case OutputField::PNeqOverP0: return "p_neq_over_p0";
  }
  return "?";
}

double extract_field(const PressureBreakdown& b, OutputField field) {
  switch (field) {
    case OutputField::PNeq: return b.p_neq;
    case OutputField::PEqTilde: return b.p_eq_tilde;
    case OutputField::DeltaPNeq: return b.delta_p_neq;
    case OutputField::DeltaProp: return b.delta_prop;
    case OutputField::DeltaEvan: return b.delta_evan;
    case OutputField::PEqMean: return b.p_eq_mean;
    case OutputField::DeltaEqRel: return b.delta_eq_rel;
    case OutputField::BlackbodyOffset: return b.blackbody_offset;
    case OutputField::PIdeal: return b.p_ideal;
    case OutputField::RatioDeltaOverTotal: return b.ratio_delta_over_total;
    case OutputField::PNeqUpper: return b.p_neq + b.blackbody_offset;
    case OutputField::PNeqMicroPa: return b.p_neq * 1e6;
    case OutputField::PNeqOverP0: return b.p_neq / b.p_ideal;
  }
  return 0.0;
}

void ScanRequest::validate() const {
  base.validate();
  if (grid.empty()) throw ConfigError("scan grid is empty");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw ConfigError("scan grid values must be > 0");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ConfigError("scan grid must be strictly increasing");
  }
  if (variants.empty()) throw ConfigError("scan needs at least one variant");
  if (outputs.empty()) throw ConfigError("scan needs at least one output field");
}

PressureBreakdown run_point(const SystemConfig& config, double rel_tol) {
  return pressure_neq(config, rel_tol);
}

namespace detail {

SystemConfig apply_variant(const SystemConfig& base, const ScanVariant& variant,
                           const MaterialDatabase& db) {
  SystemConfig cfg = base;
  if (variant.material) {
    const MaterialParams& m = db.find(*variant.material);
    cfg.plate_upper.material = m;
    cfg.plate_lower.material = m;
  }
  if (variant.model) {
    cfg.plate_upper.model = *variant.model;
    cfg.plate_lower.model = *variant.model;
  }
  if (variant.thickness_m) {
    cfg.plate_upper.thickness_m = *variant.thickness_m;
    cfg.plate_lower.thickness_m = *variant.thickness_m;
  }
  if (variant.separation_m) cfg.separation_m = *variant.separation_m;
  if (variant.t1_k) cfg.plate_upper.temperature_k = *variant.t1_k;
  if (variant.t2_k) cfg.plate_lower.temperature_k = *variant.t2_k;
  return cfg;
}

double bisect(const std::function<double(double)>& f, double f_lo, double f_hi, double lo,
              double hi, double tol) {
  if (!(f_lo * f_hi < 0.0)) throw NoZeroCrossing("no zero crossing in bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (f_lo * f_mid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

}  // namespace detail

double find_zero_thickness(const SystemConfig& config, double d_lo, double d_hi, double tol_d,
                           double rel_tol) {
  if (!(d_lo > 0.0) || !(d_hi > d_lo)) throw ConfigError("find_zero_thickness: bad bracket");
  if (!(tol_d > 0.0)) throw ConfigError("find_zero_thickness: tol_d must be > 0");
  auto f = [&](double d) {
    SystemConfig cfg = config;
    cfg.plate_upper.thickness_m = d;
    cfg.plate_lower.thickness_m = d;
    return delta_pneq(cfg, rel_tol).total();
  };
  return detail::bisect(f, f(d_lo), f(d_hi), d_lo, d_hi, tol_d);
}

ScanResult scan(const ScanRequest& request, const MaterialDatabase& db, double rel_tol,
                int workers) {
  request.validate();
  ScanResult result;
  for (const OutputField field : request.outputs)
    for (const ScanVariant& variant : request.variants)
      result.columns.push_back(output_field_name(field) + "@" + variant.label);

  const size_t n_points = request.grid.size();
  const size_t n_variants = request.variants.size();
  // one breakdown per (point, variant); rows assembled afterwards in grid order
  std::vector<PressureBreakdown> cells(n_points * n_variants);
  std::vector<std::string> errors(n_points * n_variants);

  auto evaluate = [&](size_t task) {
    const size_t ip = task / n_variants;
    const size_t iv = task % n_variants;
    try {
      SystemConfig cfg = detail::apply_variant(request.base, request.variants[iv], db);
      if (request.axis == ScanAxis::Separation) {
        cfg.separation_m = request.grid[ip];
      } else {
        cfg.plate_upper.thickness_m = request.grid[ip];
        cfg.plate_lower.thickness_m = request.grid[ip];
      }
      cells[task] = run_point(cfg, rel_tol);
    } catch (const std::exception& e) {
      errors[task] = e.what();
    }
  };

  const size_t n_tasks = n_points * n_variants;
  workers = std::max(1, workers);
  if (workers == 1) {
    for (size_t t = 0; t < n_tasks; ++t) evaluate(t);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    const int n_threads = std::min<size_t>(workers, n_tasks);
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) {
      pool.emplace_back([&] {
        for (size_t t = next.fetch_add(1); t < n_tasks; t = next.fetch_add(1)) evaluate(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const std::string& err : errors)
    if (!err.empty()) throw QuadratureError("scan point failed: " + err);

  result.records.reserve(n_points);
  for (size_t ip = 0; ip < n_points; ++ip) {
    ScanRecord rec;
    rec.axis_value = request.grid[ip];
    rec.values.reserve(result.columns.size());
    for (const OutputField field : request.outputs)
      for (size_t iv = 0; iv < n_variants; ++iv)
        rec.values.push_back(extract_field(cells[ip * n_variants + iv], field));
    result.records.push_back(std::move(rec));
  }
  return result;
}

void write_csv(std::ostream& os, const ScanResult& result,
               const std::vector<std::string>& metadata) {
  for (const std::string& line : metadata) os << "# " << line << "\n";
  os << "axis_value";
  for (const std::string& col : result.columns) os << "," << col;
  os << "\n";
  for (const ScanRecord& rec : result.records) {
    os << detail::format_significant(rec.axis_value, 12);
    for (double v : rec.values) os << "," << detail::format_significant(v, 12);
    os << "\n";
  }
}

ScanResult read_csv(std::istream& is) {
  ScanResult result;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    if (!have_header) {
      bool first = true;
      while (std::getline(ss, cell, ',')) {
        if (first) {
          if (cell != "axis_value") throw ConfigError("CSV header must start with axis_value");
          first = false;
        } else {
          result.columns.push_back(cell);
        }
      }
      have_header = true;
      continue;
    }
    ScanRecord rec;
    bool first = true;
    while (std::getline(ss, cell, ',')) {
      const double v = std::stod(cell);
      if (first) {
        rec.axis_value = v;
        first = false;
      } else {
        rec.values.push_back(v);
      }
    }
    if (rec.values.size() != result.columns.size())
      throw ConfigError("CSV row with missing cells");
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace casimir
