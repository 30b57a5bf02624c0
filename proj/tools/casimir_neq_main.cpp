// casimir-neq: nonequilibrium Casimir pressure between two parallel metal
// plates held at different temperatures.
//
// Subcommands:
//   point       single-point evaluation, full breakdown
//   scan        separation or thickness sweep, CSV output
//   find-zero   thickness at which the proper nonequilibrium term vanishes
//   materials   list the material database

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "casimir/config.hpp"
#include "casimir/errors.hpp"
#include "casimir/nonequilibrium.hpp"
#include "casimir/scan.hpp"

namespace {

constexpr const char* kVersion = "casimir-neq 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonFlags {
  std::string config_file;
  std::string material;
  std::string model;
  std::string a, d, t1, t2;
  double tol = 0.0;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--config", flags->config_file, "config file (flags override file values)");
  cmd->add_option("--material", flags->material, "material name (Au, Ti, or config-defined)");
  cmd->add_option("--model", flags->model, "drude | drude-fixed:<T> | plasma");
  cmd->add_option("--a", flags->a, "separation, with unit suffix (e.g. 1um)");
  cmd->add_option("--d", flags->d, "plate thickness, with unit suffix (e.g. 20nm)");
  cmd->add_option("--t1", flags->t1, "upper plate / environment temperature, K");
  cmd->add_option("--t2", flags->t2, "lower plate temperature, K");
  cmd->add_option("--tol", flags->tol, "relative pressure tolerance (default 1e-6)");
}

casimir::RunSetup make_setup(const CommonFlags& flags) {
  casimir::RunSetup setup;
  if (!flags.config_file.empty()) casimir::load_config_file(flags.config_file, setup);
  if (!flags.material.empty()) setup.material_name = flags.material;
  if (!flags.model.empty()) setup.model = casimir::PermittivityModel::parse(flags.model);
  if (!flags.a.empty()) setup.separation_m = casimir::parse_length(flags.a);
  if (!flags.d.empty()) setup.thickness_m = casimir::parse_length(flags.d);
  if (!flags.t1.empty()) setup.t1_k = std::stod(flags.t1);
  if (!flags.t2.empty()) setup.t2_k = std::stod(flags.t2);
  if (flags.tol != 0.0) setup.pressure_rel_tol = flags.tol;
  return setup;
}

std::vector<std::string> config_metadata(const casimir::RunSetup& setup) {
  std::vector<std::string> md;
  md.push_back(kVersion);
  std::ostringstream os;
  os << "material=" << setup.material_name << " model=" << setup.model.label()
     << " a=" << setup.separation_m << "m d=" << setup.thickness_m << "m t1=" << setup.t1_k
     << "K t2=" << setup.t2_k << "K tol=" << setup.pressure_rel_tol;
  md.push_back(os.str());
  return md;
}

void print_breakdown(const casimir::PressureBreakdown& b) {
  auto row = [](const char* name, double v, const char* unit) {
    std::printf("%-24s % .12e %s\n", name, v, unit);
  };
  row("p_neq", b.p_neq, "Pa");
  row("p_eq_tilde", b.p_eq_tilde, "Pa");
  row("delta_p_neq", b.delta_p_neq, "Pa");
  row("delta_prop", b.delta_prop, "Pa");
  row("delta_evan", b.delta_evan, "Pa");
  row("p_eq_mean", b.p_eq_mean, "Pa");
  row("delta_eq_rel", b.delta_eq_rel, "");
  row("blackbody_offset", b.blackbody_offset, "Pa");
  row("p_neq_upper", b.p_neq + b.blackbody_offset, "Pa");
  row("p_ideal", b.p_ideal, "Pa");
  row("p_neq_over_p0", b.p_neq / b.p_ideal, "");
  row("ratio_delta_over_total", b.ratio_delta_over_total, "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonequilibrium Casimir pressure between parallel metal plates"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonFlags flags;
  std::string out_file;
  int workers = 0;

  CLI::App* point = app.add_subcommand("point", "evaluate a single configuration");
  add_common(point, &flags);
  point->add_option("--out", out_file, "also write a one-row CSV to this path");

  CLI::App* scan_cmd = app.add_subcommand("scan", "sweep separation or thickness");
  add_common(scan_cmd, &flags);
  scan_cmd->add_option("--out", out_file, "output CSV path (default from config, else stdout)");
  scan_cmd->add_option("--workers", workers, "concurrent grid evaluations");

  CLI::App* zero = app.add_subcommand("find-zero", "thickness where delta_p_neq vanishes");
  add_common(zero, &flags);
  std::string d_lo_s, d_hi_s, tol_d_s;
  zero->add_option("--d-lo", d_lo_s, "bracket lower thickness (e.g. 20nm)")->required();
  zero->add_option("--d-hi", d_hi_s, "bracket upper thickness (e.g. 30nm)")->required();
  zero->add_option("--tol-d", tol_d_s, "thickness tolerance (default 0.05nm)");

  CLI::App* materials = app.add_subcommand("materials", "material database");
  CLI::App* mat_list = materials->add_subcommand("list", "list known materials");
  std::string mat_config;
  mat_list->add_option("--config", mat_config, "config file with [material:...] sections");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (point->parsed()) {
      casimir::RunSetup setup = make_setup(flags);
      const casimir::SystemConfig cfg = setup.make_config();
      const casimir::PressureBreakdown b = casimir::run_point(cfg, setup.pressure_rel_tol);
      print_breakdown(b);
      if (!out_file.empty()) {
        casimir::ScanResult one;
        using casimir::OutputField;
        const OutputField fields[] = {
            OutputField::PNeq,      OutputField::PEqTilde,   OutputField::DeltaPNeq,
            OutputField::DeltaProp, OutputField::DeltaEvan,  OutputField::PEqMean,
            OutputField::DeltaEqRel, OutputField::BlackbodyOffset, OutputField::PIdeal,
            OutputField::RatioDeltaOverTotal, OutputField::PNeqUpper};
        casimir::ScanRecord rec;
        rec.axis_value = cfg.separation_m;
        for (OutputField f : fields) {
          one.columns.push_back(casimir::output_field_name(f) + "@" + setup.model.label());
          rec.values.push_back(casimir::extract_field(b, f));
        }
        one.records.push_back(rec);
        std::ofstream os(out_file);
        if (!os) throw casimir::ConfigError("cannot open output file '" + out_file + "'");
        casimir::write_csv(os, one, config_metadata(setup));
      }
    } else if (scan_cmd->parsed()) {
      casimir::RunSetup setup = make_setup(flags);
      if (workers > 0) setup.workers = workers;
      if (!out_file.empty()) setup.output_file = out_file;
      const casimir::ScanRequest req = setup.make_scan_request();
      const casimir::ScanResult res =
          casimir::scan(req, setup.materials, setup.pressure_rel_tol, setup.workers);
      if (setup.output_file.empty()) {
        casimir::write_csv(std::cout, res, config_metadata(setup));
      } else {
        std::ofstream os(setup.output_file);
        if (!os) throw casimir::ConfigError("cannot open output file '" + setup.output_file + "'");
        casimir::write_csv(os, res, config_metadata(setup));
        std::cerr << "wrote " << res.records.size() << " rows to " << setup.output_file << "\n";
      }
    } else if (zero->parsed()) {
      casimir::RunSetup setup = make_setup(flags);
      const double d_lo = casimir::parse_length(d_lo_s);
      const double d_hi = casimir::parse_length(d_hi_s);
      const double tol_d = tol_d_s.empty() ? setup.find_zero_tol_d : casimir::parse_length(tol_d_s);
      const casimir::SystemConfig cfg = setup.make_config();
      const double d_star =
          casimir::find_zero_thickness(cfg, d_lo, d_hi, tol_d, setup.pressure_rel_tol);
      std::printf("zero-crossing thickness: %.6g nm\n", d_star * 1e9);
    } else if (mat_list->parsed()) {
      casimir::RunSetup setup;
      if (!mat_config.empty()) casimir::load_config_file(mat_config, setup);
      for (const casimir::MaterialParams& m : setup.materials.entries()) {
        std::printf("%-8s plasma %.4g eV, gamma:", m.name.c_str(), m.plasma_energy_ev);
        for (const casimir::GammaEntry& g : m.gamma_table)
          std::printf(" %g meV @ %g K;", g.gamma_ev * 1e3, g.temperature_k);
        std::printf("\n");
      }
    } else {
      std::cerr << app.help() << "\n";
      return kExitConfig;
    }
  } catch (const casimir::NoZeroCrossing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const casimir::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const casimir::QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
