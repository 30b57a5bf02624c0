#include "casimir/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw ConfigError("");
    return v;
  } catch (...) {
    throw ConfigError("cannot parse " + what + " from '" + text + "'");
  }
}

}  // namespace

double parse_length(const std::string& raw) {
  const std::string text = trim(raw);
  auto with_suffix = [&](const char* suffix, double factor, double* out) {
    const size_t n = std::string(suffix).size();
    if (text.size() > n && text.compare(text.size() - n, n, suffix) == 0) {
      *out = parse_double(text.substr(0, text.size() - n), "length") * factor;
      return true;
    }
    return false;
  };
  double v;
  if (with_suffix("nm", 1e-9, &v)) return v;
  if (with_suffix("um", 1e-6, &v)) return v;
  if (with_suffix("mm", 1e-3, &v)) return v;
  if (with_suffix("m", 1.0, &v)) return v;
  throw ConfigError("length '" + text + "' needs an explicit unit suffix (nm, um, mm, m)");
}

std::vector<double> parse_grid(const std::string& raw) {
  const std::string text = trim(raw);
  std::vector<double> grid;
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() == 3) {
    const double lo = parse_length(parts[0]);
    const double hi = parse_length(parts[1]);
    const long n = static_cast<long>(parse_double(parts[2], "grid count"));
    if (n < 1) throw ConfigError("grid count must be >= 1");
    if (n == 1) return {lo};
    for (long i = 0; i < n; ++i)
      grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return grid;
  }
  for (const std::string& item : split(text, ',')) {
    if (!item.empty()) grid.push_back(parse_length(item));
  }
  if (grid.empty()) throw ConfigError("empty scan grid '" + text + "'");
  return grid;
}

namespace {

ScanVariant parse_variant_spec(const std::string& raw) {
  // "label: model=plasma material=Ti d=20nm a=0.5um t1=300 t2=500"
  // or just a bare model name used as the label.
  ScanVariant v;
  const size_t colon = raw.find(':');
  std::string body;
  if (colon == std::string::npos) {
    v.label = trim(raw);
    v.model = PermittivityModel::parse(v.label);
    return v;
  }
  // a colon may also belong to drude-fixed:<T> with no overrides
  if (raw.find('=') == std::string::npos) {
    v.label = trim(raw);
    v.model = PermittivityModel::parse(v.label);
    return v;
  }
  v.label = trim(raw.substr(0, colon));
  body = trim(raw.substr(colon + 1));
  std::stringstream ss(body);
  std::string tok;
  while (ss >> tok) {
    const size_t eq = tok.find('=');
    if (eq == std::string::npos) throw ConfigError("bad variant item '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "model")
      v.model = PermittivityModel::parse(val);
    else if (key == "material")
      v.material = val;
    else if (key == "d")
      v.thickness_m = parse_length(val);
    else if (key == "a")
      v.separation_m = parse_length(val);
    else if (key == "t1")
      v.t1_k = parse_double(val, "t1");
    else if (key == "t2")
      v.t2_k = parse_double(val, "t2");
    else
      throw ConfigError("unknown variant key '" + key + "'");
  }
  return v;
}

// "[material:Name]" section body accumulates into this staging struct.
struct MaterialStaging {
  MaterialParams params;
  bool any = false;
};

double parse_gamma_mev(const std::string& raw) {
  std::string text = trim(raw);
  if (text.size() > 3 && text.compare(text.size() - 3, 3, "meV") == 0)
    return parse_double(text.substr(0, text.size() - 3), "gamma") * 1e-3;
  if (text.size() > 2 && text.compare(text.size() - 2, 2, "eV") == 0)
    return parse_double(text.substr(0, text.size() - 2), "gamma");
  // bare numbers are meV, the unit Table-style entries are quoted in
  return parse_double(text, "gamma") * 1e-3;
}

}  // namespace

SystemConfig RunSetup::make_config() const {
  SystemConfig cfg;
  const MaterialParams& m = materials.find(material_name);
  cfg.plate_upper.material = m;
  cfg.plate_lower.material = m;
  cfg.plate_upper.model = model;
  cfg.plate_lower.model = model;
  cfg.plate_upper.thickness_m = thickness_m;
  cfg.plate_lower.thickness_m = thickness_m;
  cfg.plate_upper.temperature_k = t1_k;
  cfg.plate_lower.temperature_k = t2_k;
  cfg.separation_m = separation_m;
  cfg.validate();
  return cfg;
}

ScanRequest RunSetup::make_scan_request() const {
  ScanRequest req;
  req.base = make_config();
  if (!scan_axis) throw ConfigError("no [scan] section configured");
  req.axis = *scan_axis;
  req.grid = scan_grid;
  req.variants = scan_variants;
  if (req.variants.empty()) {
    ScanVariant v;
    v.label = model.label();
    v.model = model;
    req.variants.push_back(v);
  }
  req.outputs = scan_outputs;
  if (req.outputs.empty()) req.outputs = {OutputField::PNeq};
  req.validate();
  return req;
}

void load_config_file(std::istream& is, RunSetup& setup) {
  std::string line;
  std::string section = "";
  MaterialStaging staging;
  int lineno = 0;

  auto flush_material = [&]() {
    if (staging.any) {
      setup.materials.add(staging.params);
      staging = MaterialStaging{};
    }
  };

  while (std::getline(is, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[' && line.back() == ']') {
      flush_material();
      section = trim(line.substr(1, line.size() - 2));
      if (section.rfind("material:", 0) == 0) {
        staging.params.name = trim(section.substr(9));
        staging.any = true;
      }
      continue;
    }

    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (section.rfind("material:", 0) == 0) {
      if (key == "plasma_ev")
        staging.params.plasma_energy_ev = parse_double(val, "plasma_ev");
      else if (key == "gamma") {
        // comma list of "T:gamma" pairs, gamma in meV unless suffixed
        for (const std::string& pair : split(val, ',')) {
          const std::vector<std::string> tg = split(pair, ':');
          if (tg.size() != 2) throw ConfigError("bad gamma entry '" + pair + "'");
          staging.params.gamma_table.push_back(
              {parse_double(tg[0], "gamma temperature"), parse_gamma_mev(tg[1])});
        }
      } else
        throw ConfigError("unknown material key '" + key + "'");
      continue;
    }

    if (section == "plates") {
      if (key == "material")
        setup.material_name = val;
      else if (key == "model")
        setup.model = PermittivityModel::parse(val);
      else if (key == "d")
        setup.thickness_m = parse_length(val);
      else if (key == "t1")
        setup.t1_k = parse_double(val, "t1");
      else if (key == "t2")
        setup.t2_k = parse_double(val, "t2");
      else
        throw ConfigError("unknown [plates] key '" + key + "'");
    } else if (section == "geometry") {
      if (key == "a")
        setup.separation_m = parse_length(val);
      else
        throw ConfigError("unknown [geometry] key '" + key + "'");
    } else if (section == "tolerances") {
      if (key == "pressure")
        setup.pressure_rel_tol = parse_double(val, "pressure tolerance");
      else if (key == "find_zero_d")
        setup.find_zero_tol_d = parse_length(val);
      else
        throw ConfigError("unknown [tolerances] key '" + key + "'");
    } else if (section == "scan") {
      if (key == "axis") {
        if (val == "separation")
          setup.scan_axis = ScanAxis::Separation;
        else if (val == "thickness")
          setup.scan_axis = ScanAxis::Thickness;
        else
          throw ConfigError("scan axis must be 'separation' or 'thickness'");
      } else if (key == "grid") {
        setup.scan_grid = parse_grid(val);
      } else if (key == "models") {
        for (const std::string& name : split(val, ',')) {
          ScanVariant v;
          v.label = name;
          v.model = PermittivityModel::parse(name);
          setup.scan_variants.push_back(v);
        }
      } else if (key == "variant") {
        setup.scan_variants.push_back(parse_variant_spec(val));
      } else if (key == "outputs") {
        for (const std::string& name : split(val, ','))
          setup.scan_outputs.push_back(parse_output_field(name));
      } else {
        throw ConfigError("unknown [scan] key '" + key + "'");
      }
    } else if (section == "output") {
      if (key == "file")
        setup.output_file = val;
      else if (key == "workers")
        setup.workers = static_cast<int>(parse_double(val, "workers"));
      else
        throw ConfigError("unknown [output] key '" + key + "'");
    } else {
      throw ConfigError("unknown config section '" + section + "'");
    }
  }
  flush_material();
}

void load_config_file(const std::string& path, RunSetup& setup) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  load_config_file(f, setup);
}

}  // namespace casimir
