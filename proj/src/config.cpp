#include <cstdio>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "mdrk/harness.hpp"

namespace mdrk {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw ConfigError("option " + key + ": expected a number, got '" + v + "'");
  return x;
}

long to_long(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long x = 0;
  try {
    x = std::stol(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw ConfigError("option " + key + ": expected an integer, got '" + v + "'");
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("option " + key + ": expected a boolean, got '" + v + "'");
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void set_option(RunConfig& cfg, const std::string& key_in, const std::string& value_in) {
  const std::string key = trim(key_in);
  const std::string v = trim(value_in);
  SchemeConfig& s = cfg.scheme;
  BlendingParameters& b = s.blend;
  if (key == "run.case") {
    find_case(v);
    cfg.case_id = v;
  } else if (key == "run.elements") {
    const long n = to_long(key, v);
    if (n < 0) throw ConfigError("run.elements must be >= 0");
    cfg.elements = static_cast<int>(n);
  } else if (key == "run.t_final") {
    cfg.t_final = to_double(key, v);
  } else if (key == "run.integrator") {
    if (v != "mdrk" && v != "rkfr") throw ConfigError("run.integrator must be mdrk or rkfr");
    cfg.integrator = v;
  } else if (key == "run.boundary_left") {
    if (!v.empty()) parse_boundary(v);
    cfg.boundary_left = v;
  } else if (key == "run.boundary_right") {
    if (!v.empty()) parse_boundary(v);
    cfg.boundary_right = v;
  } else if (key == "run.output_every") {
    const long n = to_long(key, v);
    if (n < 0) throw ConfigError("run.output_every must be >= 0");
    cfg.output_every = static_cast<int>(n);
  } else if (key == "run.output") {
    cfg.output = v;
  } else if (key == "run.diagnostics") {
    cfg.diagnostics = to_bool(key, v);
  } else if (key == "run.max_steps") {
    cfg.max_steps = to_long(key, v);
    if (cfg.max_steps < 1) throw ConfigError("run.max_steps must be positive");
  } else if (key == "scheme.degree") {
    const long n = to_long(key, v);
    if (n < 1 || n > 6) throw ConfigError("scheme.degree must lie in 1..6");
    s.degree = static_cast<int>(n);
  } else if (key == "scheme.points") {
    s.points = parse_point_kind(v);
  } else if (key == "scheme.correction") {
    s.correction = parse_correction_kind(v);
  } else if (key == "scheme.dissipation") {
    s.dissipation = parse_dissipation(v);
  } else if (key == "scheme.face") {
    s.face = parse_face_scheme(v);
  } else if (key == "scheme.limiter") {
    s.limiter = parse_limiter(v);
  } else if (key == "scheme.cfl") {
    s.cfl = to_double(key, v);
    if (s.cfl < 0.0) throw ConfigError("scheme.cfl must be positive (0 selects the default)");
  } else if (key == "scheme.cs") {
    s.cs = to_double(key, v);
    if (!(s.cs > 0.0 && s.cs <= 1.0)) throw ConfigError("scheme.cs must lie in (0, 1]");
  } else if (key == "blend.alpha_max") {
    b.alpha_max = to_double(key, v);
  } else if (key == "blend.alpha_min") {
    b.alpha_min = to_double(key, v);
  } else if (key == "blend.sharpness") {
    b.sharpness = to_double(key, v);
  } else if (key == "blend.threshold_factor") {
    b.threshold_factor = to_double(key, v);
  } else if (key == "blend.threshold_exponent") {
    b.threshold_exponent = to_double(key, v);
  } else if (key == "blend.smooth_neighbors") {
    b.smooth_neighbors = to_bool(key, v);
  } else if (key == "blend.positivity_fraction") {
    b.positivity_fraction = to_double(key, v);
    if (!(b.positivity_fraction > 0.0 && b.positivity_fraction < 1.0))
      throw ConfigError("blend.positivity_fraction must lie in (0, 1)");
  } else {
    throw ConfigError("unknown option '" + key + "'");
  }
  if (key.rfind("blend.alpha", 0) == 0 && !(b.alpha_min >= 0.0 && b.alpha_min < b.alpha_max && b.alpha_max <= 1.0))
    throw ConfigError("blending needs 0 <= alpha_min < alpha_max <= 1");
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("override '" + assignment + "' is not of the form key=value");
  set_option(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

RunConfig load_config(const std::string& path, RunConfig base) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("cannot read config " + path + ": " + e.message() + " (line " + std::to_string(e.line()) +
                      ")");
  }
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config " + path + ": option '" + section + "' outside a section");
    for (const auto& [name, value] : body) set_option(base, section + "." + name, value.data());
  }
  return base;
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg) {
  const CaseSpec& cs = find_case(cfg.case_id);
  const SchemeConfig& s = cfg.scheme;
  const BlendingParameters& b = s.blend;
  const double cfl = resolved_cfl(cfg);
  return {
      {"run.case", cfg.case_id},
      {"run.elements", std::to_string(cfg.elements > 0 ? cfg.elements : cs.elements)},
      {"run.t_final", num(cfg.t_final >= 0.0 ? cfg.t_final : cs.t_final)},
      {"run.integrator", cfg.integrator},
      {"run.boundary_left", cfg.boundary_left.empty() ? to_string(cs.left) : cfg.boundary_left},
      {"run.boundary_right", cfg.boundary_right.empty() ? to_string(cs.right) : cfg.boundary_right},
      {"run.output_every", std::to_string(cfg.output_every)},
      {"run.max_steps", std::to_string(cfg.max_steps)},
      {"scheme.degree", std::to_string(s.degree)},
      {"scheme.points", to_string(s.points)},
      {"scheme.correction", to_string(s.correction)},
      {"scheme.dissipation", to_string(s.dissipation)},
      {"scheme.face", to_string(s.face)},
      {"scheme.limiter", to_string(s.limiter)},
      {"scheme.cfl", num(cfl)},
      {"scheme.cs", num(s.cs)},
      {"blend.alpha_max", num(b.alpha_max)},
      {"blend.alpha_min", num(b.alpha_min)},
      {"blend.sharpness", num(b.sharpness)},
      {"blend.threshold_factor", num(b.threshold_factor)},
      {"blend.threshold_exponent", num(b.threshold_exponent)},
      {"blend.smooth_neighbors", b.smooth_neighbors ? "true" : "false"},
      {"blend.positivity_fraction", num(b.positivity_fraction)},
  };
}

double resolved_cfl(const RunConfig& cfg) {
  const SchemeConfig& s = cfg.scheme;
  if (s.cfl > 0.0) return s.cfl;
  if (find_case(cfg.case_id).system_cfl) return default_system_cfl(s.degree, s.correction, s.dissipation);
  return default_cfl(s.degree, s.correction, s.dissipation);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash(const RunConfig& cfg) {
  std::string text;
  for (const auto& [k, v] : config_entries(cfg)) text += k + "=" + v + "\n";
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

std::string meta_line(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# meta: hash=" << config_hash(cfg);
  for (const auto& [k, v] : config_entries(cfg)) os << ' ' << k << '=' << v;
  return os.str();
}

}  // namespace mdrk
