#include "mdrk/scheme.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "mdrk/errors.hpp"
#include "mdrk/stability.hpp"

namespace mdrk {

Dissipation parse_dissipation(const std::string& s) {
  if (s == "d1" || s == "D1") return Dissipation::D1;
  if (s == "d2" || s == "D2") return Dissipation::D2;
  throw ConfigError("unknown dissipation '" + s + "' (expected d1|d2)");
}

FaceScheme parse_face_scheme(const std::string& s) {
  if (s == "ae" || s == "AE") return FaceScheme::AE;
  if (s == "ea" || s == "EA") return FaceScheme::EA;
  throw ConfigError("unknown face scheme '" + s + "' (expected ae|ea)");
}

Limiter parse_limiter(const std::string& s) {
  if (s == "none") return Limiter::None;
  if (s == "blend-fo" || s == "fo") return Limiter::BlendFO;
  if (s == "blend-mh" || s == "mh") return Limiter::BlendMH;
  throw ConfigError("unknown limiter '" + s + "' (expected none|blend-fo|blend-mh)");
}

BoundaryKind parse_boundary(const std::string& s) {
  if (s == "periodic") return BoundaryKind::Periodic;
  if (s == "transmissive" || s == "outflow") return BoundaryKind::Transmissive;
  if (s == "reflective") return BoundaryKind::Reflective;
  if (s == "dirichlet") return BoundaryKind::Dirichlet;
  throw ConfigError("unknown boundary '" + s + "' (expected periodic|transmissive|reflective|dirichlet)");
}

std::string to_string(Dissipation d) { return d == Dissipation::D1 ? "d1" : "d2"; }
std::string to_string(FaceScheme f) { return f == FaceScheme::AE ? "ae" : "ea"; }
std::string to_string(Limiter l) {
  switch (l) {
    case Limiter::None: return "none";
    case Limiter::BlendFO: return "blend-fo";
    case Limiter::BlendMH: return "blend-mh";
  }
  return "?";
}
std::string to_string(BoundaryKind b) {
  switch (b) {
    case BoundaryKind::Periodic: return "periodic";
    case BoundaryKind::Transmissive: return "transmissive";
    case BoundaryKind::Reflective: return "reflective";
    case BoundaryKind::Dirichlet: return "dirichlet";
  }
  return "?";
}

double default_cfl(int degree, CorrectionKind correction, Dissipation dissipation) {
  if (degree == 3 && dissipation == Dissipation::D2) return correction == CorrectionKind::Radau ? 0.107 : 0.224;
  if (degree < 1 || degree > 6) throw ConfigError("no default CFL for degree " + std::to_string(degree) + "; set cfl");
  static std::mutex mutex;
  static std::map<std::tuple<int, CorrectionKind, Dissipation>, double> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(degree, correction, dissipation);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const auto ops = reference_operators(degree, PointKind::GL, correction);
  const double cfl = find_cfl(*ops, dissipation).sigma;
  cache.emplace(key, cfl);
  return cfl;
}

double default_system_cfl(int degree, CorrectionKind correction, Dissipation dissipation) {
  if (degree < 1 || degree > 6) throw ConfigError("no default CFL for degree " + std::to_string(degree) + "; set cfl");
  static std::mutex mutex;
  static std::map<std::tuple<int, CorrectionKind, Dissipation>, double> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(degree, correction, dissipation);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const auto ops = reference_operators(degree, PointKind::GL, correction);
  const double cfl = find_system_cfl(*ops, dissipation).sigma;
  cache.emplace(key, cfl);
  return cfl;
}

double effective_cfl(const SchemeConfig& cfg) {
  if (cfg.cfl < 0.0) throw ConfigError("CFL must be positive");
  const double cfl = cfg.cfl > 0.0 ? cfg.cfl : default_cfl(cfg.degree, cfg.correction, cfg.dissipation);
  return cfg.cs * cfl;
}

}  // namespace mdrk
