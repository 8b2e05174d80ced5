#pragma once

#include <string>

#include "mdrk/operators.hpp"

namespace mdrk {

enum class Dissipation { D1, D2 };
enum class FaceScheme { AE, EA };
enum class Limiter { None, BlendFO, BlendMH };
enum class BoundaryKind { Periodic, Transmissive, Reflective, Dirichlet };

Dissipation parse_dissipation(const std::string& s);
FaceScheme parse_face_scheme(const std::string& s);
Limiter parse_limiter(const std::string& s);
BoundaryKind parse_boundary(const std::string& s);
std::string to_string(Dissipation d);
std::string to_string(FaceScheme f);
std::string to_string(Limiter l);
std::string to_string(BoundaryKind b);

struct BlendingParameters {
  double alpha_max = 0.5;
  double alpha_min = 0.001;
  double sharpness = 9.21024;
  double threshold_factor = 0.5;
  double threshold_exponent = 1.8;
  bool smooth_neighbors = true;
  // fraction of p_k(low-order) the limited state must keep
  double positivity_fraction = 0.1;
};

struct SchemeConfig {
  int degree = 3;
  PointKind points = PointKind::GL;
  CorrectionKind correction = CorrectionKind::Radau;
  Dissipation dissipation = Dissipation::D2;
  FaceScheme face = FaceScheme::EA;
  Limiter limiter = Limiter::None;
  BlendingParameters blend;
  double cfl = 0.0;  // 0 selects the tabulated value
  double cs = 0.98;
};

/// Fourier CFL limit: tabulated for degree 3 with D2, computed otherwise (degree 1..6).
double default_cfl(int degree, CorrectionKind correction, Dissipation dissipation);
/// Fourier limit that also covers waves slower than the dissipation speed.
double default_system_cfl(int degree, CorrectionKind correction, Dissipation dissipation);

/// cs * cfl, with cfl looked up when zero.
double effective_cfl(const SchemeConfig& cfg);

}  // namespace mdrk
