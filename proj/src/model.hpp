#pragma once

#include <string>

namespace diskrad {

// CODATA value; overridable per parameter set.
inline constexpr double kStefanBoltzmann = 5.670374419e-8;  // [W m^-2 K^-4]

// h/R above this is outside the regime the reduction is validated in.
inline constexpr double kThinPlateAdvisoryRatio = 0.05;

// Physical and geometric inputs. SI units throughout.
struct DiskParams {
  double radius = 0.0;              // R [m]
  double thickness = 0.0;           // h [m]
  double conductivity = 0.0;        // k [W m^-1 K^-1]
  double emissivity = 0.0;          // [-]
  double sigma = kStefanBoltzmann;  // [W m^-2 K^-4]
  double q0 = 0.0;                  // volumetric source density [W m^-3]
  double source_radius = 0.0;       // a [m]
  double t_ambient = 0.0;           // [K]
};

// Quantities derived from a validated parameter set.
//
// theta_iso and delta_t4 are carried alongside t_iso so that downstream
// arithmetic in the theta = T - t_ambient frame never has to subtract
// nearly equal fourth powers.
struct DerivedParams {
  double alpha = 0.0;      // radiative coupling eps*sigma/(k*h) [m^-2 K^-3]
  double p_in = 0.0;       // total input power pi*a^2*h*q0 [W]
  double area = 0.0;       // pi*R^2 [m^2]
  double t_iso = 0.0;      // isothermal-equivalent temperature [K]
  double theta_iso = 0.0;  // t_iso - t_ambient [K]
  double delta_t4 = 0.0;   // t_iso^4 - t_ambient^4 = a^2*h*q0/(sigma*eps*R^2)
};

// Piecewise-constant source: q0 on [0, a], zero beyond.
struct SourceProfile {
  double q0 = 0.0;             // plateau value [W m^-3]
  double cutoff_radius = 0.0;  // a [m]
};

// Returns the parameter set unchanged once every invariant holds; throws
// InvalidParameter naming the offending field otherwise. A large h/R is
// accepted (see thin_plate_warning).
DiskParams validate_params(const DiskParams& raw);

bool thin_plate_warning(const DiskParams& p);

DerivedParams derive(const DiskParams& p);

SourceProfile source_profile(const DiskParams& p);

// Q(r): q0 for r <= cutoff (closed inner interval), 0 beyond. r < 0 throws.
double source_at(const SourceProfile& profile, double r);

// Parses the canonical config object: {"disk": {r, h, k, emissivity,
// sigma?, q0, a, t_ambient}} or the bare disk object. Unknown keys are
// rejected. The result is validated.
DiskParams params_from_json(const std::string& text);

// Canonical compact JSON echo of a parameter set (sorted keys).
std::string params_to_json(const DiskParams& p);

}  // namespace diskrad
