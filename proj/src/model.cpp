#include "model.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace diskrad {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw InvalidParameter(message);
}

double pow4(double x) {
  const double x2 = x * x;
  return x2 * x2;
}

}  // namespace

DiskParams validate_params(const DiskParams& raw) {
  require(std::isfinite(raw.radius) && raw.radius > 0.0,
          "disk radius r must be positive");
  require(std::isfinite(raw.thickness) && raw.thickness > 0.0,
          "thickness h must be positive");
  require(std::isfinite(raw.conductivity) && raw.conductivity > 0.0,
          "conductivity k must be positive");
  require(std::isfinite(raw.emissivity) && raw.emissivity > 0.0 &&
              raw.emissivity <= 1.0,
          "emissivity must lie in (0, 1]");
  require(std::isfinite(raw.sigma) && raw.sigma > 0.0,
          "sigma must be positive");
  require(std::isfinite(raw.q0) && raw.q0 >= 0.0,
          "source density q0 must be nonnegative");
  require(std::isfinite(raw.source_radius) && raw.source_radius > 0.0,
          "source radius a must be positive");
  require(raw.source_radius <= raw.radius,
          "source radius a exceeds disk radius r");
  require(std::isfinite(raw.t_ambient) && raw.t_ambient > 0.0,
          "ambient temperature t_ambient must be positive");
  return raw;
}

bool thin_plate_warning(const DiskParams& p) {
  return p.thickness / p.radius > kThinPlateAdvisoryRatio;
}

DerivedParams derive(const DiskParams& p) {
  DerivedParams d;
  d.alpha = p.emissivity * p.sigma / (p.conductivity * p.thickness);
  d.p_in = std::numbers::pi * p.source_radius * p.source_radius * p.thickness *
           p.q0;
  d.area = std::numbers::pi * p.radius * p.radius;
  d.delta_t4 = p.source_radius * p.source_radius * p.thickness * p.q0 /
               (p.sigma * p.emissivity * p.radius * p.radius);
  // t_iso = (Ta^4 + delta)^(1/4), written so that q0 = 0 gives theta_iso = 0
  // exactly and small rises keep full precision.
  const double ta4 = pow4(p.t_ambient);
  d.theta_iso = p.t_ambient * std::expm1(0.25 * std::log1p(d.delta_t4 / ta4));
  d.t_iso = p.t_ambient + d.theta_iso;
  return d;
}

SourceProfile source_profile(const DiskParams& p) {
  return SourceProfile{p.q0, p.source_radius};
}

double source_at(const SourceProfile& profile, double r) {
  if (!(r >= 0.0)) throw InvalidParameter("source_at: radius must be >= 0");
  return r <= profile.cutoff_radius ? profile.q0 : 0.0;
}

namespace {

double get_number(const nlohmann::json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(std::string("config: missing key \"") + key + "\"");
  if (!it->is_number())
    throw ParseError(std::string("config: key \"") + key +
                     "\" must be a number");
  return it->get<double>();
}

}  // namespace

DiskParams params_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("config: expected a JSON object");
  const nlohmann::json& disk = root.contains("disk") ? root.at("disk") : root;
  if (!disk.is_object())
    throw ParseError("config: \"disk\" must be an object");

  static constexpr const char* kKeys[] = {"r",  "h",     "k", "emissivity",
                                          "sigma", "q0", "a", "t_ambient"};
  for (const auto& item : disk.items()) {
    bool known = false;
    for (const char* key : kKeys) known = known || item.key() == key;
    if (!known)
      throw ParseError("config: unknown key \"" + item.key() + "\" in disk");
  }

  DiskParams p;
  p.radius = get_number(disk, "r");
  p.thickness = get_number(disk, "h");
  p.conductivity = get_number(disk, "k");
  p.emissivity = get_number(disk, "emissivity");
  p.sigma = disk.contains("sigma") ? get_number(disk, "sigma")
                                   : kStefanBoltzmann;
  p.q0 = get_number(disk, "q0");
  p.source_radius = get_number(disk, "a");
  p.t_ambient = get_number(disk, "t_ambient");
  return validate_params(p);
}

std::string params_to_json(const DiskParams& p) {
  nlohmann::json j;
  j["r"] = p.radius;
  j["h"] = p.thickness;
  j["k"] = p.conductivity;
  j["emissivity"] = p.emissivity;
  j["sigma"] = p.sigma;
  j["q0"] = p.q0;
  j["a"] = p.source_radius;
  j["t_ambient"] = p.t_ambient;
  return j.dump();
}

}  // namespace diskrad
