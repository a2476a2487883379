// Copyright (c) 2026 The lifshitz-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lifshitz/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lifshitz/error.hpp"
#include "lifshitz/units.hpp"

namespace lifshitz {

using nlohmann::json;

void NumericsSettings::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1e-2)) {
    throw ValidationError("numerics.rel_tol: must satisfy 0 < rel_tol < 1e-2");
  }
  if (!(abs_tol_floor >= 0.0) || !std::isfinite(abs_tol_floor)) {
    throw ValidationError("numerics.abs_tol_floor: must be finite and >= 0");
  }
  if (max_matsubara_terms < 16) {
    throw ValidationError("numerics.max_matsubara_terms: must be >= 16");
  }
  if (quadrature_max_depth < 1) {
    throw ValidationError("numerics.quadrature_max_depth: must be >= 1");
  }
  if (!(diff_step_fraction > 0.0 && diff_step_fraction < 0.5)) {
    throw ValidationError("numerics.diff_step_fraction: must satisfy 0 < h < 0.5");
  }
}

void GapConfiguration::validate() const {
  if (!std::isfinite(separation_time) || separation_time <= 0.0) {
    throw ValidationError("separation_nm: must be finite and > 0");
  }
  if (!std::isfinite(temperature) || temperature < 0.0) {
    throw ValidationError("temperature_k: must be finite and >= 0");
  }
  lifshitz::validate(material);
  numerics.validate();
}

double GapConfiguration::separation_nm() const { return separation_nm_from_time(separation_time); }

double GapConfiguration::temperature_k() const { return kelvin_from_temperature_freq(temperature); }

namespace {

std::string type_name(const json& value) { return value.type_name(); }

double number_at(const json& object, const std::string& key, const std::string& path) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError(path + key + " required");
  }
  if (!it->is_number()) {
    throw ValidationError(path + key + ": expected number, got " + type_name(*it));
  }
  return it->get<double>();
}

template <typename T>
void optional_number(const json& object, const std::string& key, const std::string& path, T& out) {
  const auto it = object.find(key);
  if (it == object.end()) return;
  if constexpr (std::is_integral_v<T>) {
    if (!it->is_number_integer()) {
      throw ValidationError(path + key + ": expected integer, got " + type_name(*it));
    }
  } else {
    if (!it->is_number()) {
      throw ValidationError(path + key + ": expected number, got " + type_name(*it));
    }
  }
  out = it->get<T>();
}

PermittivityModel parse_material(const json& material) {
  const std::string path = "material.";
  if (!material.is_object()) {
    throw ValidationError("material: expected object, got " + type_name(material));
  }
  const auto type_it = material.find("type");
  if (type_it == material.end()) {
    throw ValidationError("material.type required");
  }
  if (!type_it->is_string()) {
    throw ValidationError("material.type: expected string, got " + type_name(*type_it));
  }
  const std::string type = type_it->get<std::string>();
  if (type == "drude_semiconductor") {
    return DrudeSemiconductor{number_at(material, "eps_bar", path),
                              number_at(material, "omega0_rad_s", path),
                              number_at(material, "sigma_over_eps0_per_s", path)};
  }
  if (type == "drude_metal") {
    return DrudeMetal{number_at(material, "omega_p_rad_s", path),
                      number_at(material, "nu_rad_s", path)};
  }
  if (type == "constant_dielectric") {
    return ConstantDielectric{number_at(material, "eps_bar", path)};
  }
  if (type == "plasma") {
    return Plasma{number_at(material, "omega_p_rad_s", path)};
  }
  if (type == "ideal_metal") {
    return IdealMetal{};
  }
  throw ValidationError("material.type: unknown type '" + type +
                        "'; supported: drude_semiconductor, drude_metal, constant_dielectric, "
                        "plasma, ideal_metal");
}

NumericsSettings parse_numerics(const json& numerics) {
  NumericsSettings settings;
  if (!numerics.is_object()) {
    throw ValidationError("numerics: expected object, got " + type_name(numerics));
  }
  const std::string path = "numerics.";
  optional_number(numerics, "rel_tol", path, settings.rel_tol);
  optional_number(numerics, "abs_tol_floor", path, settings.abs_tol_floor);
  optional_number(numerics, "max_matsubara_terms", path, settings.max_matsubara_terms);
  optional_number(numerics, "quadrature_max_depth", path, settings.quadrature_max_depth);
  optional_number(numerics, "diff_step_fraction", path, settings.diff_step_fraction);
  return settings;
}

}  // namespace

GapConfiguration parse_config(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!document.is_object()) {
    throw ValidationError("config: expected a JSON object at top level");
  }

  SiInputs si;
  si.separation_nm = number_at(document, "separation_nm", "");
  si.temperature_k = number_at(document, "temperature_k", "");
  const auto material_it = document.find("material");
  if (material_it == document.end()) {
    throw ValidationError("material required");
  }

  GapConfiguration config;
  const NaturalQuantities natural = to_natural(si);
  config.separation_time = natural.separation_time;
  config.temperature = natural.temperature_freq;
  config.material = parse_material(*material_it);
  if (const auto it = document.find("numerics"); it != document.end()) {
    config.numerics = parse_numerics(*it);
  }
  config.validate();
  return config;
}

GapConfiguration load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open config file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string to_json(const GapConfiguration& config) {
  json material = std::visit(
      [](const auto& m) -> json {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DrudeMetal>) {
          return {{"type", "drude_metal"}, {"omega_p_rad_s", m.omega_p}, {"nu_rad_s", m.nu}};
        } else if constexpr (std::is_same_v<M, DrudeSemiconductor>) {
          return {{"type", "drude_semiconductor"},
                  {"eps_bar", m.eps_bar},
                  {"omega0_rad_s", m.omega0},
                  {"sigma_over_eps0_per_s", m.sigma}};
        } else if constexpr (std::is_same_v<M, ConstantDielectric>) {
          return {{"type", "constant_dielectric"}, {"eps_bar", m.eps_bar}};
        } else if constexpr (std::is_same_v<M, Plasma>) {
          return {{"type", "plasma"}, {"omega_p_rad_s", m.omega_p}};
        } else {
          return {{"type", "ideal_metal"}};
        }
      },
      config.material);
  const NumericsSettings& n = config.numerics;
  json document = {{"separation_nm", config.separation_nm()},
                   {"temperature_k", config.temperature_k()},
                   {"material", material},
                   {"numerics",
                    {{"rel_tol", n.rel_tol},
                     {"abs_tol_floor", n.abs_tol_floor},
                     {"max_matsubara_terms", n.max_matsubara_terms},
                     {"quadrature_max_depth", n.quadrature_max_depth},
                     {"diff_step_fraction", n.diff_step_fraction}}}};
  return document.dump(2);
}

}  // namespace lifshitz
