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

#include "lifshitz/materials.hpp"

#include <algorithm>

namespace lifshitz {

std::string_view exponent_label(Exponent lambda) {
  switch (lambda) {
    case Exponent::Zero:
      return "0";
    case Exponent::MinusOne:
      return "-1";
    case Exponent::MinusTwo:
      return "-2";
    case Exponent::BelowMinusTwo:
      return "below-2";
  }
  return "?";
}

Exponent parse_exponent(std::string_view token) {
  if (token == "0") return Exponent::Zero;
  if (token == "-1") return Exponent::MinusOne;
  if (token == "-2") return Exponent::MinusTwo;
  if (token == "below-2" || token == "<-2" || token == "-3") return Exponent::BelowMinusTwo;
  throw ValidationError("exponent: expected one of 0, -1, -2, below-2; got '" +
                        std::string(token) + "'");
}

std::string_view model_name(const PermittivityModel& model) {
  return std::visit(
      [](const auto& m) -> std::string_view {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DrudeMetal>) return "drude_metal";
        if constexpr (std::is_same_v<M, DrudeSemiconductor>) return "drude_semiconductor";
        if constexpr (std::is_same_v<M, ConstantDielectric>) return "constant_dielectric";
        if constexpr (std::is_same_v<M, Plasma>) return "plasma";
        return "ideal_metal";
      },
      model);
}

namespace {

void check_frequency(double value, const char* field) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(std::string("material.") + field + ": must be finite and >= 0");
  }
}

void check_eps_bar(double value) {
  if (!std::isfinite(value) || value < 1.0) {
    throw ValidationError("material.eps_bar: must be finite and >= 1");
  }
}

}  // namespace

void validate(const PermittivityModel& model) {
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DrudeMetal>) {
          check_frequency(m.omega_p, "omega_p_rad_s");
          check_frequency(m.nu, "nu_rad_s");
        } else if constexpr (std::is_same_v<M, DrudeSemiconductor>) {
          check_eps_bar(m.eps_bar);
          check_frequency(m.omega0, "omega0_rad_s");
          check_frequency(m.sigma, "sigma_over_eps0_per_s");
          if (m.omega0 <= 0.0) {
            throw ValidationError("material.omega0_rad_s: must be > 0 for drude_semiconductor");
          }
        } else if constexpr (std::is_same_v<M, ConstantDielectric>) {
          check_eps_bar(m.eps_bar);
        } else if constexpr (std::is_same_v<M, Plasma>) {
          check_frequency(m.omega_p, "omega_p_rad_s");
        }
      },
      model);
}

LeadingExponent classify_exponent(const PermittivityModel& model) {
  return std::visit(
      [](const auto& m) -> LeadingExponent {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DrudeMetal>) {
          if (m.omega_p == 0.0) return LeadingExponent::zero(1.0);
          if (m.nu > 0.0) return LeadingExponent::minus_one();
          return LeadingExponent::minus_two(m.omega_p);
        } else if constexpr (std::is_same_v<M, DrudeSemiconductor>) {
          if (m.sigma > 0.0) return LeadingExponent::minus_one();
          return LeadingExponent::zero(m.eps_bar);
        } else if constexpr (std::is_same_v<M, ConstantDielectric>) {
          return LeadingExponent::zero(m.eps_bar);
        } else if constexpr (std::is_same_v<M, Plasma>) {
          if (m.omega_p == 0.0) return LeadingExponent::zero(1.0);
          return LeadingExponent::minus_two(m.omega_p);
        } else {
          return LeadingExponent::below_minus_two();
        }
      },
      model);
}

double reference_frequency(const PermittivityModel& model) {
  return std::visit(
      [](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DrudeMetal>) {
          return m.nu > 0.0 ? std::min(m.nu, m.omega_p) : m.omega_p;
        } else if constexpr (std::is_same_v<M, DrudeSemiconductor>) {
          return m.sigma > 0.0 ? std::min(m.sigma, m.omega0) : m.omega0;
        } else if constexpr (std::is_same_v<M, Plasma>) {
          return m.omega_p;
        } else {
          return 1.0;
        }
      },
      model);
}

}  // namespace lifshitz
