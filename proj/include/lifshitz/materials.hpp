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

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "lifshitz/error.hpp"

namespace lifshitz {

// Permittivity models on the imaginary frequency axis. All frequencies in rad/s.

/// 1 + omega_p^2 / (zeta (zeta + nu)).
struct DrudeMetal {
  double omega_p = 0.0;
  double nu = 0.0;
};

/// 1 + (eps_bar - 1) / (1 + zeta^2/omega0^2) + sigma / zeta.
///
/// `sigma` is stored as the single number 4 pi sigma (Gaussian) = sigma_SI / eps0.
struct DrudeSemiconductor {
  double eps_bar = 1.0;
  double omega0 = 0.0;
  double sigma = 0.0;
};

struct ConstantDielectric {
  double eps_bar = 1.0;
};

/// 1 + omega_p^2 / zeta^2.
struct Plasma {
  double omega_p = 0.0;
};

/// Perfect reflector: r_p = 1, r_s = -1 at every frequency. Never represented
/// through an infinite permittivity inside the reflection formulas.
struct IdealMetal {};

using PermittivityModel =
    std::variant<DrudeMetal, DrudeSemiconductor, ConstantDielectric, Plasma, IdealMetal>;

/// Leading small-zeta exponent lambda of eps(i zeta) ~ zeta^lambda.
enum class Exponent { Zero, MinusOne, MinusTwo, BelowMinusTwo };

struct LeadingExponent {
  Exponent lambda = Exponent::Zero;
  std::optional<double> tilde_omega;    // lambda = -2 only
  std::optional<double> eps_bar_limit;  // lambda = 0 only

  static LeadingExponent zero(double eps_bar) { return {Exponent::Zero, std::nullopt, eps_bar}; }
  static LeadingExponent minus_one() { return {Exponent::MinusOne, std::nullopt, std::nullopt}; }
  static LeadingExponent minus_two(double tilde_omega) {
    return {Exponent::MinusTwo, tilde_omega, std::nullopt};
  }
  static LeadingExponent below_minus_two() {
    return {Exponent::BelowMinusTwo, std::nullopt, std::nullopt};
  }
};

/// "0", "-1", "-2", "below-2".
std::string_view exponent_label(Exponent lambda);
Exponent parse_exponent(std::string_view token);

std::string_view model_name(const PermittivityModel& model);

/// Throws ValidationError if a parameter is negative, non-finite or eps_bar < 1.
void validate(const PermittivityModel& model);

LeadingExponent classify_exponent(const PermittivityModel& model);

inline bool is_ideal_metal(const PermittivityModel& model) {
  return std::holds_alternative<IdealMetal>(model);
}

/// A characteristic frequency of the model (used for limit probes and plots).
double reference_frequency(const PermittivityModel& model);

/// eps(i zeta) for zeta > 0. IdealMetal returns +infinity.
template <typename Scalar>
Scalar permittivity(const PermittivityModel& model, Scalar zeta) {
  if (!(zeta > Scalar(0))) {
    throw ValidationError("permittivity: zeta must be > 0");
  }
  return std::visit(
      [zeta](const auto& m) -> Scalar {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DrudeMetal>) {
          const Scalar wp = m.omega_p;
          return Scalar(1) + wp * wp / (zeta * (zeta + Scalar(m.nu)));
        } else if constexpr (std::is_same_v<M, DrudeSemiconductor>) {
          const Scalar x = zeta / Scalar(m.omega0);
          return Scalar(1) + (Scalar(m.eps_bar) - Scalar(1)) / (Scalar(1) + x * x) +
                 Scalar(m.sigma) / zeta;
        } else if constexpr (std::is_same_v<M, ConstantDielectric>) {
          return Scalar(m.eps_bar);
        } else if constexpr (std::is_same_v<M, Plasma>) {
          const Scalar x = Scalar(m.omega_p) / zeta;
          return Scalar(1) + x * x;
        } else {
          return std::numeric_limits<Scalar>::infinity();
        }
      },
      model);
}

}  // namespace lifshitz
