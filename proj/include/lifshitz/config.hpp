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

#include <filesystem>
#include <string>
#include <string_view>

#include "lifshitz/materials.hpp"

namespace lifshitz {

struct NumericsSettings {
  double rel_tol = 1e-10;
  /// Absolute floor for tolerance tests, in units of the natural scale of the
  /// quantity (1/a^2 for mode integrals, 1/a^3 for free energies).
  double abs_tol_floor = 1e-30;
  long max_matsubara_terms = 200000;
  int quadrature_max_depth = 40;
  double diff_step_fraction = 1e-3;

  void validate() const;
};

/// One evaluation point: a gap of width `separation_time` (a/c, s) at
/// `temperature` (k_B T / hbar, rad/s) between two identical half-spaces.
struct GapConfiguration {
  double separation_time = 0.0;
  double temperature = 0.0;
  PermittivityModel material = IdealMetal{};
  NumericsSettings numerics;

  void validate() const;

  double separation_nm() const;
  double temperature_k() const;

  GapConfiguration with_temperature(double temperature_freq) const {
    GapConfiguration copy = *this;
    copy.temperature = temperature_freq;
    return copy;
  }
};

/// Parses the JSON run configuration. Throws ValidationError naming the JSON
/// path of the first problem found.
GapConfiguration parse_config(std::string_view text);

/// Reads and parses a configuration file. Throws std::ios_base::failure when
/// the file cannot be read.
GapConfiguration load_config(const std::filesystem::path& path);

/// Serialises back to the same schema (SI at the boundary).
std::string to_json(const GapConfiguration& config);

}  // namespace lifshitz
