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

namespace lifshitz {

/// CODATA values used at the SI boundary. Everything inside the library is in
/// natural units with k_B = hbar = c = 1: frequencies in rad/s, lengths as
/// light-travel times in s.
struct PhysicalConstants {
  double boltzmann;       // J/K
  double reduced_planck;  // J s
  double light_speed;     // m/s
};

inline constexpr PhysicalConstants kConstants{1.380649e-23, 1.054571817e-34, 2.99792458e8};

/// Boundary-facing inputs in laboratory units.
struct SiInputs {
  double separation_nm = 0.0;
  double temperature_k = 0.0;
  double sigma_over_eps0_per_s = 0.0;
  double eps_bar = 1.0;
  double omega0_rad_s = 0.0;
};

/// The same quantities in natural units.
///
/// `sigma_freq` is sigma_SI / eps0, which equals 4 pi sigma in Gaussian units,
/// so it enters the permittivity as a plain sigma_freq / zeta.
struct NaturalQuantities {
  double separation_time = 0.0;   // a / c, s
  double temperature_freq = 0.0;  // k_B T / hbar, rad/s
  double sigma_freq = 0.0;        // rad/s
  double omega0 = 0.0;            // rad/s
  double omega_p = 0.0;           // rad/s
  double eps_bar = 1.0;
};

/// Validates and converts. Throws ValidationError naming the offending field.
NaturalQuantities to_natural(const SiInputs& si);

/// Inverse of to_natural.
SiInputs to_si(const NaturalQuantities& natural);

double separation_time_from_nm(double separation_nm);
double separation_nm_from_time(double separation_time);
double temperature_freq_from_kelvin(double temperature_k);
double kelvin_from_temperature_freq(double temperature_freq);

/// Free energy per area: (rad/s)^3 -> J/m^2, i.e. hbar f / c^2.
double free_energy_to_si(double f_natural);

/// Entropy per area: (rad/s)^2 -> J/(K m^2), i.e. k_B s / c^2.
double entropy_to_si(double s_natural);

}  // namespace lifshitz
