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

#include "lifshitz/units.hpp"

#include <cmath>
#include <string>

#include "lifshitz/error.hpp"

namespace lifshitz {

namespace {

void require_finite_nonnegative(double value, const char* field) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(std::string(field) + ": expected a finite nonnegative number, got " +
                          std::to_string(value));
  }
}

}  // namespace

double separation_time_from_nm(double separation_nm) {
  return separation_nm * 1e-9 / kConstants.light_speed;
}

double separation_nm_from_time(double separation_time) {
  return separation_time * kConstants.light_speed * 1e9;
}

double temperature_freq_from_kelvin(double temperature_k) {
  return kConstants.boltzmann * temperature_k / kConstants.reduced_planck;
}

double kelvin_from_temperature_freq(double temperature_freq) {
  return temperature_freq * kConstants.reduced_planck / kConstants.boltzmann;
}

NaturalQuantities to_natural(const SiInputs& si) {
  require_finite_nonnegative(si.separation_nm, "separation_nm");
  require_finite_nonnegative(si.temperature_k, "temperature_k");
  require_finite_nonnegative(si.sigma_over_eps0_per_s, "sigma_over_eps0_per_s");
  require_finite_nonnegative(si.eps_bar, "eps_bar");
  require_finite_nonnegative(si.omega0_rad_s, "omega0_rad_s");
  if (si.separation_nm <= 0.0) {
    throw ValidationError("separation_nm: must be > 0");
  }
  NaturalQuantities natural;
  natural.separation_time = separation_time_from_nm(si.separation_nm);
  natural.temperature_freq = temperature_freq_from_kelvin(si.temperature_k);
  natural.sigma_freq = si.sigma_over_eps0_per_s;
  natural.omega0 = si.omega0_rad_s;
  natural.eps_bar = si.eps_bar;
  return natural;
}

SiInputs to_si(const NaturalQuantities& natural) {
  SiInputs si;
  si.separation_nm = separation_nm_from_time(natural.separation_time);
  si.temperature_k = kelvin_from_temperature_freq(natural.temperature_freq);
  si.sigma_over_eps0_per_s = natural.sigma_freq;
  si.omega0_rad_s = natural.omega0;
  si.eps_bar = natural.eps_bar;
  return si;
}

double free_energy_to_si(double f_natural) {
  if (!std::isfinite(f_natural)) {
    throw ValidationError("free_energy_to_si: non-finite input");
  }
  const double c = kConstants.light_speed;
  return kConstants.reduced_planck * f_natural / (c * c);
}

double entropy_to_si(double s_natural) {
  if (!std::isfinite(s_natural)) {
    throw ValidationError("entropy_to_si: non-finite input");
  }
  const double c = kConstants.light_speed;
  return kConstants.boltzmann * s_natural / (c * c);
}

}  // namespace lifshitz
