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

#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "lifshitz/error.hpp"
#include "lifshitz/units.hpp"
#include "oracles.hpp"

using namespace lifshitz;

namespace {

double rel(double x, double ref) { return std::abs(x / ref - 1.0); }

std::string message_of(const SiInputs& si) {
  try {
    to_natural(si);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("constants are the exact SI values") {
  CHECK(kConstants.boltzmann == 1.380649e-23);
  CHECK(kConstants.reduced_planck == 1.054571817e-34);
  CHECK(kConstants.light_speed == 2.99792458e8);
}

TEST_CASE("separation and temperature conversions") {
  CHECK(rel(separation_time_from_nm(1000.0), 1e-6 / 2.99792458e8) < 1e-15);
  CHECK(rel(separation_time_from_nm(1000.0), 3.33564095198152e-15) < 1e-13);
  CHECK(rel(temperature_freq_from_kelvin(300.0), 3.92761017621619e13) < 1e-13);
  CHECK(rel(temperature_freq_from_kelvin(300.0), 3.9280e13) < 1e-3);
  CHECK(temperature_freq_from_kelvin(0.0) == 0.0);
  CHECK(rel(separation_nm_from_time(separation_time_from_nm(137.5)), 137.5) < 1e-15);
  CHECK(rel(kelvin_from_temperature_freq(temperature_freq_from_kelvin(0.37)), 0.37) < 1e-15);
}

TEST_CASE("to_natural and to_si round trip") {
  const SiInputs si{1000.0, 0.25, 1e12, 11.66, 8e15};
  const NaturalQuantities nat = to_natural(si);
  CHECK(nat.sigma_freq == 1e12);
  CHECK(nat.eps_bar == 11.66);
  CHECK(nat.omega0 == 8e15);
  const SiInputs back = to_si(nat);
  CHECK(rel(back.separation_nm, si.separation_nm) <= 1e-14);
  CHECK(rel(back.temperature_k, si.temperature_k) <= 1e-14);
  CHECK(rel(back.sigma_over_eps0_per_s, si.sigma_over_eps0_per_s) <= 1e-14);
  CHECK(back.eps_bar == si.eps_bar);
  CHECK(back.omega0_rad_s == si.omega0_rad_s);
}

TEST_CASE("to_natural names the offending field") {
  SiInputs si{1000.0, 1.0, 1e12, 11.66, 8e15};
  si.temperature_k = -1.0;
  CHECK(message_of(si).find("temperature_k") != std::string::npos);
  si = {0.0, 1.0, 1e12, 11.66, 8e15};
  CHECK(message_of(si).find("separation_nm") != std::string::npos);
  si = {1000.0, 1.0, std::numeric_limits<double>::quiet_NaN(), 11.66, 8e15};
  CHECK(message_of(si).find("sigma_over_eps0_per_s") != std::string::npos);
  si = {1000.0, 1.0, 1e12, 11.66, -2.0};
  CHECK(message_of(si).find("omega0_rad_s") != std::string::npos);
}

TEST_CASE("free energy and entropy to SI") {
  const double hbar_over_c2 = 1.054571817e-34 / (2.99792458e8 * 2.99792458e8);
  CHECK(free_energy_to_si(0.0) == 0.0);
  CHECK(rel(free_energy_to_si(1.0), hbar_over_c2) < 1e-15);
  CHECK(rel(free_energy_to_si(1.0), 1.17336939129762e-51) < 1e-12);
  CHECK(rel(entropy_to_si(1.0), 1.380649e-23 / (2.99792458e8 * 2.99792458e8)) < 1e-15);

  const double a = separation_time_from_nm(1000.0);
  CHECK(rel(free_energy_to_si(oracle::casimir_free_energy(a)), -4.33375257482584e-10) < 1e-12);

  CHECK_THROWS_AS(free_energy_to_si(std::numeric_limits<double>::infinity()), ValidationError);
  CHECK_THROWS_AS(entropy_to_si(std::numeric_limits<double>::quiet_NaN()), ValidationError);
}
