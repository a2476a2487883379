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

// Independent reference values for the tests. Nothing here calls the library.

#pragma once

#include <cmath>
#include <numbers>

namespace oracle {

/// Li_n(x) by direct partial sums, x in [0, 1). Long double accumulation from
/// the smallest term upward.
inline long double polylog_partial_sum(int n, long double x, long terms) {
  long double sum = 0.0L;
  for (long l = terms; l >= 1; --l) {
    sum += std::pow(x, static_cast<long double>(l)) / std::pow(static_cast<long double>(l), n);
  }
  return sum;
}

/// sum_{l >= 1} l^{-s} as a partial sum to N - 1 plus the Euler-Maclaurin
/// tail int_N^inf + f(N)/2 - f'(N)/12 + f'''(N)/720.
inline long double zeta_partial_sum(long double s, long terms) {
  long double sum = 0.0L;
  for (long l = terms - 1; l >= 1; --l) sum += std::pow(static_cast<long double>(l), -s);
  const long double n = static_cast<long double>(terms);
  sum += std::pow(n, 1.0L - s) / (s - 1.0L) + std::pow(n, -s) / 2.0L +
         s * std::pow(n, -s - 1.0L) / 12.0L -
         s * (s + 1.0L) * (s + 2.0L) * std::pow(n, -s - 3.0L) / 720.0L;
  return sum;
}

/// zeta(-3/2) from the functional equation
/// zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s).
inline double zeta_minus_three_halves() {
  const long double pi = std::numbers::pi_v<long double>;
  const long double s = -1.5L;
  return static_cast<double>(std::pow(2.0L, s) * std::pow(pi, s - 1.0L) * std::sin(pi * s / 2.0L) *
                             std::tgamma(1.0L - s) * zeta_partial_sum(1.0L - s, 100000));
}

/// Casimir's ideal-metal result -pi^2 / (720 a^3), a as a light-travel time.
inline double casimir_free_energy(double separation_time) {
  const double pi = std::numbers::pi;
  return -pi * pi / (720.0 * separation_time * separation_time * separation_time);
}

/// Sum'_{m >= 0} e^{-m t} - int_0^inf e^{-m t} dm.
inline long double geometric_sum_minus_integral(long double t) {
  return 1.0L / -std::expm1(-t) - 0.5L - 1.0L / t;
}

}  // namespace oracle
