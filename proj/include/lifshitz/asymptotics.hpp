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

#include <functional>
#include <string>
#include <vector>

#include "lifshitz/config.hpp"
#include "lifshitz/materials.hpp"
#include "lifshitz/reflection.hpp"

namespace lifshitz {

enum class Polarisation { TE, TM };

/// Coefficients of the small-mu expansion
///   g(mu) ~ c0 + c1 mu + c_{3/2} mu^{3/2} + c_{2l} mu^2 ln mu + c2 mu^2 + c3 mu^3.
/// c0 and c2 drop out of the low-temperature correction.
struct AsymptoticCoefficients {
  double c0 = 0.0;
  double c1 = 0.0;
  double c_three_halves = 0.0;
  double c2_log = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  Polarisation polarisation = Polarisation::TM;
};

struct ValidityThresholds {
  double t_max = 0.1;
  double alpha_max = 0.1;
  double sigma_a_max = 0.1;
};

/// t = 2 pi T / (4 pi sigma), mu = m t, alpha = 2 a (4 pi sigma).
struct RescaledTemperature {
  double t = 0.0;
  double alpha = 0.0;

  /// T, sigma (= 4 pi sigma) in rad/s; a as light-travel time in s.
  static RescaledTemperature from(double temperature, double sigma, double separation_time);

  double mu_of(long m) const { return static_cast<double>(m) * t; }
};

/// f_q(a) in F = T sum_q f_q Sum'_m g_q(m t):
/// f_p = 1 / (8 pi a^2), f_s = (4 pi sigma)^2 / (2 pi).
struct ModePrefactor {
  double f_p = 0.0;
  double f_s = 0.0;

  static ModePrefactor from(double sigma, double separation_time);
};

/// The four slots of the zeta-regularised sum-minus-integral, already
/// multiplied by T f_q.
struct CorrectionTerms {
  double linear = 0.0;        // -c1 t / 12
  double three_halves = 0.0;  // zeta(-3/2) c_{3/2} t^{3/2}
  double log = 0.0;           // zeta(3) c_{2l} t^2 / (4 pi^2)
  double cubic = 0.0;         // c3 t^3 / 120

  double total() const { return linear + three_halves + log + cubic; }
};

CorrectionTerms assemble_correction(const AsymptoticCoefficients& coefficients, double t,
                                    double prefactor);

/// Leading order in alpha: c1 = 2 pi^2 / 3, c_{2l} = 8. eps_bar does not
/// enter at this order.
AsymptoticCoefficients tm_coefficients(double alpha, double eps_bar);

/// c1 = -(2 ln 2 - 1) / 4, c_{2l} = -1/4, c_{3/2} = alpha / 12.
AsymptoticCoefficients te_coefficients(double alpha);

/// Closed-form low-temperature correction F(T) - F(0), split by power of T.
struct ClosedFormCorrection {
  double t2 = 0.0;   // ~ T^2
  double t52 = 0.0;  // ~ T^{5/2}
  double t3 = 0.0;   // ~ T^3
  double temperature = 0.0;
  std::vector<std::string> flags;

  double total() const { return t2 + t52 + t3; }
  double total_si() const;
  /// -d/dT of total().
  double entropy() const;
};

/// TM: -pi^2 T^2 / (72 (4 pi sigma) a^2) + zeta(3) T^3 / (pi (4 pi sigma)^2 a^2).
ClosedFormCorrection delta_f_tm(double temperature, double sigma, double separation_time,
                                const ValidityThresholds& thresholds = {});

/// TE: (4 pi sigma) T^2 (2 ln 2 - 1) / 48
///     + sqrt(2 pi) zeta(-3/2) a (4 pi sigma)^{3/2} T^{5/2} / 6 - zeta(3) T^3 / (8 pi).
ClosedFormCorrection delta_f_te(double temperature, double sigma, double separation_time,
                                const ValidityThresholds& thresholds = {});

/// Zero-frequency reflection amplitudes as functions of kappa (rad/s).
using ReflectionLimit = std::function<ReflectionPair<double>(double kappa)>;

/// Constant zero-frequency amplitudes.
struct ConstantLimits {
  double r_s = 0.0;
  double r_p = 0.0;
};

ConstantLimits constant_limits(const LeadingExponent& exponent);

/// Zero-temperature entropy left behind when the leading exponent jumps from
/// lambda_1 to lambda_2 at T = 0:
///   S = (1/4pi) sum_q int_0^inf dkappa kappa ln[(1 - R2^2 e^{-2 kappa a}) / (1 - R1^2 e^{-2 kappa a})].
/// Evaluated by adaptive quadrature; throws NumericalError when rel_tol is not met.
double residual_entropy_general(const ReflectionLimit& before, const ReflectionLimit& after,
                                double separation_time, const NumericsSettings& numerics = {});

double residual_entropy_general(const LeadingExponent& before, const LeadingExponent& after,
                                double separation_time, const NumericsSettings& numerics = {});

/// (1 / 16 pi a^2) sum_q [Li3(R1_q^2) - Li3(R2_q^2)].
double residual_entropy_closed(const ConstantLimits& before, const ConstantLimits& after,
                               double separation_time);

/// S_{-1 -> -2} at tilde_omega * a divided by the modified-ideal-metal value
/// -zeta(3) / (16 pi a^2).
double mim_limit_check(double tilde_omega_times_a, const NumericsSettings& numerics = {});

}  // namespace lifshitz
