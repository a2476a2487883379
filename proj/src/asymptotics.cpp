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

#include "lifshitz/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "lifshitz/error.hpp"
#include "lifshitz/quadrature.hpp"
#include "lifshitz/special_functions.hpp"
#include "lifshitz/units.hpp"

namespace lifshitz {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> validity_flags(double temperature, double sigma, double separation_time,
                                        const ValidityThresholds& thresholds) {
  std::vector<std::string> flags;
  const RescaledTemperature rescaled = RescaledTemperature::from(temperature, sigma, separation_time);
  if (!(rescaled.t < thresholds.t_max)) flags.emplace_back("t_not_small");
  if (!(rescaled.alpha < thresholds.alpha_max)) flags.emplace_back("alpha_not_small");
  if (!(sigma * separation_time < thresholds.sigma_a_max)) flags.emplace_back("sigma_a_not_small");
  return flags;
}

void check_inputs(double temperature, double sigma, double separation_time) {
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw ValidationError("temperature: must be finite and >= 0");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("sigma: must be finite and > 0");
  }
  if (!(separation_time > 0.0) || !std::isfinite(separation_time)) {
    throw ValidationError("separation: must be finite and > 0");
  }
}

// ln(1 - r^2 e^{-y}) without losing the small gap 1 - r^2 e^{-y}.
double log_gap(double r2, double y) {
  const double x = r2 * std::exp(-y);
  if (x < 0.5) return std::log1p(-x);
  return std::log(-std::expm1(std::log(r2) - y));
}

}  // namespace

RescaledTemperature RescaledTemperature::from(double temperature, double sigma,
                                              double separation_time) {
  return {2.0 * kPi * temperature / sigma, 2.0 * separation_time * sigma};
}

ModePrefactor ModePrefactor::from(double sigma, double separation_time) {
  const double a = separation_time;
  return {1.0 / (8.0 * kPi * a * a), sigma * sigma / (2.0 * kPi)};
}

CorrectionTerms assemble_correction(const AsymptoticCoefficients& c, double t, double prefactor) {
  if (!(t >= 0.0)) {
    throw ValidationError("assemble_correction: t must be >= 0");
  }
  CorrectionTerms terms;
  terms.linear = prefactor * (-c.c1 * t / 12.0);
  terms.three_halves = prefactor * kZeta.zeta_minus_3_2 * c.c_three_halves * std::pow(t, 1.5);
  terms.log = prefactor * kZeta.zeta_3 * c.c2_log * t * t / (4.0 * kPi * kPi);
  terms.cubic = prefactor * c.c3 * t * t * t / 120.0;
  return terms;
}

AsymptoticCoefficients tm_coefficients(double /*alpha*/, double /*eps_bar*/) {
  AsymptoticCoefficients c;
  c.polarisation = Polarisation::TM;
  c.c0 = -kZeta.zeta_3;  // -Li3(A_0), A_0 = 1
  c.c1 = 2.0 * kPi * kPi / 3.0;
  c.c2_log = 8.0;
  return c;
}

AsymptoticCoefficients te_coefficients(double alpha) {
  AsymptoticCoefficients c;
  c.polarisation = Polarisation::TE;
  c.c1 = -(2.0 * std::numbers::ln2 - 1.0) / 4.0;
  c.c2_log = -0.25;
  c.c_three_halves = alpha / 12.0;
  return c;
}

double ClosedFormCorrection::total_si() const { return free_energy_to_si(total()); }

double ClosedFormCorrection::entropy() const {
  if (temperature == 0.0) return 0.0;
  return -(2.0 * t2 + 2.5 * t52 + 3.0 * t3) / temperature;
}

ClosedFormCorrection delta_f_tm(double temperature, double sigma, double separation_time,
                                const ValidityThresholds& thresholds) {
  check_inputs(temperature, sigma, separation_time);
  const double a2 = separation_time * separation_time;
  const double t2 = temperature * temperature;
  ClosedFormCorrection result;
  result.temperature = temperature;
  result.t2 = -kPi * kPi * t2 / (72.0 * sigma * a2);
  result.t3 = kZeta.zeta_3 * t2 * temperature / (kPi * sigma * sigma * a2);
  result.flags = validity_flags(temperature, sigma, separation_time, thresholds);
  return result;
}

ClosedFormCorrection delta_f_te(double temperature, double sigma, double separation_time,
                                const ValidityThresholds& thresholds) {
  check_inputs(temperature, sigma, separation_time);
  ClosedFormCorrection result;
  result.temperature = temperature;
  result.t2 = sigma * temperature * temperature * (2.0 * std::numbers::ln2 - 1.0) / 48.0;
  result.t52 = std::sqrt(2.0 * kPi) * kZeta.zeta_minus_3_2 * separation_time *
               std::pow(sigma, 1.5) * std::pow(temperature, 2.5) / 6.0;
  result.t3 = -kZeta.zeta_3 * temperature * temperature * temperature / (8.0 * kPi);
  result.flags = validity_flags(temperature, sigma, separation_time, thresholds);
  return result;
}

ConstantLimits constant_limits(const LeadingExponent& exponent) {
  if (!limits_are_constant(exponent)) {
    throw ValidationError("constant_limits: lambda = -2 limits depend on kappa");
  }
  const auto pair = zero_frequency_limits<double>(exponent, 1.0);
  return {pair.r_s, pair.r_p};
}

double residual_entropy_general(const ReflectionLimit& before, const ReflectionLimit& after,
                                double separation_time, const NumericsSettings& numerics) {
  if (!(separation_time > 0.0)) {
    throw ValidationError("residual_entropy_general: separation must be > 0");
  }
  numerics.validate();
  const double a = separation_time;
  using Value = Eigen::Array<double, 2, 1>;
  auto integrand = [&](double y) -> Value {
    const double kappa = y / (2.0 * a);
    const auto r1 = before(kappa);
    const auto r2 = after(kappa);
    auto piece = [y](double first, double second) {
      if (first * first == second * second) return 0.0;
      return y * (log_gap(second * second, y) - log_gap(first * first, y));
    };
    return Value(piece(r1.r_s, r2.r_s), piece(r1.r_p, r2.r_p));
  };
  const double upper = std::max(60.0, std::log(1.0 / numerics.rel_tol) + 25.0);
  const auto breakpoints = geometric_breakpoints<double>(1e-14, upper, 3.0);
  const GaussLegendre<double> rule(10);
  const auto result =
      adaptive_integrate(integrand, std::span<const double>(breakpoints), rule, numerics.rel_tol,
                         numerics.abs_tol_floor, numerics.quadrature_max_depth);
  // dkappa kappa = dy y / (4 a^2); overall 1 / (4 pi).
  const double prefactor = 1.0 / (16.0 * kPi * a * a);
  const double value = prefactor * result.value.sum();
  if (!result.converged) {
    throw NumericalError("residual_entropy_general: quadrature did not reach rel_tol", value,
                         prefactor * result.error);
  }
  return value;
}

double residual_entropy_general(const LeadingExponent& before, const LeadingExponent& after,
                                double separation_time, const NumericsSettings& numerics) {
  return residual_entropy_general(
      [before](double kappa) { return zero_frequency_limits<double>(before, kappa); },
      [after](double kappa) { return zero_frequency_limits<double>(after, kappa); },
      separation_time, numerics);
}

double residual_entropy_closed(const ConstantLimits& before, const ConstantLimits& after,
                               double separation_time) {
  if (!(separation_time > 0.0)) {
    throw ValidationError("residual_entropy_closed: separation must be > 0");
  }
  for (const double r : {before.r_s, before.r_p, after.r_s, after.r_p}) {
    if (!(std::abs(r) <= 1.0)) {
      throw ValidationError("residual_entropy_closed: reflection limits must lie in [-1, 1]");
    }
  }
  auto li3 = [](double r) { return polylog<double>(3, r * r); };
  const double sum = li3(before.r_s) - li3(after.r_s) + li3(before.r_p) - li3(after.r_p);
  return sum / (16.0 * kPi * separation_time * separation_time);
}

double mim_limit_check(double tilde_omega_times_a, const NumericsSettings& numerics) {
  if (!(tilde_omega_times_a > 0.0)) {
    throw ValidationError("mim_limit_check: tilde_omega * a must be > 0");
  }
  const double entropy = residual_entropy_general(
      LeadingExponent::minus_one(), LeadingExponent::minus_two(tilde_omega_times_a), 1.0, numerics);
  return entropy / (-kZeta.zeta_3 / (16.0 * kPi));
}

}  // namespace lifshitz
