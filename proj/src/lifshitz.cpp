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

#include "lifshitz/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lifshitz/error.hpp"
#include "lifshitz/matsubara.hpp"
#include "lifshitz/summation.hpp"
#include "lifshitz/units.hpp"

namespace lifshitz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive_temperature(const GapConfiguration& config, const char* operation) {
  config.validate();
  if (!(config.temperature > 0.0)) {
    throw ValidationError(std::string(operation) + ": temperature must be > 0");
  }
}

// Upper bound on sum_{m > M} |h_s + h_p|(zeta_m), using |ln(1 - r^2 e^{-y})| <=
// -ln(1 - e^{-y}) <= e^{-y} / (1 - e^{-y_M}) for y >= y_M.
double matsubara_tail_bound(double y_m, double step, double scale) {
  const double decay = std::exp(-y_m);
  return 2.0 * scale * (y_m + 2.0) * decay / (step * (1.0 - decay));
}

}  // namespace

ModeIntegral mode_integral(const PermittivityModel& material, double separation_time, double zeta,
                           const NumericsSettings& numerics) {
  validate(material);
  numerics.validate();
  if (!(separation_time > 0.0)) {
    throw ValidationError("mode_integral: separation must be > 0");
  }
  if (!(zeta >= 0.0) || !std::isfinite(zeta)) {
    throw ValidationError("mode_integral: zeta must be finite and >= 0");
  }
  const ModeKernel<double> kernel(material, separation_time, numerics);
  const auto result = kernel.adaptive(zeta);
  if (!result.converged) {
    throw NumericalError("mode_integral: quadrature did not reach rel_tol within "
                         "quadrature_max_depth",
                         result.value.sum(), result.error);
  }
  return {to_pair(result.value), result.error};
}

FreeEnergyResult free_energy(const GapConfiguration& config) {
  require_positive_temperature(config, "free_energy");
  const NumericsSettings& numerics = config.numerics;
  const double temperature = config.temperature;
  const double a = config.separation_time;
  const ModeKernel<double> kernel(config.material, a, numerics, 16);
  const ModeKernel<double> coarse(config.material, a, numerics, 10);
  const double step = kTwoPi * temperature * 2.0 * a;  // y0 per unit m

  FreeEnergyResult result;
  result.temperature = temperature;
  result.settings_echo = numerics;

  CompensatedSum<double> sum_s;
  CompensatedSum<double> sum_p;
  auto record = [&](long m, double zeta, const ModePair<double>& value, double weight) {
    const ModePair<double> check = m == 0 ? coarse.zero_frequency() : coarse(zeta);
    result.terms.push_back(
        {m, zeta, value(0), value(1), (value - check).abs().sum()});
    sum_s += weight * value(0);
    sum_p += weight * value(1);
  };

  record(0, 0.0, kernel.zero_frequency(), 0.5);
  int small_terms = 0;
  double previous = 0.0;
  double tail_bound = 0.0;
  for (long m = 1;; ++m) {
    const double partial = std::abs(sum_s.value() + sum_p.value());
    if (m > numerics.max_matsubara_terms) {
      const double prefactor = temperature / kTwoPi;
      throw NumericalError("free_energy: Matsubara sum not converged within max_matsubara_terms",
                           prefactor * (sum_s.value() + sum_p.value()), prefactor * tail_bound);
    }
    const double zeta = kTwoPi * static_cast<double>(m) * temperature;
    const ModePair<double> value = kernel(zeta);
    record(m, zeta, value, 1.0);
    const double term = std::abs(value.sum());
    small_terms = term < numerics.rel_tol * partial ? small_terms + 1 : 0;
    tail_bound = matsubara_tail_bound(static_cast<double>(m) * step, step, kernel.scale());
    if (small_terms >= 3 && tail_bound < numerics.rel_tol * partial) {
      const double ratio = previous > 0.0 ? term / previous : 0.0;
      const double estimate = ratio > 0.0 && ratio < 1.0 ? value.sum() * ratio / (1.0 - ratio) : 0.0;
      result.truncation_tail_estimate = temperature / kTwoPi * estimate;
      result.truncation_tail_bound = temperature / kTwoPi * tail_bound;
      break;
    }
    previous = term;
  }

  const double prefactor = temperature / kTwoPi;
  result.per_polarisation = {prefactor * sum_s.value(), prefactor * sum_p.value()};
  result.total = result.per_polarisation.total();
  result.total_si = free_energy_to_si(result.total);
  return result;
}

ZeroTemperatureResult free_energy_zero_t(const GapConfiguration& config) {
  config.validate();
  const NumericsSettings& numerics = config.numerics;
  const double a = config.separation_time;
  const ModeKernel<double> kernel(config.material, a, numerics, 16);
  using Value = Eigen::Array<double, 3, 1>;

  bool inner_failed = false;
  double inner_worst = 0.0;
  auto integrand = [&](double s) -> Value {
    const auto inner = kernel.adaptive(s / (2.0 * a));
    if (!inner.converged) {
      inner_failed = true;
      inner_worst = std::max(inner_worst, inner.error);
    }
    return Value(inner.value(0), inner.value(1), inner.error);
  };
  const double upper = std::max(60.0, std::log(1.0 / numerics.rel_tol) + 25.0);
  const auto breakpoints = geometric_breakpoints<double>(1e-12, upper, 3.0);
  const GaussLegendre<double> rule(10);
  const auto outer =
      adaptive_integrate(integrand, std::span<const double>(breakpoints), rule, numerics.rel_tol,
                         numerics.abs_tol_floor * kernel.scale(), numerics.quadrature_max_depth);

  // dzeta = ds / 2a, and the 1/(4 pi^2) prefactor.
  const double prefactor = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi * 2.0 * a);
  ZeroTemperatureResult result;
  result.value = {prefactor * outer.value(0), prefactor * outer.value(1)};
  result.error_estimate = prefactor * (outer.error + std::abs(outer.value(2)));
  if (!outer.converged || inner_failed) {
    throw NumericalError("free_energy_zero_t: quadrature did not reach rel_tol",
                         result.total(), std::max(result.error_estimate, inner_worst));
  }
  return result;
}

long coherent_term_count(const GapConfiguration& config) {
  const double step = kTwoPi * config.temperature * 2.0 * config.separation_time;
  const double cutoff = std::max(40.0, std::log(1.0 / config.numerics.rel_tol) + 25.0);
  return static_cast<long>(std::ceil(cutoff / step));
}

template <typename Scalar>
DeltaFreeEnergy delta_free_energy(const GapConfiguration& config) {
  require_positive_temperature(config, "delta_free_energy");
  const long last = coherent_term_count(config);
  if (last > config.numerics.max_matsubara_terms) {
    throw NumericalError("delta_free_energy: needs " + std::to_string(last) +
                             " Matsubara terms, above max_matsubara_terms",
                         std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::infinity());
  }
  const ModeKernel<Scalar> kernel(config.material, config.separation_time, config.numerics, 16);
  const Scalar temperature = config.temperature;
  const Scalar zeta_step = std::numbers::pi_v<Scalar> * Scalar(2) * temperature;

  SumMinusIntegralOptions<Scalar> options;
  options.last_index = last;
  options.decay_rate = zeta_step * Scalar(2) * Scalar(config.separation_time);
  const auto diff = sum_minus_integral<Scalar, 2>(
      kernel.zero_frequency(), [&](Scalar m) { return kernel(m * zeta_step); }, options);

  const Scalar prefactor = temperature / (Scalar(2) * std::numbers::pi_v<Scalar>);
  const ModePair<Scalar> rounding =
      Scalar(16) * std::numeric_limits<Scalar>::epsilon() * diff.magnitude;
  DeltaFreeEnergy result;
  result.value = to_pair<Scalar>(prefactor * diff.value);
  result.error_estimate = to_pair<Scalar>(prefactor * (diff.error_estimate + rounding));
  result.terms_used = last;
  return result;
}

template DeltaFreeEnergy delta_free_energy<double>(const GapConfiguration&);
template DeltaFreeEnergy delta_free_energy<long double>(const GapConfiguration&);

EntropyResult entropy_numeric(const std::function<double(double)>& free_energy_of_t,
                              double temperature, double step_fraction) {
  if (!(temperature > 0.0)) {
    throw ValidationError("entropy_numeric: temperature must be > 0");
  }
  if (!(step_fraction > 0.0 && step_fraction < 1.0)) {
    throw ValidationError("entropy_numeric: step_fraction must lie in (0, 1)");
  }
  const double h = step_fraction * temperature;
  const double wide = -(free_energy_of_t(temperature + h) - free_energy_of_t(temperature - h)) / (2 * h);
  const double narrow =
      -(free_energy_of_t(temperature + h / 2) - free_energy_of_t(temperature - h / 2)) / h;
  EntropyResult result;
  result.raw_step = wide;
  result.raw_half_step = narrow;
  result.entropy = (4.0 * narrow - wide) / 3.0;
  return result;
}

EntropyResult entropy_numeric(const GapConfiguration& config, double step_fraction) {
  require_positive_temperature(config, "entropy_numeric");
  if (!(step_fraction > 0.0 && step_fraction < 1.0)) {
    throw ValidationError("entropy_numeric: step_fraction must lie in (0, 1)");
  }
  const double temperature = config.temperature;
  const double h = step_fraction * temperature;
  auto delta = [&](double t) { return delta_free_energy<long double>(config.with_temperature(t)); };
  const DeltaFreeEnergy plus = delta(temperature + h);
  const DeltaFreeEnergy minus = delta(temperature - h);
  const DeltaFreeEnergy plus_half = delta(temperature + h / 2);
  const DeltaFreeEnergy minus_half = delta(temperature - h / 2);

  auto richardson = [&](double f_plus, double f_minus, double f_plus_half, double f_minus_half) {
    const double wide = -(f_plus - f_minus) / (2 * h);
    const double narrow = -(f_plus_half - f_minus_half) / h;
    return std::pair{wide, narrow};
  };
  const auto [wide_s, narrow_s] =
      richardson(plus.value.s, minus.value.s, plus_half.value.s, minus_half.value.s);
  const auto [wide_p, narrow_p] =
      richardson(plus.value.p, minus.value.p, plus_half.value.p, minus_half.value.p);

  EntropyResult result;
  result.per_polarisation = {(4.0 * narrow_s - wide_s) / 3.0, (4.0 * narrow_p - wide_p) / 3.0};
  result.entropy = result.per_polarisation.total();
  result.raw_step = wide_s + wide_p;
  result.raw_half_step = narrow_s + narrow_p;

  const double noise = plus.error_estimate.total() + minus.error_estimate.total() +
                       plus_half.error_estimate.total() + minus_half.error_estimate.total();
  const double signal = std::abs(plus_half.value.total() - minus_half.value.total());
  result.precision_warning = signal < 100.0 * noise;
  return result;
}

}  // namespace lifshitz
