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
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "lifshitz/config.hpp"
#include "lifshitz/materials.hpp"
#include "lifshitz/quadrature.hpp"
#include "lifshitz/reflection.hpp"

namespace lifshitz {

/// (TE, TM) = (s, p) pair in the working precision.
template <typename Scalar>
using ModePair = Eigen::Array<Scalar, 2, 1>;

struct PolarisationPair {
  double s = 0.0;
  double p = 0.0;

  double total() const { return s + p; }
};

template <typename Scalar>
PolarisationPair to_pair(const ModePair<Scalar>& v) {
  return {static_cast<double>(v(0)), static_cast<double>(v(1))};
}

/// The inner integral of the Lifshitz formula for one Matsubara frequency,
///
///   h_q(zeta) = int_zeta^inf dkappa kappa ln(1 - r_q^2 exp(-2 kappa a)),
///
/// in (rad/s)^2, for both polarisations at once. With y = 2 kappa a and
/// y0 = 2 zeta a this is (1/4a^2) int_{y0}^inf y ln(1 - r_q^2 e^{-y}) dy; the
/// kernel integrates over w = y - y0 on a fixed geometric partition of
/// [0, W], so h(zeta) comes out as a smooth function of zeta. At zeta = 0 the
/// zero-frequency reflection limits are used instead of the Fresnel formulas.
template <typename Scalar>
class ModeKernel {
 public:
  ModeKernel(const PermittivityModel& material, double separation_time,
             const NumericsSettings& numerics, int gauss_points = 16)
      : material_(material),
        exponent_(classify_exponent(material)),
        separation_time_(separation_time),
        numerics_(numerics),
        rule_(gauss_points),
        adaptive_rule_(10),
        breakpoints_(make_breakpoints(numerics.rel_tol)),
        composite_(breakpoints_, rule_) {
    using std::exp;
    exp_minus_w_.reserve(composite_.size());
    for (const Scalar w : composite_.nodes()) exp_minus_w_.push_back(exp(-w));
    zero_frequency_ = integrate_fixed_zero();
  }

  /// 1 / (4 a^2) in (rad/s)^2.
  Scalar scale() const {
    const Scalar a = separation_time_;
    return Scalar(1) / (Scalar(4) * a * a);
  }

  Scalar separation_time() const { return separation_time_; }
  const LeadingExponent& exponent() const { return exponent_; }
  const PermittivityModel& material() const { return material_; }
  std::span<const Scalar> breakpoints() const { return breakpoints_; }

  /// Fixed-rule h(zeta); zeta = 0 routes through the zero-frequency limits.
  ModePair<Scalar> operator()(Scalar zeta) const {
    using std::exp;
    if (zeta == Scalar(0)) return zero_frequency_;
    const Scalar y0 = Scalar(2) * zeta * separation_time_;
    const Scalar eps = permittivity<Scalar>(material_, zeta);
    const Scalar e0 = exp(-y0);
    Scalar sum_s = 0;
    Scalar sum_p = 0;
    const auto nodes = composite_.nodes();
    const auto weights = composite_.weights();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Scalar y = y0 + nodes[i];
      const ModePair<Scalar> v = integrand_positive(y, y0 / y, eps, e0 * exp_minus_w_[i]);
      sum_s += weights[i] * v(0);
      sum_p += weights[i] * v(1);
    }
    return ModePair<Scalar>(sum_s, sum_p) * scale();
  }

  ModePair<Scalar> zero_frequency() const { return zero_frequency_; }

  /// Adaptive evaluation with an error estimate, in (rad/s)^2.
  QuadratureResult<Scalar, ModePair<Scalar>> adaptive(Scalar zeta) const {
    using std::exp;
    QuadratureResult<Scalar, ModePair<Scalar>> result;
    const Scalar rel_tol = numerics_.rel_tol;
    const Scalar abs_tol = numerics_.abs_tol_floor;
    if (zeta == Scalar(0)) {
      result = adaptive_integrate(
          [this](Scalar w) { return integrand_zero(w, exp(-w)); },
          std::span<const Scalar>(breakpoints_), adaptive_rule_, rel_tol, abs_tol,
          numerics_.quadrature_max_depth);
    } else {
      const Scalar y0 = Scalar(2) * zeta * separation_time_;
      const Scalar eps = permittivity<Scalar>(material_, zeta);
      result = adaptive_integrate(
          [&](Scalar w) {
            const Scalar y = y0 + w;
            return integrand_positive(y, y0 / y, eps, exp(-y));
          },
          std::span<const Scalar>(breakpoints_), adaptive_rule_, rel_tol, abs_tol,
          numerics_.quadrature_max_depth);
    }
    result.value *= scale();
    result.error *= scale();
    return result;
  }

 private:
  // ln(1 - r^2 e^{-y}) where r = (1-u)/(1+u) in magnitude, so that
  // ln r^2 = -4 atanh(u) stays accurate as |r| -> 1.
  static Scalar log_term(Scalar r2, Scalar u, Scalar y, Scalar ey) {
    using std::atanh;
    using std::expm1;
    using std::log;
    using std::log1p;
    const Scalar x = r2 * ey;
    if (x < Scalar(0.5)) return log1p(-x);
    return log(-expm1(Scalar(-4) * atanh(u) - y));
  }

  ModePair<Scalar> integrand_positive(Scalar y, Scalar ratio, Scalar eps, Scalar ey) const {
    using std::isinf;
    using std::sqrt;
    if (isinf(eps)) {
      const Scalar v = y * log_term(Scalar(1), Scalar(0), y, ey);
      return ModePair<Scalar>(v, v);
    }
    const Scalar q = ratio * ratio * (eps - Scalar(1));
    const Scalar root = sqrt(Scalar(1) + q);
    const Scalar r_s = detail::te_from_q(q);
    const Scalar u_p = root / eps;
    const Scalar r_p = (Scalar(1) - u_p) / (Scalar(1) + u_p);
    return ModePair<Scalar>(y * log_term(r_s * r_s, Scalar(1) / root, y, ey),
                            y * log_term(r_p * r_p, u_p, y, ey));
  }

  ModePair<Scalar> integrand_zero(Scalar y, Scalar ey) const {
    using std::sqrt;
    Scalar te = 0;
    Scalar tm = 0;
    switch (exponent_.lambda) {
      case Exponent::Zero: {
        const Scalar u = Scalar(1) / Scalar(exponent_.eps_bar_limit.value_or(1.0));
        const Scalar r = (Scalar(1) - u) / (Scalar(1) + u);
        tm = r == Scalar(0) ? Scalar(0) : y * log_term(r * r, u, y, ey);
        break;
      }
      case Exponent::MinusOne:
        // TE vanishes identically at zero frequency.
        tm = y * log_term(Scalar(1), Scalar(0), y, ey);
        break;
      case Exponent::MinusTwo: {
        const Scalar x = Scalar(2) * separation_time_ * Scalar(exponent_.tilde_omega.value()) / y;
        const Scalar p = x * x;
        const Scalar r_s = detail::te_from_q(p);
        te = y * log_term(r_s * r_s, Scalar(1) / sqrt(Scalar(1) + p), y, ey);
        tm = y * log_term(Scalar(1), Scalar(0), y, ey);
        break;
      }
      case Exponent::BelowMinusTwo:
        te = tm = y * log_term(Scalar(1), Scalar(0), y, ey);
        break;
    }
    return ModePair<Scalar>(te, tm);
  }

  ModePair<Scalar> integrate_fixed_zero() const {
    Scalar sum_s = 0;
    Scalar sum_p = 0;
    const auto nodes = composite_.nodes();
    const auto weights = composite_.weights();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const ModePair<Scalar> v = integrand_zero(nodes[i], exp_minus_w_[i]);
      sum_s += weights[i] * v(0);
      sum_p += weights[i] * v(1);
    }
    return ModePair<Scalar>(sum_s, sum_p) * scale();
  }

  static std::vector<Scalar> make_breakpoints(double rel_tol) {
    using std::log;
    const Scalar upper = std::max(Scalar(60), Scalar(log(1.0 / rel_tol) + 20.0));
    return geometric_breakpoints<Scalar>(Scalar(1e-14), upper, Scalar(3));
  }

  PermittivityModel material_;
  LeadingExponent exponent_;
  Scalar separation_time_;
  NumericsSettings numerics_;
  GaussLegendre<Scalar> rule_;
  GaussLegendre<Scalar> adaptive_rule_;
  std::vector<Scalar> breakpoints_;
  CompositeRule<Scalar> composite_;
  std::vector<Scalar> exp_minus_w_;
  ModePair<Scalar> zero_frequency_;
};

/// One Matsubara term of the free-energy sum.
struct ModeTerm {
  long m = 0;
  double zeta_m = 0.0;   // rad/s
  double value_s = 0.0;  // (rad/s)^2
  double value_p = 0.0;
  double quadrature_error_estimate = 0.0;
};

struct FreeEnergyResult {
  double temperature = 0.0;    // rad/s
  double total = 0.0;          // (rad/s)^3
  double total_si = 0.0;       // J/m^2
  PolarisationPair per_polarisation;
  std::vector<ModeTerm> terms;
  /// Estimated contribution of the omitted terms (same units as total).
  double truncation_tail_estimate = 0.0;
  /// Rigorous bound on the omitted terms.
  double truncation_tail_bound = 0.0;
  NumericsSettings settings_echo;
};

struct ModeIntegral {
  PolarisationPair value;  // (rad/s)^2
  double error_estimate = 0.0;
};

struct ZeroTemperatureResult {
  PolarisationPair value;  // (rad/s)^3
  double error_estimate = 0.0;

  double total() const { return value.total(); }
};

struct DeltaFreeEnergy {
  PolarisationPair value;  // F(T) - F(0), (rad/s)^3
  PolarisationPair error_estimate;
  long terms_used = 0;
};

struct EntropyResult {
  double entropy = 0.0;  // (rad/s)^2, Richardson-extrapolated
  PolarisationPair per_polarisation;
  double raw_step = 0.0;       // central difference with step h
  double raw_half_step = 0.0;  // central difference with step h/2
  bool precision_warning = false;
};

/// Adaptive h_q(zeta). Throws NumericalError if rel_tol is not met within
/// quadrature_max_depth bisections.
ModeIntegral mode_integral(const PermittivityModel& material, double separation_time, double zeta,
                           const NumericsSettings& numerics);

/// Direct Matsubara sum (T / 2pi) Sum'_m [h_s + h_p](2 pi m T).
FreeEnergyResult free_energy(const GapConfiguration& config);

/// (1 / 4pi^2) int_0^inf dzeta [h_s + h_p](zeta), by iterated adaptive quadrature.
ZeroTemperatureResult free_energy_zero_t(const GapConfiguration& config);

/// F(T) - F(0) from the sum-minus-integral of one shared integrand.
template <typename Scalar = long double>
DeltaFreeEnergy delta_free_energy(const GapConfiguration& config);

extern template DeltaFreeEnergy delta_free_energy<double>(const GapConfiguration&);
extern template DeltaFreeEnergy delta_free_energy<long double>(const GapConfiguration&);

/// Number of Matsubara terms delta_free_energy will need at this temperature.
long coherent_term_count(const GapConfiguration& config);

/// S = -dF/dT by central differences at h and h/2 plus one Richardson step.
/// F(0) does not depend on T, so the differences are taken on F - F(0).
EntropyResult entropy_numeric(const GapConfiguration& config, double step_fraction);

/// The same differencing scheme for an arbitrary F(T).
EntropyResult entropy_numeric(const std::function<double(double)>& free_energy_of_t,
                              double temperature, double step_fraction);

}  // namespace lifshitz
