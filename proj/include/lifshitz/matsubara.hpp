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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "lifshitz/quadrature.hpp"
#include "lifshitz/summation.hpp"

namespace lifshitz {

/// Component-wise compensated accumulator for small fixed-size Eigen arrays.
template <typename Scalar, int N>
class CompensatedArraySum {
 public:
  using Value = Eigen::Array<Scalar, N, 1>;

  CompensatedArraySum& operator+=(const Value& value) {
    for (int i = 0; i < N; ++i) parts_[static_cast<std::size_t>(i)] += value(i);
    return *this;
  }
  CompensatedArraySum& operator-=(const Value& value) { return *this += Value(-value); }

  Value value() const {
    Value out;
    for (int i = 0; i < N; ++i) out(i) = parts_[static_cast<std::size_t>(i)].value();
    return out;
  }

 private:
  std::array<CompensatedSum<Scalar>, N> parts_{};
};

template <typename Scalar>
struct SumMinusIntegralOptions {
  /// Last index M of the trapezoidal sum; the integral runs over [0, M].
  long last_index = 0;
  /// Decay rate of the summand per unit index (g ~ exp(-rate m)); caps the
  /// block width so each Gauss-Legendre block sees at most a few e-folds.
  Scalar decay_rate = 0;
  int gauss_points = 20;
  /// Number of dyadic panels grading [0, 1] towards the origin, where the
  /// summand may be non-analytic (half-integer powers, m^2 ln m).
  int graded_levels = 64;
};

template <typename Scalar, int N>
struct SumMinusIntegralResult {
  Eigen::Array<Scalar, N, 1> value;
  /// |difference| between the Gauss-Legendre integrals at two orders.
  Eigen::Array<Scalar, N, 1> error_estimate;
  /// Sum of |trapezoid| over blocks; bounds the scale of rounding.
  Eigen::Array<Scalar, N, 1> magnitude;
  long evaluations = 0;
};

/// Sum'_{m=0}^{M} g(m) - int_0^M g(m) dm, with the primed sum taking half
/// weight at both ends.
///
/// The difference is accumulated block by block (trapezoid minus integral on
/// [m_lo, m_hi]) so that no two large totals are ever subtracted. Blocks
/// double in width from [1, 2] until the cap set by the decay rate. The value
/// at m = 0 is passed separately because the summand may be defined there only
/// as a limit.
template <typename Scalar, int N, typename G>
SumMinusIntegralResult<Scalar, N> sum_minus_integral(const Eigen::Array<Scalar, N, 1>& g_at_zero,
                                                     G&& g,
                                                     const SumMinusIntegralOptions<Scalar>& options) {
  using Value = Eigen::Array<Scalar, N, 1>;
  using std::floor;
  const GaussLegendre<Scalar> high(options.gauss_points);
  const GaussLegendre<Scalar> low(std::max(4, (options.gauss_points * 2) / 3));
  const long last = std::max<long>(1, options.last_index);

  SumMinusIntegralResult<Scalar, N> result;
  result.error_estimate = Value::Zero();
  result.magnitude = Value::Zero();
  CompensatedArraySum<Scalar, N> total;

  auto integrate_both = [&](Scalar a, Scalar b, Value& hi, Value& lo) {
    hi = high.integrate(g, a, b);
    lo = low.integrate(g, a, b);
    result.evaluations += high.size() + low.size();
  };

  // Block [0, 1] with dyadic grading towards 0.
  {
    Value g_one = g(Scalar(1));
    result.evaluations += 1;
    CompensatedArraySum<Scalar, N> integral_hi;
    CompensatedArraySum<Scalar, N> integral_lo;
    Value hi, lo;
    Scalar upper = 1;
    for (int level = 0; level < options.graded_levels; ++level) {
      const Scalar lower = upper / Scalar(2);
      integrate_both(lower, upper, hi, lo);
      integral_hi += hi;
      integral_lo += lo;
      upper = lower;
    }
    integrate_both(Scalar(0), upper, hi, lo);
    integral_hi += hi;
    integral_lo += lo;
    const Value trapezoid = Scalar(0.5) * (g_at_zero + g_one);
    total += Value(trapezoid - integral_hi.value());
    result.error_estimate += (integral_hi.value() - integral_lo.value()).abs();
    result.magnitude += trapezoid.abs();
    if (last == 1) {
      result.value = total.value();
      return result;
    }
    // Carry g(1) into the next block's left end.
    Value left = g_one;
    long lo_index = 1;
    long width = 1;
    long max_width = 1;
    if (options.decay_rate > Scalar(0)) {
      const Scalar cap = floor(Scalar(6) / options.decay_rate);
      max_width = cap > Scalar(1e15) ? 1000000000000000L : std::max(1L, static_cast<long>(cap));
    } else {
      max_width = std::numeric_limits<long>::max() / 4;
    }
    while (lo_index < last) {
      const long hi_index = std::min(last, lo_index + width);
      CompensatedArraySum<Scalar, N> trapezoid_sum;
      trapezoid_sum += Scalar(0.5) * left;
      for (long m = lo_index + 1; m < hi_index; ++m) {
        trapezoid_sum += g(Scalar(m));
      }
      const Value right = g(Scalar(hi_index));
      result.evaluations += hi_index - lo_index;
      trapezoid_sum += Scalar(0.5) * right;
      integrate_both(Scalar(lo_index), Scalar(hi_index), hi, lo);
      const Value trapezoid = trapezoid_sum.value();
      total += Value(trapezoid - hi);
      result.error_estimate += (hi - lo).abs();
      result.magnitude += trapezoid.abs();
      left = right;
      lo_index = hi_index;
      width = std::min(2 * width, max_width);
    }
  }
  result.value = total.value();
  return result;
}

}  // namespace lifshitz
