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

#include "lifshitz/error.hpp"
#include "lifshitz/materials.hpp"

namespace lifshitz {

template <typename Scalar>
struct ReflectionPair {
  Scalar r_s;  // TE
  Scalar r_p;  // TM
};

namespace detail {

// For q = (zeta/kappa)^2 (eps - 1) >= 0 the TE coefficient
// (1 - sqrt(1+q)) / (1 + sqrt(1+q)) rewritten without cancellation.
template <typename Scalar>
Scalar te_from_q(Scalar q) {
  using std::sqrt;
  const Scalar root = Scalar(1) + sqrt(Scalar(1) + q);
  return -q / (root * root);
}

}  // namespace detail

/// Fresnel coefficients in terms of the ratio zeta/kappa in (0, 1].
///
/// This is the form the quadrature kernels use: with kappa = y / 2a and
/// zeta = y0 / 2a only y0/y is needed.
template <typename Scalar>
ReflectionPair<Scalar> fresnel_from_ratio(Scalar eps, Scalar zeta_over_kappa) {
  using std::isinf;
  using std::sqrt;
  if (isinf(eps)) {
    return {Scalar(-1), Scalar(1)};
  }
  const Scalar q = zeta_over_kappa * zeta_over_kappa * (eps - Scalar(1));
  const Scalar root = sqrt(Scalar(1) + q);  // kappa_tilde / kappa
  return {detail::te_from_q(q), (eps - root) / (eps + root)};
}

/// r_s and r_p on the imaginary frequency axis for kappa >= zeta > 0, eps >= 1.
/// An infinite eps is the ideal-metal override (r_s, r_p) = (-1, 1).
template <typename Scalar>
ReflectionPair<Scalar> fresnel(Scalar eps, Scalar kappa, Scalar zeta) {
  if (!(zeta > Scalar(0))) {
    throw ValidationError("fresnel: zeta must be > 0");
  }
  if (kappa < zeta) {
    throw ValidationError("fresnel: kappa must be >= zeta");
  }
  if (!(eps >= Scalar(1))) {
    throw ValidationError("fresnel: eps must be >= 1");
  }
  return fresnel_from_ratio(eps, zeta / kappa);
}

/// TE limit for lambda = -2: -(kappa/w)^2 (sqrt(1 + w^2/kappa^2) - 1)^2, in [-1, 0].
template <typename Scalar>
Scalar tilde_r_s(Scalar kappa, Scalar tilde_omega) {
  const Scalar x = tilde_omega / kappa;
  return detail::te_from_q(x * x);
}

/// Zero-frequency reflection limits as a function of the leading exponent.
template <typename Scalar>
ReflectionPair<Scalar> zero_frequency_limits(const LeadingExponent& exponent, Scalar kappa) {
  switch (exponent.lambda) {
    case Exponent::Zero: {
      const Scalar eps_bar = exponent.eps_bar_limit.value_or(1.0);
      return {Scalar(0), (eps_bar - Scalar(1)) / (eps_bar + Scalar(1))};
    }
    case Exponent::MinusOne:
      return {Scalar(0), Scalar(1)};
    case Exponent::MinusTwo:
      return {tilde_r_s(kappa, Scalar(exponent.tilde_omega.value_or(0.0))), Scalar(1)};
    case Exponent::BelowMinusTwo:
      return {Scalar(-1), Scalar(1)};
  }
  return {Scalar(0), Scalar(0)};
}

/// True when the zero-frequency limits do not depend on kappa.
inline bool limits_are_constant(const LeadingExponent& exponent) {
  return exponent.lambda != Exponent::MinusTwo;
}

}  // namespace lifshitz
