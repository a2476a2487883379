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

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lifshitz/error.hpp"

namespace lifshitz {

struct ZetaConstants {
  double zeta_3;
  double zeta_minus_3_2;
};

/// zeta(3) and zeta(-3/2). Cross-checked in the tests against a direct
/// series and the functional equation respectively.
inline constexpr ZetaConstants kZeta{1.2020569031595942853997, -0.025485201889833035949543};

inline constexpr double zeta_minus_three_halves() { return kZeta.zeta_minus_3_2; }

namespace detail {

// B_0 .. B_30, even indices only: kBernoulliEven[k] = B_{2k}.
inline constexpr std::array<std::array<long double, 2>, 16> kBernoulliEven{{
    {1.0L, 1.0L},
    {1.0L, 6.0L},
    {-1.0L, 30.0L},
    {1.0L, 42.0L},
    {-1.0L, 30.0L},
    {5.0L, 66.0L},
    {-691.0L, 2730.0L},
    {7.0L, 6.0L},
    {-3617.0L, 510.0L},
    {43867.0L, 798.0L},
    {-174611.0L, 330.0L},
    {854513.0L, 138.0L},
    {-236364091.0L, 2730.0L},
    {8553103.0L, 6.0L},
    {-23749461029.0L, 870.0L},
    {8615841276005.0L, 14322.0L},
}};

template <typename Scalar>
Scalar bernoulli_even(int k) {
  const auto& entry = kBernoulliEven.at(static_cast<std::size_t>(k));
  return static_cast<Scalar>(entry[0] / entry[1]);
}

}  // namespace detail

/// Bernoulli number B_{2k} for 2k in {2, 4, ..., 20}.
template <typename Scalar = double>
Scalar bernoulli(int two_k) {
  if (two_k < 2 || two_k > 20 || two_k % 2 != 0) {
    throw ValidationError("bernoulli: index must be even and in [2, 20], got " +
                          std::to_string(two_k));
  }
  return detail::bernoulli_even<Scalar>(two_k / 2);
}

/// zeta(n) for integer n >= 2 via Euler-Maclaurin on the Dirichlet series.
template <typename Scalar = double>
Scalar zeta_integer(int n) {
  using std::pow;
  if (n < 2) {
    throw ValidationError("zeta_integer: n must be >= 2");
  }
  constexpr int cutoff = 16;
  Scalar sum = 0;
  for (int l = cutoff - 1; l >= 1; --l) {
    sum += pow(Scalar(l), Scalar(-n));
  }
  const Scalar big_n = cutoff;
  sum += pow(big_n, Scalar(1 - n)) / Scalar(n - 1) + pow(big_n, Scalar(-n)) / Scalar(2);
  // sum_k B_2k / (2k)! * n (n+1) ... (n+2k-2) N^{-n-2k+1}
  Scalar rising = Scalar(n);  // n (n+1) ... (n+2k-2)
  Scalar factorial = 2;       // (2k)!
  for (int k = 1; k <= 12; ++k) {
    sum += detail::bernoulli_even<Scalar>(k) / factorial * rising *
           pow(big_n, Scalar(-n - 2 * k + 1));
    rising *= Scalar(n + 2 * k - 1) * Scalar(n + 2 * k);
    factorial *= Scalar(2 * k + 1) * Scalar(2 * k + 2);
  }
  return sum;
}

namespace detail {

template <typename Scalar>
Scalar polylog_series(int n, Scalar x) {
  using std::abs;
  using std::pow;
  Scalar sum = 0;
  Scalar power = x;
  for (int l = 1; l < 100000; ++l) {
    const Scalar term = power / pow(Scalar(l), Scalar(n));
    sum += term;
    if (abs(term) <= std::numeric_limits<Scalar>::epsilon() * abs(sum) * Scalar(0.25)) break;
    power *= x;
  }
  return sum;
}

// Expansion in mu = ln x around x = 1, valid for |mu| < 2 pi.
template <typename Scalar>
Scalar polylog_log_series(int n, Scalar x) {
  using std::abs;
  using std::log;
  const Scalar mu = log(x);
  Scalar harmonic = 0;
  for (int j = 1; j <= n - 1; ++j) harmonic += Scalar(1) / Scalar(j);

  Scalar sum = 0;
  Scalar power = 1;      // mu^k / k!
  for (int k = 0;; ++k) {
    if (k > 0) power *= mu / Scalar(k);
    Scalar term = 0;
    if (k == n - 1) {
      term = power * (harmonic - log(-mu));
    } else if (k < n - 1) {
      term = zeta_integer<Scalar>(n - k) * power;
    } else if (k == n) {
      term = Scalar(-0.5) * power;
    } else {
      const int j = k - n;  // zeta(-j)
      if (j % 2 == 1) {
        const int index = (j + 1) / 2;
        if (index >= static_cast<int>(kBernoulliEven.size())) break;
        term = -bernoulli_even<Scalar>(index) / Scalar(j + 1) * power;
      }
      if (j % 2 == 1 && abs(term) <= std::numeric_limits<Scalar>::epsilon() * abs(sum) * 0.01) {
        break;
      }
    }
    sum += term;
  }
  return sum;
}

// Cohen-Rodriguez Villegas-Zagier acceleration of the alternating series
// -sum_k (-1)^k y^{k+1} / (k+1)^n, y = -x in (0, 1].
template <typename Scalar>
Scalar polylog_alternating(int n, Scalar x) {
  using std::pow;
  using std::sqrt;
  const Scalar y = -x;
  constexpr int terms = 32;
  Scalar d = pow(Scalar(3) + sqrt(Scalar(8)), Scalar(terms));
  d = (d + Scalar(1) / d) / Scalar(2);
  Scalar b = -1;
  Scalar c = -d;
  Scalar s = 0;
  Scalar power = y;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    s += c * power / pow(Scalar(k + 1), Scalar(n));
    b = Scalar(k + terms) * Scalar(k - terms) * b / ((Scalar(k) + Scalar(0.5)) * Scalar(k + 1));
    power *= y;
  }
  return -s / d;
}

}  // namespace detail

/// Li_n(x) = sum_{l>=1} x^l / l^n for integer n >= 1 and x in [-1, 1].
template <typename Scalar = double>
Scalar polylog(int n, Scalar x) {
  using std::abs;
  using std::log1p;
  if (n < 1) {
    throw ValidationError("polylog: order must be >= 1");
  }
  if (!(abs(x) <= Scalar(1))) {
    throw ValidationError("polylog: argument must lie in [-1, 1]");
  }
  if (x == Scalar(1)) {
    if (n == 1) {
      throw ValidationError("polylog: Li_1(1) diverges");
    }
    return zeta_integer<Scalar>(n);
  }
  if (x == Scalar(0)) return Scalar(0);
  if (n == 1) return -log1p(-x);
  if (abs(x) <= Scalar(0.75)) return detail::polylog_series(n, x);
  if (x > Scalar(0)) return detail::polylog_log_series(n, x);
  return detail::polylog_alternating(n, x);
}

}  // namespace lifshitz
