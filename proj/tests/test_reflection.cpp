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

#include "doctest.h"
#include "lifshitz/error.hpp"
#include "lifshitz/materials.hpp"
#include "lifshitz/reflection.hpp"

using namespace lifshitz;

TEST_CASE("vacuum interface does not reflect") {
  for (const double ratio : {1.0, 0.3, 1e-4}) {
    const auto r = fresnel(1.0, 2.0e14, ratio * 2.0e14);
    CHECK(r.r_s == 0.0);
    CHECK(r.r_p == 0.0);
  }
}

TEST_CASE("normal incidence") {
  // kappa = zeta: kappa_tilde = kappa sqrt(eps).
  for (const double eps : {4.0, 2.25, 11.66, 1e3}) {
    const double root = std::sqrt(eps);
    const auto r = fresnel(eps, 5e13, 5e13);
    CHECK(r.r_s == doctest::Approx((1.0 - root) / (1.0 + root)).epsilon(1e-15));
    CHECK(r.r_p == doctest::Approx(-(1.0 - root) / (1.0 + root)).epsilon(1e-15));
  }
  const auto r = fresnel(4.0, 1.0, 1.0);
  CHECK(r.r_s == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(r.r_p == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("large permittivity approaches the ideal metal") {
  const auto r = fresnel(1e12, 1.0, 1.0);
  CHECK(std::abs(r.r_p - 1.0) < 1e-5);
  CHECK(std::abs(r.r_s + 1.0) < 1e-5);
  const auto ideal = fresnel(std::numeric_limits<double>::infinity(), 3.0, 1.0);
  CHECK(ideal.r_s == -1.0);
  CHECK(ideal.r_p == 1.0);
}

TEST_CASE("bounds on the imaginary axis") {
  for (const double eps : {1.0, 1.5, 12.0, 1e6}) {
    for (const double ratio : {1.0, 0.5, 1e-3, 1e-9}) {
      const auto r = fresnel(eps, 1.0, ratio);
      CHECK(r.r_s <= 0.0);
      CHECK(r.r_s >= -1.0);
      CHECK(r.r_p >= 0.0);
      CHECK(r.r_p <= 1.0);
      CHECK(r.r_s * r.r_s < 1.0);
      CHECK(r.r_p * r.r_p < 1.0);
    }
  }
}

TEST_CASE("TE coefficient keeps relative accuracy when it is tiny") {
  // q = (zeta/kappa)^2 (eps - 1) = 1e-20: r_s = -q/4 to leading order.
  const auto r = fresnel(2.0, 1.0, 1e-10);
  CHECK(r.r_s == doctest::Approx(-0.25e-20).epsilon(1e-12));
}

TEST_CASE("fresnel input validation") {
  CHECK_THROWS_AS(fresnel(2.0, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(fresnel(2.0, 0.5, 1.0), ValidationError);
  CHECK_THROWS_AS(fresnel(0.5, 1.0, 1.0), ValidationError);
}

TEST_CASE("plasma-model TE limit") {
  const double w = 7.0e15;
  CHECK(tilde_r_s(w, w) == doctest::Approx(-(3.0 - 2.0 * std::sqrt(2.0))).epsilon(1e-15));
  CHECK(tilde_r_s(w, w) == doctest::Approx(-0.171572875253810).epsilon(1e-14));
  CHECK(std::abs(tilde_r_s(1e4 * w, w)) <= 1e-6);
  const double small = 1e-4;
  CHECK(std::abs(tilde_r_s(small * w, w) + 1.0) <= 2.0 * small);
  CHECK(tilde_r_s(1e-12 * w, w) == doctest::Approx(-1.0).epsilon(1e-11));
}

TEST_CASE("zero-frequency limits by exponent") {
  const auto minus_one = zero_frequency_limits(LeadingExponent::minus_one(), 1e14);
  CHECK(minus_one.r_s == 0.0);
  CHECK(minus_one.r_p == 1.0);

  const auto zero = zero_frequency_limits(LeadingExponent::zero(11.66), 1e14);
  CHECK(zero.r_s == 0.0);
  CHECK(zero.r_p == doctest::Approx(10.66 / 12.66).epsilon(1e-15));
  CHECK(zero.r_p == doctest::Approx(0.8420221169036335).epsilon(1e-14));

  const auto below = zero_frequency_limits(LeadingExponent::below_minus_two(), 1e14);
  CHECK(below.r_s == -1.0);
  CHECK(below.r_p == 1.0);

  const double w = 3e15;
  const auto minus_two = zero_frequency_limits(LeadingExponent::minus_two(w), 2.0 * w);
  CHECK(minus_two.r_s == tilde_r_s(2.0 * w, w));
  CHECK(minus_two.r_p == 1.0);

  CHECK(limits_are_constant(LeadingExponent::minus_one()));
  CHECK_FALSE(limits_are_constant(LeadingExponent::minus_two(w)));
}

TEST_CASE("fresnel approaches the zero-frequency limits") {
  const double kappa = 1.5e14;
  const PermittivityModel models[] = {DrudeSemiconductor{11.66, 8e15, 1e12},
                                      DrudeSemiconductor{11.66, 8e15, 0.0}, DrudeMetal{1e16, 1e14},
                                      Plasma{1e16}, ConstantDielectric{3.0}, IdealMetal{}};
  for (const auto& model : models) {
    const auto limits = zero_frequency_limits(classify_exponent(model), kappa);
    const double zeta = 1e-13 * kappa;
    const auto r = fresnel(permittivity(model, zeta), kappa, zeta);
    CHECK(std::abs(r.r_s - limits.r_s) < 1e-6);
    CHECK(std::abs(r.r_p - limits.r_p) < 1e-6);
  }
}
