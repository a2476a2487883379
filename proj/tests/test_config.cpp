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

#include <ios>
#include <string>

#include "doctest.h"
#include "lifshitz/config.hpp"
#include "lifshitz/error.hpp"
#include "lifshitz/units.hpp"

using namespace lifshitz;

namespace {

constexpr const char* kSilicon = R"({
  "separation_nm": 1000,
  "temperature_k": 0.5,
  "material": {"type": "drude_semiconductor", "eps_bar": 11.66,
               "omega0_rad_s": 8e15, "sigma_over_eps0_per_s": 1e12}
})";

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("silicon-like parameters parse") {
  const GapConfiguration config = parse_config(kSilicon);
  const auto& m = std::get<DrudeSemiconductor>(config.material);
  CHECK(m.eps_bar == 11.66);
  CHECK(m.sigma == 1e12);
  CHECK(m.omega0 == 8e15);
  CHECK(config.separation_time == doctest::Approx(separation_time_from_nm(1000.0)).epsilon(1e-15));
  CHECK(config.temperature_k() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(config.numerics.rel_tol == 1e-10);
  CHECK(config.numerics.max_matsubara_terms == 200000);
}

TEST_CASE("missing and mistyped fields") {
  CHECK(error_of(R"({"separation_nm": 1000, "temperature_k": 1, "material": {}})") ==
        "material.type required");
  CHECK(error_of(R"({"temperature_k": 1, "material": {"type": "ideal_metal"}})") ==
        "separation_nm required");
  CHECK(error_of(R"({"separation_nm": "1000", "temperature_k": 1, "material": {"type": "ideal_metal"}})") ==
        "separation_nm: expected number, got string");
  CHECK(error_of(R"({"separation_nm": 1000, "temperature_k": 1, "material": {"type": "plasma"}})") ==
        "material.omega_p_rad_s required");
  const std::string unknown =
      error_of(R"({"separation_nm": 1000, "temperature_k": 1, "material": {"type": "gold"}})");
  CHECK(unknown.find("gold") != std::string::npos);
  CHECK(unknown.find("drude_semiconductor") != std::string::npos);
  CHECK(error_of("[1, 2]").find("object") != std::string::npos);
  CHECK(error_of("{not json").find("invalid JSON") != std::string::npos);
}

TEST_CASE("numerics block overrides and validation") {
  const GapConfiguration config = parse_config(R"({"separation_nm": 500, "temperature_k": 2,
      "material": {"type": "constant_dielectric", "eps_bar": 4},
      "numerics": {"rel_tol": 1e-8, "max_matsubara_terms": 5000, "diff_step_fraction": 0.01}})");
  CHECK(config.numerics.rel_tol == 1e-8);
  CHECK(config.numerics.max_matsubara_terms == 5000);
  CHECK(config.numerics.diff_step_fraction == 0.01);
  CHECK(config.numerics.quadrature_max_depth == 40);

  CHECK(error_of(R"({"separation_nm": 500, "temperature_k": 2, "material": {"type": "ideal_metal"},
      "numerics": {"rel_tol": 0.5}})").find("numerics.rel_tol") == 0);
  CHECK(error_of(R"({"separation_nm": 500, "temperature_k": 2, "material": {"type": "ideal_metal"},
      "numerics": {"max_matsubara_terms": 8}})").find("numerics.max_matsubara_terms") == 0);
  CHECK(error_of(R"({"separation_nm": 500, "temperature_k": 2, "material": {"type": "ideal_metal"},
      "numerics": {"max_matsubara_terms": 1.5}})").find("expected integer") != std::string::npos);
}

TEST_CASE("physical validation") {
  CHECK(error_of(R"({"separation_nm": 0, "temperature_k": 1, "material": {"type": "ideal_metal"}})")
            .find("separation_nm") == 0);
  CHECK(error_of(R"({"separation_nm": 10, "temperature_k": -1, "material": {"type": "ideal_metal"}})")
            .find("temperature_k") == 0);
  CHECK_FALSE(error_of(R"({"separation_nm": 10, "temperature_k": 1,
      "material": {"type": "constant_dielectric", "eps_bar": 0.5}})").empty());
}

TEST_CASE("json round trip") {
  const GapConfiguration config = parse_config(kSilicon);
  const GapConfiguration again = parse_config(to_json(config));
  CHECK(again.separation_time == config.separation_time);
  CHECK(again.temperature == doctest::Approx(config.temperature).epsilon(1e-15));
  CHECK(std::get<DrudeSemiconductor>(again.material).eps_bar == 11.66);
  CHECK(again.numerics.rel_tol == config.numerics.rel_tol);
}

TEST_CASE("load_config reports unreadable files as I/O failures") {
  CHECK_THROWS_AS(load_config("/nonexistent/lifshitz/config.json"), std::ios_base::failure);
}
