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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lifshitz/config.hpp"

namespace lifshitz {

enum class Spacing { Linear, Geometric };

Spacing parse_spacing(std::string_view text);

/// Temperatures in kelvin, ascending, endpoints included exactly.
std::vector<double> temperature_grid_k(double t_min_k, double t_max_k, int points, Spacing spacing);

/// One row of a temperature sweep. Free energies in (rad/s)^3, entropy in
/// (rad/s)^2. Columns that were not requested or failed hold NaN.
struct SweepRow {
  double T_K = 0.0;
  double F_total = 0.0;
  double F_s = 0.0;
  double F_p = 0.0;
  double dF_s_num = 0.0;
  double dF_p_num = 0.0;
  double dF_p_th = 0.0;
  double dF_s_th_T2 = 0.0;
  double dF_s_th_T52 = 0.0;
  double dF_s_th_T3 = 0.0;
  double S_num = 0.0;
  std::vector<std::string> flags;
};

struct SweepTable {
  std::vector<SweepRow> rows;

  static const char* header();
  void write_csv(std::ostream& out) const;
  static SweepTable parse_csv(std::istream& in);
};

struct SweepOptions {
  bool total = true;     // direct Matsubara sum for F, F_s, F_p
  bool entropy = false;  // S_num by differentiating F(T) - F(0)
  /// long double accumulation of F(T) - F(0); double is about six times faster
  /// and resolves the TE part to roughly 1e-4 of itself.
  bool extended_precision = true;
  /// Worker count; 0 reads LIFSHITZ_LAB_THREADS and falls back to the
  /// hardware concurrency.
  int threads = 0;
};

/// Worker count from LIFSHITZ_LAB_THREADS (0 or unset = auto).
int worker_count(int requested = 0);

SweepTable sweep(const GapConfiguration& config, const std::vector<double>& grid_k,
                 const SweepOptions& options = {});

SweepTable sweep(const GapConfiguration& config, double t_min_k, double t_max_k, int points,
                 Spacing spacing, const SweepOptions& options = {});

/// Least-squares polynomial y ~ sum_k b_k x^k.
struct PolynomialFit {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  Eigen::MatrixXd covariance;
  double residual_norm = 0.0;
};

/// x is rescaled by max|x| internally; the returned coefficients refer to the
/// unscaled x. Throws ValidationError on a rank-deficient design.
PolynomialFit fit_polynomial(const std::vector<double>& x, const std::vector<double>& y,
                             int degree);

/// Delta F = -D T^2 (1 - D1 T + D2 T^2), T in rad/s.
struct FitResult {
  double D = 0.0;
  double D1 = 0.0;
  double D2 = 0.0;
  double D_error = 0.0;
  double D1_error = 0.0;
  double D2_error = 0.0;
  double residual_norm = 0.0;
  std::vector<double> temperatures;  // rad/s
};

/// temperatures in rad/s; delta_f in (rad/s)^3, all negative.
FitResult fit_expansion(const std::vector<double>& temperatures, const std::vector<double>& delta_f);

/// Closed-form TM correction written as -C T^2 (1 - C1 T).
struct TmExpansion {
  double C = 0.0;
  double C1 = 0.0;
};

TmExpansion tm_expansion(double sigma, double separation_time);

struct RatioRow {
  double T_K = 0.0;
  double dF_num = 0.0;
  double dF_th = 0.0;
  double R = 0.0;  // (dF_th - dF_num) / dF_th; NaN when undefined
  bool defined = true;
};

struct RatioSeries {
  std::vector<RatioRow> rows;

  void write_csv(std::ostream& out) const;
};

/// Pure form: rows from given numeric and closed-form values. |dF_th| below
/// abs_floor marks the row undefined.
RatioSeries ratio_R(const std::vector<double>& grid_k, const std::vector<double>& dF_num,
                    const std::vector<double>& dF_th, double abs_floor = 0.0);

/// TM ratio from the coherent numeric path and the closed form.
RatioSeries ratio_R(const GapConfiguration& config, const std::vector<double>& grid_k,
                    const SweepOptions& options = {});

RatioSeries ratio_R(const SweepTable& table, double abs_floor = 0.0);

/// R = r0 + r1 T + r2 T^2 with T in kelvin; offset and slope are consistent
/// with zero when each lies within `sigmas` standard errors.
struct RatioFit {
  PolynomialFit fit;
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  bool consistent_with_zero(double sigmas = 5.0) const;
};

RatioFit fit_ratio(const RatioSeries& series);

struct TeComparisonRow {
  double T_K = 0.0;
  double difference = 0.0;  // dF_s_num minus the T^2 closed-form term
  double t3_term = 0.0;     // -zeta(3) T^3 / 8 pi
  double t52_term = 0.0;
  double ratio = 0.0;       // difference / t3_term
};

std::vector<TeComparisonRow> te_t3_comparison(const SweepTable& table);

std::vector<TeComparisonRow> te_t3_comparison(const GapConfiguration& config,
                                              const std::vector<double>& grid_k,
                                              const SweepOptions& options = {});

void write_te_comparison_csv(std::ostream& out, const std::vector<TeComparisonRow>& rows);

/// Sum-minus-integral for g(mu) = exp(-mu) sampled at mu = m t, next to the
/// exact value 1 / (1 - e^{-t}) - 1/2 - 1/t and the two-term series
/// t/12 - t^3/720 assembled from (c1, c3) = (-1, -1/6).
struct EulerMaclaurinDemo {
  double t = 0.0;
  double coherent = 0.0;
  double coherent_error = 0.0;
  double exact = 0.0;
  double series = 0.0;
};

EulerMaclaurinDemo euler_maclaurin_demo(double t, double rel_tol = 1e-14);

}  // namespace lifshitz
