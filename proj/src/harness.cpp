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

#include "lifshitz/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "lifshitz/asymptotics.hpp"
#include "lifshitz/error.hpp"
#include "lifshitz/lifshitz.hpp"
#include "lifshitz/matsubara.hpp"
#include "lifshitz/units.hpp"

namespace lifshitz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.11e", x);
  return buffer;
}

double parse_number(const std::string& field, std::size_t line) {
  if (field == "nan") return kNaN;
  char* end = nullptr;
  const double x = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw ValidationError("csv line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return x;
}

std::string join(const std::vector<std::string>& tokens, char separator) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += separator;
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, separator)) parts.push_back(part);
  if (!text.empty() && text.back() == separator) parts.emplace_back();
  return parts;
}

void add_flag(std::vector<std::string>& flags, const std::string& flag) {
  if (std::find(flags.begin(), flags.end(), flag) == flags.end()) flags.push_back(flag);
}

const DrudeSemiconductor* closed_form_material(const GapConfiguration& config) {
  const auto* semiconductor = std::get_if<DrudeSemiconductor>(&config.material);
  if (semiconductor == nullptr || !(semiconductor->sigma > 0.0)) return nullptr;
  return semiconductor;
}

SweepRow compute_row(const GapConfiguration& base, double t_k, const SweepOptions& options) {
  SweepRow row;
  row.T_K = t_k;
  row.F_total = row.F_s = row.F_p = kNaN;
  row.dF_s_num = row.dF_p_num = kNaN;
  row.dF_p_th = row.dF_s_th_T2 = row.dF_s_th_T52 = row.dF_s_th_T3 = kNaN;
  row.S_num = kNaN;
  const GapConfiguration config = base.with_temperature(temperature_freq_from_kelvin(t_k));

  if (options.total) {
    try {
      const FreeEnergyResult f = free_energy(config);
      row.F_s = f.per_polarisation.s;
      row.F_p = f.per_polarisation.p;
      row.F_total = row.F_s + row.F_p;
    } catch (const NumericalError&) {
      add_flag(row.flags, "free_energy_failed");
    }
  }

  try {
    const DeltaFreeEnergy delta = options.extended_precision
                                      ? delta_free_energy<long double>(config)
                                      : delta_free_energy<double>(config);
    row.dF_s_num = delta.value.s;
    row.dF_p_num = delta.value.p;
  } catch (const NumericalError&) {
    add_flag(row.flags, "delta_free_energy_failed");
  }

  if (const auto* material = closed_form_material(config)) {
    const double a = config.separation_time;
    const auto tm = delta_f_tm(config.temperature, material->sigma, a);
    const auto te = delta_f_te(config.temperature, material->sigma, a);
    row.dF_p_th = tm.total();
    row.dF_s_th_T2 = te.t2;
    row.dF_s_th_T52 = te.t52;
    row.dF_s_th_T3 = te.t3;
    for (const auto& flag : tm.flags) add_flag(row.flags, flag);
  } else {
    add_flag(row.flags, "no_closed_form");
  }

  if (options.entropy) {
    try {
      const EntropyResult s = entropy_numeric(config, config.numerics.diff_step_fraction);
      row.S_num = s.entropy;
      if (s.precision_warning) add_flag(row.flags, "entropy_precision_warning");
    } catch (const NumericalError&) {
      add_flag(row.flags, "entropy_failed");
    }
  }
  return row;
}

}  // namespace

Spacing parse_spacing(std::string_view text) {
  if (text == "linear") return Spacing::Linear;
  if (text == "geometric") return Spacing::Geometric;
  throw ValidationError("spacing: expected linear or geometric, got '" + std::string(text) + "'");
}

std::vector<double> temperature_grid_k(double t_min_k, double t_max_k, int points,
                                       Spacing spacing) {
  if (!(t_min_k > 0.0) || !(t_max_k > t_min_k) || !std::isfinite(t_max_k)) {
    throw ValidationError("temperature grid: need 0 < t_min < t_max");
  }
  if (points < 3) {
    throw ValidationError("temperature grid: points must be >= 3");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double last = points - 1;
  for (int i = 0; i < points; ++i) {
    const double f = i / last;
    grid[i] = spacing == Spacing::Linear ? t_min_k + f * (t_max_k - t_min_k)
                                         : t_min_k * std::pow(t_max_k / t_min_k, f);
  }
  grid.front() = t_min_k;
  grid.back() = t_max_k;
  return grid;
}

const char* SweepTable::header() {
  return "T_K,F_total,F_s,F_p,dF_s_num,dF_p_num,dF_p_th,dF_s_th_T2,dF_s_th_T52,dF_s_th_T3,S_num,"
         "flags";
}

void SweepTable::write_csv(std::ostream& out) const {
  out << header() << '\n';
  for (const SweepRow& r : rows) {
    for (const double x : {r.T_K, r.F_total, r.F_s, r.F_p, r.dF_s_num, r.dF_p_num, r.dF_p_th,
                           r.dF_s_th_T2, r.dF_s_th_T52, r.dF_s_th_T3, r.S_num}) {
      out << format_number(x) << ',';
    }
    out << join(r.flags, ';') << '\n';
  }
}

SweepTable SweepTable::parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != header()) {
    throw ValidationError("csv: missing or unexpected header");
  }
  SweepTable table;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 12) {
      throw ValidationError("csv line " + std::to_string(number) + ": expected 12 fields, got " +
                            std::to_string(fields.size()));
    }
    SweepRow r;
    double* targets[] = {&r.T_K,     &r.F_total,  &r.F_s,         &r.F_p,
                         &r.dF_s_num, &r.dF_p_num, &r.dF_p_th,     &r.dF_s_th_T2,
                         &r.dF_s_th_T52, &r.dF_s_th_T3, &r.S_num};
    for (std::size_t i = 0; i < 11; ++i) *targets[i] = parse_number(fields[i], number);
    if (!fields[11].empty()) r.flags = split(fields[11], ';');
    table.rows.push_back(std::move(r));
  }
  return table;
}

int worker_count(int requested) {
  int count = requested;
  if (count <= 0) {
    if (const char* env = std::getenv("LIFSHITZ_LAB_THREADS")) {
      char* end = nullptr;
      const long value = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || value < 0) {
        throw ValidationError("LIFSHITZ_LAB_THREADS: expected a non-negative integer");
      }
      count = static_cast<int>(value);
    }
  }
  if (count <= 0) count = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(count, 1);
}

SweepTable sweep(const GapConfiguration& config, const std::vector<double>& grid_k,
                 const SweepOptions& options) {
  config.validate();
  std::vector<double> grid = grid_k;
  std::sort(grid.begin(), grid.end());
  for (const double t : grid) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ValidationError("sweep: temperatures must be > 0");
  }

  SweepTable table;
  table.rows.resize(grid.size());
  const int workers = std::min<int>(worker_count(options.threads), static_cast<int>(grid.size()));
  // Lowest temperatures are the most expensive; hand them out first.
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      table.rows[i] = compute_row(config, grid[i], options);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return table;
}

SweepTable sweep(const GapConfiguration& config, double t_min_k, double t_max_k, int points,
                 Spacing spacing, const SweepOptions& options) {
  return sweep(config, temperature_grid_k(t_min_k, t_max_k, points, spacing), options);
}

PolynomialFit fit_polynomial(const std::vector<double>& x, const std::vector<double>& y,
                             int degree) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const Eigen::Index p = degree + 1;
  if (degree < 0 || x.size() != y.size()) {
    throw ValidationError("fit: x and y must have equal length and degree >= 0");
  }
  if (n < p) {
    throw ValidationError("fit: need at least " + std::to_string(p) + " points");
  }
  double scale = 0.0;
  for (const double v : x) scale = std::max(scale, std::abs(v));
  if (!(scale > 0.0)) scale = 1.0;

  Eigen::MatrixXd design(n, p);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u = x[i] / scale;
    double power = 1.0;
    for (Eigen::Index k = 0; k < p; ++k, power *= u) design(i, k) = power;
    rhs(i) = y[i];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < p) {
    throw ValidationError("fit: rank-deficient temperature grid; use wider spacing or more "
                          "distinct points");
  }
  const Eigen::VectorXd scaled = qr.solve(rhs);
  const double residual = (design * scaled - rhs).norm();
  const double dof = static_cast<double>(n - p);
  const double variance = dof > 0 ? residual * residual / dof : 0.0;
  const Eigen::MatrixXd gram_inverse = (design.transpose() * design).inverse();

  PolynomialFit fit;
  Eigen::VectorXd unscale(p);
  for (Eigen::Index k = 0; k < p; ++k) unscale(k) = std::pow(scale, -static_cast<double>(k));
  fit.coefficients = scaled.cwiseProduct(unscale);
  fit.covariance = variance * unscale.asDiagonal() * gram_inverse * unscale.asDiagonal();
  fit.standard_errors = fit.covariance.diagonal().cwiseSqrt();
  fit.residual_norm = residual;
  return fit;
}

FitResult fit_expansion(const std::vector<double>& temperatures,
                        const std::vector<double>& delta_f) {
  if (temperatures.size() != delta_f.size() || temperatures.size() < 4) {
    throw ValidationError("fit_expansion: need at least 4 (T, dF) rows");
  }
  std::vector<double> y(temperatures.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double t = temperatures[i];
    if (!(t > 0.0)) throw ValidationError("fit_expansion: temperatures must be > 0");
    if (!(delta_f[i] < 0.0)) throw ValidationError("fit_expansion: dF must be < 0");
    y[i] = -delta_f[i] / (t * t);
  }
  const PolynomialFit fit = fit_polynomial(temperatures, y, 2);
  const double b0 = fit.coefficients(0);
  const double b1 = fit.coefficients(1);
  const double b2 = fit.coefficients(2);

  FitResult result;
  result.D = b0;
  result.D1 = -b1 / b0;
  result.D2 = b2 / b0;
  // First-order propagation through the ratios.
  const Eigen::Vector3d grad_d1(b1 / (b0 * b0), -1.0 / b0, 0.0);
  const Eigen::Vector3d grad_d2(-b2 / (b0 * b0), 0.0, 1.0 / b0);
  const Eigen::Matrix3d cov = fit.covariance;
  result.D_error = fit.standard_errors(0);
  result.D1_error = std::sqrt(grad_d1.dot(cov * grad_d1));
  result.D2_error = std::sqrt(grad_d2.dot(cov * grad_d2));
  result.residual_norm = fit.residual_norm;
  result.temperatures = temperatures;
  return result;
}

TmExpansion tm_expansion(double sigma, double separation_time) {
  const double pi = std::numbers::pi;
  const double a2 = separation_time * separation_time;
  const double c = pi * pi / (72.0 * sigma * a2);
  const double cubic = 1.2020569031595942 / (pi * sigma * sigma * a2);
  return {c, cubic / c};
}

void RatioSeries::write_csv(std::ostream& out) const {
  out << "T_K,dF_num,dF_th,R\n";
  for (const RatioRow& r : rows) {
    out << format_number(r.T_K) << ',' << format_number(r.dF_num) << ','
        << format_number(r.dF_th) << ',' << format_number(r.R) << '\n';
  }
}

RatioSeries ratio_R(const std::vector<double>& grid_k, const std::vector<double>& dF_num,
                    const std::vector<double>& dF_th, double abs_floor) {
  if (grid_k.size() != dF_num.size() || grid_k.size() != dF_th.size()) {
    throw ValidationError("ratio_R: column lengths differ");
  }
  RatioSeries series;
  for (std::size_t i = 0; i < grid_k.size(); ++i) {
    RatioRow row{grid_k[i], dF_num[i], dF_th[i], kNaN, false};
    if (grid_k[i] > 0.0 && std::isfinite(dF_th[i]) && std::abs(dF_th[i]) > abs_floor &&
        std::isfinite(dF_num[i])) {
      row.R = (dF_th[i] - dF_num[i]) / dF_th[i];
      row.defined = true;
    }
    series.rows.push_back(row);
  }
  return series;
}

RatioSeries ratio_R(const SweepTable& table, double abs_floor) {
  std::vector<double> t, num, th;
  for (const SweepRow& r : table.rows) {
    t.push_back(r.T_K);
    num.push_back(r.dF_p_num);
    th.push_back(r.dF_p_th);
  }
  return ratio_R(t, num, th, abs_floor);
}

RatioSeries ratio_R(const GapConfiguration& config, const std::vector<double>& grid_k,
                    const SweepOptions& options) {
  if (closed_form_material(config) == nullptr) {
    throw ValidationError("ratio_R: needs a drude_semiconductor material with sigma > 0");
  }
  SweepOptions rows_only = options;
  rows_only.total = false;
  rows_only.entropy = false;
  const double a = config.separation_time;
  return ratio_R(sweep(config, grid_k, rows_only), config.numerics.abs_tol_floor / (a * a * a));
}

bool RatioFit::consistent_with_zero(double sigmas) const {
  return std::abs(r0) <= sigmas * fit.standard_errors(0) &&
         std::abs(r1) <= sigmas * fit.standard_errors(1);
}

RatioFit fit_ratio(const RatioSeries& series) {
  std::vector<double> t, r;
  for (const RatioRow& row : series.rows) {
    if (!row.defined) continue;
    t.push_back(row.T_K);
    r.push_back(row.R);
  }
  RatioFit result;
  result.fit = fit_polynomial(t, r, 2);
  result.r0 = result.fit.coefficients(0);
  result.r1 = result.fit.coefficients(1);
  result.r2 = result.fit.coefficients(2);
  return result;
}

std::vector<TeComparisonRow> te_t3_comparison(const SweepTable& table) {
  std::vector<TeComparisonRow> rows;
  for (const SweepRow& r : table.rows) {
    TeComparisonRow out;
    out.T_K = r.T_K;
    out.difference = r.dF_s_num - r.dF_s_th_T2;
    out.t3_term = r.dF_s_th_T3;
    out.t52_term = r.dF_s_th_T52;
    out.ratio = out.t3_term != 0.0 ? out.difference / out.t3_term : kNaN;
    rows.push_back(out);
  }
  return rows;
}

std::vector<TeComparisonRow> te_t3_comparison(const GapConfiguration& config,
                                              const std::vector<double>& grid_k,
                                              const SweepOptions& options) {
  if (closed_form_material(config) == nullptr) {
    throw ValidationError("te_t3_comparison: needs a drude_semiconductor material with sigma > 0");
  }
  SweepOptions rows_only = options;
  rows_only.total = false;
  rows_only.entropy = false;
  return te_t3_comparison(sweep(config, grid_k, rows_only));
}

void write_te_comparison_csv(std::ostream& out, const std::vector<TeComparisonRow>& rows) {
  out << "T_K,difference,t3_term,t52_term,ratio\n";
  for (const auto& r : rows) {
    out << format_number(r.T_K) << ',' << format_number(r.difference) << ','
        << format_number(r.t3_term) << ',' << format_number(r.t52_term) << ','
        << format_number(r.ratio) << '\n';
  }
}

EulerMaclaurinDemo euler_maclaurin_demo(double t, double rel_tol) {
  if (!(t > 0.0) || !(t < 10.0)) {
    throw ValidationError("euler_maclaurin_demo: t must lie in (0, 10)");
  }
  if (!(rel_tol > 0.0)) throw ValidationError("euler_maclaurin_demo: rel_tol must be > 0");
  using Value = Eigen::Array<long double, 1, 1>;
  const long double step = t;
  SumMinusIntegralOptions<long double> options;
  options.decay_rate = step;
  options.last_index = static_cast<long>(std::ceil((std::log(1.0 / rel_tol) + 25.0) / t));
  const auto result = sum_minus_integral<long double, 1>(
      Value::Constant(1.0L), [step](long double m) -> Value { return Value::Constant(std::exp(-m * step)); },
      options);

  AsymptoticCoefficients c;
  c.c1 = -1.0;
  c.c3 = -1.0 / 6.0;
  EulerMaclaurinDemo demo;
  demo.t = t;
  demo.coherent = static_cast<double>(result.value(0));
  demo.coherent_error = static_cast<double>(result.error_estimate(0));
  // -expm1(-t) keeps 1 - e^{-t} accurate for small t.
  const long double lt = t;
  demo.exact = static_cast<double>(1.0L / -std::expm1(-lt) - 0.5L - 1.0L / lt);
  demo.series = assemble_correction(c, t, 1.0).total();
  return demo;
}

}  // namespace lifshitz
