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

// lifshitz-lab: command-line front end for the Casimir-Lifshitz free energy
// between two plates.
//
// Exit codes: 0 success, 1 validation error, 2 numerical failure, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lifshitz/asymptotics.hpp"
#include "lifshitz/config.hpp"
#include "lifshitz/error.hpp"
#include "lifshitz/harness.hpp"
#include "lifshitz/lifshitz.hpp"
#include "lifshitz/reflection.hpp"
#include "lifshitz/units.hpp"

namespace {

using namespace lifshitz;

enum ExitCode { kOk = 0, kValidation = 1, kNumerical = 2, kIo = 3 };

struct Options {
  std::string config;
  std::string out;
  std::optional<double> temperature_k;
  std::optional<double> separation_nm;
  std::optional<double> rel_tol;
  int points = 20;
  double t_min = 0.05;
  double t_max = 1.0;
  std::string spacing = "geometric";
  std::string transition;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12e", x);
  return buffer;
}

void add_common(CLI::App* sub, Options& o, bool needs_config = true) {
  auto* config = sub->add_option("--config", o.config, "JSON configuration file");
  if (needs_config) config->required();
  sub->add_option("--out", o.out, "write data here instead of stdout");
  sub->add_option_function<double>(
      "--temperature-k", [&o](double v) { o.temperature_k = v; }, "override temperature (K)");
  sub->add_option_function<double>(
      "--separation-nm", [&o](double v) { o.separation_nm = v; }, "override separation (nm)");
  sub->add_option_function<double>(
      "--rel-tol", [&o](double v) { o.rel_tol = v; }, "override numerics.rel_tol");
}

void add_grid(CLI::App* sub, Options& o) {
  sub->add_option("--points", o.points, "grid points")->check(CLI::PositiveNumber);
  sub->add_option("--t-min", o.t_min, "lowest temperature (K)");
  sub->add_option("--t-max", o.t_max, "highest temperature (K)");
  sub->add_option("--spacing", o.spacing, "linear or geometric")
      ->check(CLI::IsMember({"linear", "geometric"}));
}

// Overrides apply after the file has been parsed.
GapConfiguration load(const Options& o) {
  GapConfiguration config;
  try {
    config = load_config(o.config);
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  }
  if (o.temperature_k) {
    if (!(*o.temperature_k >= 0.0)) throw ValidationError("--temperature-k: must be >= 0");
    config.temperature = temperature_freq_from_kelvin(*o.temperature_k);
  }
  if (o.separation_nm) {
    if (!(*o.separation_nm > 0.0)) throw ValidationError("--separation-nm: must be > 0");
    config.separation_time = separation_time_from_nm(*o.separation_nm);
  }
  if (o.rel_tol) config.numerics.rel_tol = *o.rel_tol;
  config.validate();
  return config;
}

// Data goes to --out when given, stdout otherwise.
void emit(const Options& o, const std::string& data) {
  if (o.out.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + o.out + "'");
  file << data;
  if (!file) throw IoError("failed writing '" + o.out + "'");
}

std::string energy_line(const char* name, double natural) {
  return std::string(name) + "," + sci(natural) + "," + sci(free_energy_to_si(natural)) + "\n";
}

const DrudeSemiconductor& require_semiconductor(const GapConfiguration& config, const char* what) {
  const auto* m = std::get_if<DrudeSemiconductor>(&config.material);
  if (m == nullptr || !(m->sigma > 0.0)) {
    throw ValidationError(std::string(what) +
                          ": needs material.type drude_semiconductor with sigma_over_eps0_per_s > 0");
  }
  return *m;
}

int run_freeenergy(const Options& o) {
  const GapConfiguration config = load(o);
  std::ostringstream data;
  data << "quantity,natural_rad3_s3,si_J_m2\n";
  if (config.temperature == 0.0) {
    const auto f = free_energy_zero_t(config);
    data << energy_line("F_total", f.total()) << energy_line("F_s", f.value.s)
         << energy_line("F_p", f.value.p);
    std::cerr << "T = 0: iterated quadrature, error estimate " << sci(f.error_estimate) << "\n";
  } else {
    const auto f = free_energy(config);
    data << energy_line("F_total", f.per_polarisation.total())
         << energy_line("F_s", f.per_polarisation.s) << energy_line("F_p", f.per_polarisation.p);
    std::cerr << "T = " << config.temperature_k() << " K, a = " << config.separation_nm()
              << " nm: " << f.terms.size() << " Matsubara terms, tail bound "
              << sci(f.truncation_tail_bound) << "\n";
  }
  emit(o, data.str());
  return kOk;
}

int run_sweep(const Options& o) {
  const GapConfiguration config = load(o);
  SweepOptions options;
  options.entropy = true;
  const auto table = sweep(config, o.t_min, o.t_max, o.points, parse_spacing(o.spacing), options);
  std::ostringstream data;
  table.write_csv(data);
  emit(o, data.str());
  std::cerr << "sweep: " << table.rows.size() << " rows; energies in (rad/s)^3 (multiply by "
            << sci(free_energy_to_si(1.0)) << " for J/m^2), entropy in (rad/s)^2 (multiply by "
            << sci(entropy_to_si(1.0)) << " for J/(K m^2))\n";
  return kOk;
}

int run_entropy(const Options& o) {
  const GapConfiguration config = load(o);
  const auto s = entropy_numeric(config, config.numerics.diff_step_fraction);
  std::ostringstream data;
  data << "quantity,natural_rad2_s2,si_J_K_m2\n";
  auto line = [&](const char* name, double v) {
    data << name << "," << sci(v) << "," << sci(entropy_to_si(v)) << "\n";
  };
  line("S_total", s.entropy);
  line("S_s", s.per_polarisation.s);
  line("S_p", s.per_polarisation.p);
  emit(o, data.str());
  if (s.precision_warning) {
    std::cerr << "warning: the finite-difference signal is within 100x of the estimated noise\n";
  }
  return kOk;
}

int run_asymptotic(const Options& o) {
  const GapConfiguration config = load(o);
  const auto& m = require_semiconductor(config, "asymptotic");
  const double a = config.separation_time;
  const auto tm = delta_f_tm(config.temperature, m.sigma, a);
  const auto te = delta_f_te(config.temperature, m.sigma, a);
  const auto rescaled = RescaledTemperature::from(config.temperature, m.sigma, a);
  std::ostringstream data;
  data << "mode,term,natural_rad3_s3,si_J_m2\n";
  auto rows = [&](const char* mode, const ClosedFormCorrection& c) {
    for (const auto& [name, v] : {std::pair{"T2", c.t2}, std::pair{"T52", c.t52},
                                  std::pair{"T3", c.t3}, std::pair{"total", c.total()}}) {
      data << mode << "," << name << "," << sci(v) << "," << sci(free_energy_to_si(v)) << "\n";
    }
  };
  rows("TM", tm);
  rows("TE", te);
  emit(o, data.str());
  std::cerr << "t = " << sci(rescaled.t) << ", alpha = " << sci(rescaled.alpha) << "\n";
  for (const auto& flag : tm.flags) std::cerr << "outside validity window: " << flag << "\n";
  return kOk;
}

LeadingExponent exponent_for(Exponent lambda, const GapConfiguration& config) {
  switch (lambda) {
    case Exponent::Zero: {
      double eps_bar = 1.0;
      if (const auto* s = std::get_if<DrudeSemiconductor>(&config.material)) eps_bar = s->eps_bar;
      if (const auto* d = std::get_if<ConstantDielectric>(&config.material)) eps_bar = d->eps_bar;
      return LeadingExponent::zero(eps_bar);
    }
    case Exponent::MinusOne:
      return LeadingExponent::minus_one();
    case Exponent::MinusTwo: {
      const auto own = classify_exponent(config.material);
      if (!own.tilde_omega) {
        throw ValidationError("--transition: lambda = -2 needs a plasma or drude_metal material "
                              "to supply tilde omega");
      }
      return LeadingExponent::minus_two(*own.tilde_omega);
    }
    case Exponent::BelowMinusTwo:
      break;
  }
  return LeadingExponent::below_minus_two();
}

int run_residual_entropy(const Options& o) {
  const GapConfiguration config = load(o);
  const auto colon = o.transition.find(':');
  if (colon == std::string::npos) {
    throw ValidationError("--transition: expected L1:L2, e.g. -1:0");
  }
  const auto before = exponent_for(parse_exponent(o.transition.substr(0, colon)), config);
  const auto after = exponent_for(parse_exponent(o.transition.substr(colon + 1)), config);
  const double a = config.separation_time;
  const double s = residual_entropy_general(before, after, a, config.numerics);
  std::ostringstream data;
  data << "quantity,natural_rad2_s2,si_J_K_m2\n";
  data << "S_quadrature," << sci(s) << "," << sci(entropy_to_si(s)) << "\n";
  if (limits_are_constant(before) && limits_are_constant(after)) {
    const double closed = residual_entropy_closed(constant_limits(before), constant_limits(after), a);
    data << "S_polylog," << sci(closed) << "," << sci(entropy_to_si(closed)) << "\n";
  }
  emit(o, data.str());
  return kOk;
}

int run_limits(const Options& o) {
  const GapConfiguration config = load(o);
  const auto exponent = classify_exponent(config.material);
  std::ostringstream data;
  data << "model: " << model_name(config.material) << "\n";
  data << "lambda: " << exponent_label(exponent.lambda) << "\n";
  if (limits_are_constant(exponent)) {
    const auto r = zero_frequency_limits<double>(exponent, 1.0);
    data << "(r_s, r_p) at zeta -> 0: (" << r.r_s << ", " << r.r_p << ")\n";
  } else {
    const double kappa = 1.0 / (2.0 * config.separation_time);
    const auto r = zero_frequency_limits<double>(exponent, kappa);
    data << "(r_s, r_p) at zeta -> 0: (tilde r_s(kappa), 1), tilde omega = "
         << sci(*exponent.tilde_omega) << " rad/s\n";
    data << "at kappa = 1/2a: (" << sci(r.r_s) << ", " << r.r_p << ")\n";
  }
  emit(o, data.str());
  return kOk;
}

int run_verify_tm(const Options& o) {
  const GapConfiguration config = load(o);
  const auto& m = require_semiconductor(config, "verify-tm");
  const auto grid = temperature_grid_k(o.t_min, o.t_max, o.points, parse_spacing(o.spacing));
  SweepOptions options;
  options.total = false;
  const auto table = sweep(config, grid, options);
  const double a = config.separation_time;
  const auto series = ratio_R(table, config.numerics.abs_tol_floor / (a * a * a));
  std::ostringstream data;
  series.write_csv(data);
  emit(o, data.str());

  std::vector<double> t, f;
  for (const auto& row : table.rows) {
    t.push_back(temperature_freq_from_kelvin(row.T_K));
    f.push_back(row.dF_p_num);
  }
  const auto fit = fit_expansion(t, f);
  const auto expected = tm_expansion(m.sigma, a);
  const auto ratio_fit = fit_ratio(series);
  std::cerr << "D  = " << sci(fit.D) << " +- " << sci(fit.D_error) << "  closed form C  = "
            << sci(expected.C) << "\n"
            << "D1 = " << sci(fit.D1) << " +- " << sci(fit.D1_error) << "  closed form C1 = "
            << sci(expected.C1) << "\n"
            << "R fit: r0 = " << sci(ratio_fit.r0) << " +- " << sci(ratio_fit.fit.standard_errors(0))
            << ", r1 = " << sci(ratio_fit.r1) << " +- " << sci(ratio_fit.fit.standard_errors(1))
            << " (per K)\n";
  return kOk;
}

int run_verify_te(const Options& o) {
  const GapConfiguration config = load(o);
  require_semiconductor(config, "verify-te");
  const auto grid = temperature_grid_k(o.t_min, o.t_max, o.points, parse_spacing(o.spacing));
  const auto rows = te_t3_comparison(config, grid);
  std::ostringstream data;
  write_te_comparison_csv(data, rows);
  emit(o, data.str());
  return kOk;
}

int run_em_demo(const Options& o) {
  std::ostringstream data;
  data << "t,coherent,exact,series,coherent_minus_exact,series_rel_error\n";
  for (const double t : {0.1, 0.03, 0.01, 0.003, 0.001}) {
    const auto d = euler_maclaurin_demo(t);
    data << sci(t) << "," << sci(d.coherent) << "," << sci(d.exact) << "," << sci(d.series) << ","
         << sci(d.coherent - d.exact) << "," << sci(d.series / d.exact - 1.0) << "\n";
  }
  emit(o, data.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Lifshitz free energy, entropy and low-temperature asymptotics", "lifshitz-lab"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    CLI::App* app;
    int (*run)(const Options&);
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* help, int (*run)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.push_back({sub, run});
    return sub;
  };

  add_common(add("freeenergy", "F, F_s, F_p at the configured temperature", run_freeenergy), o);
  {
    auto* sub = add("sweep", "temperature sweep as CSV", run_sweep);
    add_common(sub, o);
    add_grid(sub, o);
  }
  add_common(add("entropy", "S = -dF/dT at the configured temperature", run_entropy), o);
  add_common(add("asymptotic", "closed-form low-temperature corrections by term", run_asymptotic), o);
  {
    auto* sub = add("residual-entropy", "zero-temperature entropy of an exponent jump",
                    run_residual_entropy);
    add_common(sub, o);
    sub->add_option("--transition", o.transition, "L1:L2 with L in {0,-1,-2,below-2}")->required();
  }
  add_common(add("limits", "leading exponent and zero-frequency reflection limits", run_limits), o);
  {
    auto* sub = add("verify-tm", "ratio R of closed-form and numeric TM corrections", run_verify_tm);
    add_common(sub, o);
    add_grid(sub, o);
  }
  {
    auto* sub = add("verify-te", "TE difference against the T^3 term", run_verify_te);
    add_common(sub, o);
    add_grid(sub, o);
  }
  add_common(add("em-demo", "Euler-Maclaurin oracle for exp(-mu)", run_em_demo), o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  for (const auto& command : commands) {
    if (!command.app->parsed()) continue;
    try {
      return command.run(o);
    } catch (const ValidationError& e) {
      std::cerr << "validation error: " << e.what() << "\n";
      return kValidation;
    } catch (const NumericalError& e) {
      std::cerr << "numerical error: " << e.what() << " (best estimate " << sci(e.best_estimate())
                << ", error bound " << sci(e.error_bound()) << ")\n";
      return kNumerical;
    } catch (const IoError& e) {
      std::cerr << "i/o error: " << e.what() << "\n";
      return kIo;
    } catch (const std::ios_base::failure& e) {
      std::cerr << "i/o error: " << e.what() << "\n";
      return kIo;
    }
  }
  return kValidation;
}
