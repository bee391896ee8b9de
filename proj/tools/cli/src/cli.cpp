// Copyright 2026 The qrl-thermal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrl/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "qrl/cli/csv.hpp"
#include "qrl/cli/validate.hpp"
#include "qrl/errors.hpp"
#include "qrl/experiments.hpp"
#include "qrl/protocol.hpp"

namespace qrl::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  double temp = 0.3;
  double gamma0 = 0.0;
  double tau = 1.0;
  double theta = std::numbers::pi / 2;
  double phi = 0.0;
  int iters = 500;
  int realizations = 1000;
  double reward = 0.9;
  std::optional<double> punish;
  std::uint64_t seed = 1;
  std::uint64_t index = 0;
  double window_frac = kDefaultWindowFraction;
  std::optional<unsigned> threads;
  int rk4_steps = 2000;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::optional<double> grid_step;
  int points = 64;
  double gamma0_max = 2.0;
  std::string out;
};

void add_basis(CLI::App* cmd, Options& o) {
  cmd->add_option("--theta", o.theta, "Polar angle of |+> on the Bloch sphere")->capture_default_str();
  cmd->add_option("--phi", o.phi, "Azimuthal angle of |+>")->capture_default_str();
}

void add_bath(CLI::App* cmd, Options& o, bool with_temp, bool with_tau) {
  if (with_temp) {
    cmd->add_option("--temp", o.temp, "Dimensionless temperature kB T/(hbar omega)")->capture_default_str();
  }
  cmd->add_option("--gamma0", o.gamma0, "Dimensionless zero-temperature decay rate")->capture_default_str();
  if (with_tau) cmd->add_option("--tau", o.tau, "Dimensionless evolution time omega tau")->capture_default_str();
  add_basis(cmd, o);
}

void add_learning(CLI::App* cmd, Options& o) {
  cmd->add_option("--iters", o.iters, "Iterations per realization")->capture_default_str();
  cmd->add_option("--reward", o.reward, "Reward rate r in (0, 1)")->capture_default_str();
  cmd->add_option("--punish", o.punish, "Punishment rate p > 1 (default 2/r)");
  cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
}

void add_ensemble(CLI::App* cmd, Options& o) {
  cmd->add_option("--realizations", o.realizations, "Ensemble size N")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (default: QRL_THREADS or hardware)");
}

void add_grid(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid-min", o.grid_min, "First grid value");
  cmd->add_option("--grid-max", o.grid_max, "Last grid value (inclusive)");
  cmd->add_option("--grid-step", o.grid_step, "Grid spacing");
}

void add_out(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output file (default: standard output)");
}

double punish_rate(const Options& o) { return o.punish.value_or(2.0 / o.reward); }

BathSpec make_bath(const Options& o) {
  BathSpec bath{o.temp, o.gamma0, o.tau, {o.theta, o.phi}};
  bath.validate();
  return bath;
}

LearningConfig make_learning(const Options& o) {
  LearningConfig cfg{o.reward, punish_rate(o), o.iters, o.seed};
  cfg.validate();
  return cfg;
}

EnsembleSpec make_ensemble(const Options& o) {
  EnsembleSpec spec{make_bath(o), make_learning(o), o.realizations};
  spec.validate();
  return spec;
}

ExecutionOptions make_exec(const Options& o) {
  if (o.threads) {
    if (*o.threads == 0) throw UsageError("--threads must be >= 1");
    return {*o.threads};
  }
  if (const char* env = std::getenv("QRL_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1) throw UsageError("QRL_THREADS must be a positive integer");
    return {static_cast<unsigned>(n)};
  }
  return {0};
}

std::vector<double> make_grid(const Options& o, double min, double max, double step) {
  const double lo = o.grid_min.value_or(min);
  const double hi = o.grid_max.value_or(max);
  const double dx = o.grid_step.value_or(step);
  if (!(dx > 0.0)) throw UsageError("--grid-step must be > 0");
  if (hi < lo) throw UsageError("--grid-max must be >= --grid-min");
  return linear_grid(lo, hi, dx);
}

using Metadata = std::vector<std::pair<std::string, std::string>>;

Metadata header(const std::string& command) {
  return {{"tool", "qrl"}, {"version", kVersion}, {"command", command}};
}

void put(Metadata& m, const std::string& key, double v) { m.emplace_back(key, format_double(v)); }
void put(Metadata& m, const std::string& key, std::uint64_t v) { m.emplace_back(key, std::to_string(v)); }
void put(Metadata& m, const std::string& key, int v) { m.emplace_back(key, std::to_string(v)); }

void put_bath(Metadata& m, const BathSpec& b, bool with_temp = true, bool with_tau = true) {
  if (with_temp) put(m, "temp", b.t_dimless);
  put(m, "gamma0", b.gamma0_dimless);
  if (with_tau) put(m, "tau", b.tau_dimless);
  put(m, "theta", b.basis.theta);
  put(m, "phi", b.basis.phi);
}

void put_learning(Metadata& m, const LearningConfig& c) {
  put(m, "iters", c.n_iterations);
  put(m, "reward", c.reward_rate);
  put(m, "punish", c.punish_rate);
  put(m, "seed", c.master_seed);
}

int emit(const CsvTable& table, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out.empty()) {
    table.write(out);
    return out ? kExitOk : kExitFailure;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "qrl: cannot open output file '" << o.out << "'\n";
    return kExitFailure;
  }
  table.write(file);
  file.close();
  if (!file) {
    err << "qrl: failed writing output file '" << o.out << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.rk4_steps < 10) throw UsageError("--rk4-steps must be >= 10");
  const auto checks = run_validation({o.rk4_steps, 20, o.seed});
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed();
  if (o.out.empty()) {
    print_validation_table(out, checks);
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "qrl: cannot open output file '" << o.out << "'\n";
      return kExitFailure;
    }
    print_validation_table(file, checks);
  }
  if (!ok) err << "qrl: validation failed\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  const BathSpec bath = make_bath(o);
  const LearningConfig learn = make_learning(o);
  const TrajectoryResult traj = run_realization(bath, learn, o.index);

  CsvTable t;
  t.metadata = header("run");
  put_bath(t.metadata, bath);
  put_learning(t.metadata, learn);
  put(t.metadata, "index", o.index);
  t.columns = {"k", "m", "p0", "w", "f", "f_minus", "f_plus"};
  for (const auto& r : traj.records) {
    t.rows.push_back({static_cast<double>(r.k), static_cast<double>(r.m), r.p0, r.w, r.f,
                      r.f_minus, r.f_plus});
  }
  return emit(t, o, out, err);
}

int cmd_curves(const Options& o, std::ostream& out, std::ostream& err) {
  const EnsembleSpec spec = make_ensemble(o);
  const ExecutionOptions exec = make_exec(o);
  const EnsembleCurves c = run_ensemble(spec, exec);

  CsvTable t;
  t.metadata = header("curves");
  put_bath(t.metadata, spec.bath);
  put_learning(t.metadata, spec.learn);
  put(t.metadata, "realizations", spec.n_realizations);
  t.columns = {"k", "F", "F_se", "W", "W_se", "F_minus", "F_minus_se", "F_plus", "F_plus_se"};
  for (std::size_t k = 0; k < c.n_iterations(); ++k) {
    t.rows.push_back({static_cast<double>(k + 1), c.f.mean[k], c.f.se[k], c.w.mean[k], c.w.se[k],
                      c.f_minus.mean[k], c.f_minus.se[k], c.f_plus.mean[k], c.f_plus.se[k]});
  }
  return emit(t, o, out, err);
}

int cmd_sweep(const Options& o, SweepAxis axis, std::ostream& out, std::ostream& err) {
  const bool temp_axis = axis == SweepAxis::temperature;
  SweepSpec spec;
  spec.axis = axis;
  spec.base = make_ensemble(o);
  spec.window_fraction = o.window_frac;
  spec.grid = temp_axis ? make_grid(o, 0.05, 2.0, 0.05)
                        : make_grid(o, std::numbers::pi / 16, 4 * std::numbers::pi,
                                    std::numbers::pi / 16);
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const ExecutionOptions exec = make_exec(o);
  const auto points = run_sweep(spec, exec);

  CsvTable t;
  t.metadata = header(temp_axis ? "sweep-temp" : "sweep-tau");
  t.metadata.emplace_back("axis", temp_axis ? "temp" : "tau");
  put_bath(t.metadata, spec.base.bath, !temp_axis, temp_axis);
  put_learning(t.metadata, spec.base.learn);
  put(t.metadata, "realizations", spec.base.n_realizations);
  put(t.metadata, "window_frac", spec.window_fraction);
  put(t.metadata, "grid_min", spec.grid.front());
  put(t.metadata, "grid_max", spec.grid.back());
  put(t.metadata, "grid_points", static_cast<int>(spec.grid.size()));
  t.columns = {"x", "F_a", "F_a_se", "W_a", "W_a_se", "F_a_minus", "F_a_plus"};
  for (const auto& p : points) {
    const auto& s = p.summary;
    t.rows.push_back({p.x, s.f_a, s.f_a_se, s.w_a, s.w_a_se, s.f_a_minus, s.f_a_plus});
  }
  return emit(t, o, out, err);
}

int cmd_heatmap(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.points < 2) throw UsageError("--points must be >= 2");
  if (!(o.gamma0_max > 0.0)) throw UsageError("--gamma0-max must be > 0");
  HeatmapSpec spec;
  spec.tau_dimless = o.tau;
  spec.basis = {o.theta, o.phi};
  spec.gamma0_grid = evenly_spaced(0.0, o.gamma0_max, o.points);
  if (o.grid_step) {
    spec.temp_grid = make_grid(o, 0.01, 2.0, *o.grid_step);
  } else {
    const double lo = o.grid_min.value_or(0.01);
    const double hi = o.grid_max.value_or(2.0);
    if (!(hi > lo)) throw UsageError("--grid-max must be > --grid-min");
    spec.temp_grid = evenly_spaced(lo, hi, o.points);
  }
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }

  CsvTable t;
  t.metadata = header("heatmap");
  put(t.metadata, "tau", spec.tau_dimless);
  put(t.metadata, "theta", spec.basis.theta);
  put(t.metadata, "phi", spec.basis.phi);
  put(t.metadata, "gamma0_min", spec.gamma0_grid.front());
  put(t.metadata, "gamma0_max", spec.gamma0_grid.back());
  put(t.metadata, "gamma0_points", static_cast<int>(spec.gamma0_grid.size()));
  put(t.metadata, "temp_min", spec.temp_grid.front());
  put(t.metadata, "temp_max", spec.temp_grid.back());
  put(t.metadata, "temp_points", static_cast<int>(spec.temp_grid.size()));
  t.columns = {"gamma0", "temp", "fid_plus_fp", "fid_minus_fp"};
  for (const auto& cell : analytic_heatmap(spec)) {
    t.rows.push_back({cell.gamma0, cell.temp, cell.fid_plus_fp, cell.fid_minus_fp});
  }
  return emit(t, o, out, err);
}

}  // namespace

int execute(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum reinforcement learning of a qubit eigenstate under thermal dissipation",
               "qrl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.failure_message(CLI::FailureMessage::help);

  Options o;

  auto* validate = app.add_subcommand("validate", "Check the closed-form channel against independent oracles");
  validate->add_option("--rk4-steps", o.rk4_steps, "RK4 steps per Lindblad integration")->capture_default_str();
  validate->add_option("--seed", o.seed, "Seed for random initial states")->capture_default_str();
  add_out(validate, o);

  auto* run = app.add_subcommand("run", "Run one realization and write its trajectory CSV");
  add_bath(run, o, true, true);
  add_learning(run, o);
  run->add_option("--index", o.index, "Realization index (selects the RNG substream)")->capture_default_str();
  add_out(run, o);

  auto* curves = app.add_subcommand("curves", "Ensemble mean curves F, W, F_minus, F_plus versus k");
  add_bath(curves, o, true, true);
  add_learning(curves, o);
  add_ensemble(curves, o);
  add_out(curves, o);

  auto* sweep_temp = app.add_subcommand("sweep-temp", "Asymptotic F_a, W_a versus temperature");
  auto* sweep_tau = app.add_subcommand("sweep-tau", "Asymptotic F_a, W_a versus evolution time");
  for (auto* cmd : {sweep_temp, sweep_tau}) {
    add_bath(cmd, o, cmd == sweep_tau, cmd == sweep_temp);
    add_learning(cmd, o);
    add_ensemble(cmd, o);
    cmd->add_option("--window-frac", o.window_frac, "Trailing fraction of iterations averaged")
        ->capture_default_str();
    add_grid(cmd, o);
    add_out(cmd, o);
  }

  auto* heatmap = app.add_subcommand("heatmap", "Fixed-point fidelities over (gamma0, temperature)");
  heatmap->add_option("--tau", o.tau, "Dimensionless evolution time")->capture_default_str();
  add_basis(heatmap, o);
  add_grid(heatmap, o);
  heatmap->add_option("--points", o.points, "Grid points per axis")->capture_default_str();
  heatmap->add_option("--gamma0-max", o.gamma0_max, "Upper end of the gamma0 axis")->capture_default_str();
  add_out(heatmap, o);

  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const auto& a : argv) cargv.push_back(a.c_str());
  if (cargv.empty()) cargv.push_back("qrl");

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (run->parsed()) return cmd_run(o, out, err);
    if (curves->parsed()) return cmd_curves(o, out, err);
    if (sweep_temp->parsed()) return cmd_sweep(o, SweepAxis::temperature, out, err);
    if (sweep_tau->parsed()) return cmd_sweep(o, SweepAxis::tau, out, err);
    if (heatmap->parsed()) return cmd_heatmap(o, out, err);
  } catch (const UsageError& e) {
    err << "qrl: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "qrl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qrl: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qrl::cli
