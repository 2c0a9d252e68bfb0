// Copyright 2026 The Authors.
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

// Command-line front end: instance generation and (de)serialization, single
// solves, the cross-solver verification suite, and parameter sweeps emitting
// CSV. Exit codes: 0 ok, 1 check failure, 2 usage/parse error, 3 unknown
// solver, 4 infeasible instance.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ses/datagen.hpp"
#include "ses/io.hpp"
#include "ses/seed.hpp"
#include "ses/solvers.hpp"
#include "ses/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknownSolver = 3;
constexpr int kExitInfeasible = 4;

struct GenFlags {
  ses::GenParams params;
  std::string interest = "uniform";
  std::string activity = "uniform";

  ses::GenParams resolve() const {
    ses::GenParams p = params;
    p.interest_dist = ses::interest_dist_from_string(interest);
    p.activity_dist = ses::activity_dist_from_string(activity);
    p.check();
    return p;
  }
};

void add_gen_flags(CLI::App* cmd, GenFlags& f) {
  cmd->add_option("--k", f.params.k, "Number of events to schedule");
  cmd->add_option("--events", f.params.num_events, "Number of candidate events");
  cmd->add_option("--intervals", f.params.num_intervals,
                  "Number of time intervals");
  cmd->add_option("--users", f.params.num_users, "Number of users");
  cmd->add_option("--locations", f.params.num_locations,
                  "Number of available locations");
  cmd->add_option("--theta", f.params.theta, "Available resources");
  cmd->add_option("--xi-min", f.params.xi_min, "Min required resources");
  cmd->add_option("--xi-max", f.params.xi_max, "Max required resources");
  cmd->add_option("--competing-min", f.params.competing_min,
                  "Min competing events per interval");
  cmd->add_option("--competing-max", f.params.competing_max,
                  "Max competing events per interval");
  cmd->add_option("--interest", f.interest,
                  "Interest distribution: uniform|normal|zipf1|zipf2|zipf3");
  cmd->add_option("--activity", f.activity,
                  "Activity distribution: uniform|normal");
  cmd->add_option("--seed", f.params.seed, "Generator seed");
}

int run_gen(const GenFlags& flags, const std::string& out_path) {
  const ses::ProblemInstance inst = ses::generate(flags.resolve());
  ses::write_instance_file(inst, out_path);
  std::cerr << "wrote " << out_path << " (|E|=" << inst.num_events()
            << " |T|=" << inst.num_intervals() << " |C|="
            << inst.num_competing() << " |U|=" << inst.num_users() << ")\n";
  return kExitOk;
}

int run_solve(const std::string& instance_path, const std::string& solver,
              std::uint64_t seed, const std::string& schedule_out) {
  if (!ses::is_known_solver(solver)) {
    std::cerr << "unknown solver '" << solver
              << "' (expected alg|inc|hor|hor-i|top|rand)\n";
    return kExitUnknownSolver;
  }
  const ses::ProblemInstance inst = ses::read_instance_file(instance_path);
  const ses::SolveResult result = ses::solve_by_name(solver, inst, seed);
  std::cout << ses::solve_csv_header() << "\n"
            << ses::solve_csv_row(result.report) << "\n";
  if (!schedule_out.empty())
    ses::write_schedule_file(result.schedule, inst, schedule_out);
  return kExitOk;
}

int run_verify(const ses::VerifyOptions& opts) {
  if (opts.trials == 0) {
    std::cerr << "warning: trials=0, nothing verified (trivial pass)\n";
    return kExitOk;
  }
  const ses::VerifyStats stats = ses::run_verification(opts, std::cout);
  if (!stats.all_ok()) {
    std::cerr << stats.failures.size() << " check(s) failed\n";
    return kExitCheckFailure;
  }
  std::cout << "all checks passed\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepConfig {
  ses::GenParams base;
  std::string axis;
  std::vector<nlohmann::json> values;
  std::vector<std::string> solvers;
  int repetitions = 1;
  std::uint64_t seed = 1;
};

ses::GenParams apply_axis(const ses::GenParams& base, const std::string& axis,
                          const nlohmann::json& v) {
  ses::GenParams p = base;
  if (axis == "k") p.k = v.get<int>();
  else if (axis == "events") p.num_events = v.get<int>();
  else if (axis == "intervals") p.num_intervals = v.get<int>();
  else if (axis == "users") p.num_users = v.get<std::int64_t>();
  else if (axis == "locations") p.num_locations = v.get<int>();
  else if (axis == "theta") p.theta = v.get<double>();
  else if (axis == "xi_max") p.xi_max = v.get<double>();
  else if (axis == "competing_max") p.competing_max = v.get<int>();
  else if (axis == "interest")
    p.interest_dist = ses::interest_dist_from_string(v.get<std::string>());
  else if (axis == "activity")
    p.activity_dist = ses::activity_dist_from_string(v.get<std::string>());
  else
    throw ses::InvalidParamsError("unknown sweep axis '" + axis + "'");
  return p;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ses::ParseError("cannot open sweep config '" + path + "'", 0);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ses::ParseError(std::string("sweep config is not valid JSON: ") +
                              e.what(),
                          0);
  }
  SweepConfig cfg;
  try {
    if (j.contains("base")) {
      const auto& b = j["base"];
      auto opt = [&](const char* key, auto& field) {
        if (b.contains(key)) field = b[key].template get<std::decay_t<decltype(field)>>();
      };
      opt("k", cfg.base.k);
      opt("events", cfg.base.num_events);
      opt("intervals", cfg.base.num_intervals);
      opt("users", cfg.base.num_users);
      opt("locations", cfg.base.num_locations);
      opt("theta", cfg.base.theta);
      opt("xi_min", cfg.base.xi_min);
      opt("xi_max", cfg.base.xi_max);
      opt("competing_min", cfg.base.competing_min);
      opt("competing_max", cfg.base.competing_max);
      if (b.contains("interest"))
        cfg.base.interest_dist =
            ses::interest_dist_from_string(b["interest"].get<std::string>());
      if (b.contains("activity"))
        cfg.base.activity_dist =
            ses::activity_dist_from_string(b["activity"].get<std::string>());
    }
    cfg.axis = j.at("axis").get<std::string>();
    for (const auto& v : j.at("values")) cfg.values.push_back(v);
    if (j.contains("solvers"))
      for (const auto& s : j["solvers"])
        cfg.solvers.push_back(s.get<std::string>());
    else
      cfg.solvers = {"alg", "inc", "hor", "hor-i", "top", "rand"};
    if (j.contains("repetitions")) cfg.repetitions = j["repetitions"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ses::ParseError(std::string("bad sweep config: ") + e.what(), 0);
  }
  if (cfg.values.empty())
    throw ses::InvalidParamsError("sweep config needs at least one axis value");
  if (cfg.repetitions < 1)
    throw ses::InvalidParamsError("repetitions must be >= 1");
  for (const std::string& s : cfg.solvers)
    if (!ses::is_known_solver(s))
      throw ses::InvalidParamsError("unknown solver '" + s + "'");
  // Every cell's params must be internally consistent up front.
  for (const auto& v : cfg.values) apply_axis(cfg.base, cfg.axis, v).check();
  return cfg;
}

int sweep_threads() {
  if (const char* env = std::getenv("SES_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int run_sweep(const std::string& config_path, const std::string& out_path) {
  const SweepConfig cfg = load_sweep_config(config_path);
  struct Cell {
    int value_idx;
    int rep;
  };
  std::vector<Cell> cells;
  for (int vi = 0; vi < static_cast<int>(cfg.values.size()); ++vi)
    for (int rep = 0; rep < cfg.repetitions; ++rep)
      cells.push_back({vi, rep});

  std::vector<std::vector<std::string>> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell cell = cells[i];
      try {
        ses::GenParams p =
            apply_axis(cfg.base, cfg.axis, cfg.values[cell.value_idx]);
        p.seed = ses::mix_seed(cfg.seed,
                               0x5eedULL + cell.value_idx * 1000003ULL +
                                   cell.rep);
        const ses::ProblemInstance inst = ses::generate(p);
        const std::string value_str = cfg.values[cell.value_idx].dump();
        for (const std::string& solver : cfg.solvers) {
          const ses::SolveResult r = ses::solve_by_name(
              solver, inst, ses::mix_seed(p.seed, 0x7a2dULL));
          std::ostringstream row;
          row << cfg.axis << ',' << value_str << ',' << cell.rep << ','
              << r.report.solver << ',' << r.report.k << ','
              << r.report.num_events << ',' << r.report.num_intervals << ','
              << r.report.num_users << ','
              << ses::format_scalar(r.report.utility) << ','
              << r.report.score_computations << ','
              << r.report.assignments_examined << ',' << r.report.elapsed_us
              << ',' << r.report.seed;
          rows[i].push_back(row.str());
        }
      } catch (...) {
        errors[i] = std::current_exception();
        return;
      }
    }
  };

  const int nthreads =
      std::min<std::size_t>(sweep_threads(), std::max<std::size_t>(1, cells.size()));
  std::vector<std::thread> pool;
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::ofstream out(out_path);
  if (!out) throw ses::ParseError("cannot open output file '" + out_path + "'", 0);
  out << "axis,value,rep,solver,k,E,T,U,utility,score_computations,"
         "assignments_examined,elapsed_us,seed\n";
  for (const auto& cell_rows : rows)
    for (const std::string& row : cell_rows) out << row << "\n";
  std::cerr << "wrote " << out_path << " (" << cells.size() << " cells x "
            << cfg.solvers.size() << " solvers)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social event scheduling solver suite"};
  app.require_subcommand(1);

  GenFlags gen_flags;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  add_gen_flags(gen, gen_flags);
  gen->add_option("--out", gen_out, "Output instance path")->required();

  std::string solve_instance, solve_solver, solve_schedule_out;
  std::uint64_t solve_seed = 0;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("instance", solve_instance, "Instance file")->required();
  solve->add_option("--solver", solve_solver,
                    "One of alg|inc|hor|hor-i|top|rand")->required();
  solve->add_option("--seed", solve_seed, "Seed (rand solver)");
  solve->add_option("--schedule-out", solve_schedule_out,
                    "Write the schedule as event_id,interval_id lines");

  ses::VerifyOptions vopts;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the cross-solver verification suite");
  verify->add_option("--trials", vopts.trials, "Corpus size");
  verify->add_option("--seed", vopts.seed, "Corpus seed");
  verify->add_option("--max-events", vopts.max_events, "Corpus |E| cap");
  verify->add_option("--max-intervals", vopts.max_intervals, "Corpus |T| cap");
  verify->add_option("--max-k", vopts.max_k, "Corpus k cap");
  verify->add_option("--oracle-trials", vopts.oracle_trials,
                     "Exact-oracle comparison count");
  verify->add_option("--monotonicity-samples", vopts.monotonicity_samples,
                     "Update-monotonicity sample count");

  std::string sweep_config, sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--config", sweep_config, "JSON sweep config")->required();
  sweep->add_option("--out", sweep_out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(gen_flags, gen_out);
    if (*solve)
      return run_solve(solve_instance, solve_solver, solve_seed,
                       solve_schedule_out);
    if (*verify) return run_verify(vopts);
    if (*sweep) return run_sweep(sweep_config, sweep_out);
  } catch (const ses::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ses::InfeasibleInstanceError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ses::InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
