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

#include "ses/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "ses/scoring.hpp"
#include "ses/seed.hpp"
#include "ses/solvers.hpp"

namespace ses {
namespace {

Scalar sum_gains(const Schedule& s) {
  Scalar total = 0;
  for (const Assignment& a : s.assignments()) total += a.score;
  return total;
}

bool close_rel(Scalar a, Scalar b, Scalar rel) {
  return std::abs(a - b) <= rel * (Scalar(1) + std::max(std::abs(a),
                                                        std::abs(b)));
}

}  // namespace

GenParams corpus_params(std::uint64_t seed, int max_events, int max_intervals,
                        int max_k) {
  DetRng rng(seed);
  GenParams p;
  p.num_events = static_cast<int>(rng.uniform_int(5, max_events));
  p.num_intervals = static_cast<int>(rng.uniform_int(2, max_intervals));
  p.num_users = rng.uniform_int(10, 80);
  p.num_locations = static_cast<int>(rng.uniform_int(2, 12));
  p.theta = rng.uniform(5, 30);
  p.xi_min = 0.5;
  p.xi_max = rng.uniform(1.0, p.theta / 2);
  p.competing_min = static_cast<int>(rng.uniform_int(0, 2));
  p.competing_max =
      p.competing_min + static_cast<int>(rng.uniform_int(0, 6));
  switch (seed % 5) {
    case 0: p.interest_dist = InterestDist::kUniform; break;
    case 1: p.interest_dist = InterestDist::kNormal; break;
    case 2: p.interest_dist = InterestDist::kZipf1; break;
    case 3: p.interest_dist = InterestDist::kZipf2; break;
    default: p.interest_dist = InterestDist::kZipf3; break;
  }
  p.activity_dist =
      (seed % 2 == 0) ? ActivityDist::kUniform : ActivityDist::kNormal;

  // Keep k within what locations and resources can certainly host.
  const int per_interval =
      std::min(p.num_locations,
               static_cast<int>(std::floor(p.theta / p.xi_max)));
  const int cap = std::min({max_k, p.num_events,
                            p.num_intervals * std::max(1, per_interval)});
  p.k = static_cast<int>(rng.uniform_int(1, std::max(1, cap)));
  p.seed = mix_seed(seed, 0xda7aULL);
  return p;
}

VerifyStats run_verification(const VerifyOptions& opts, std::ostream& log) {
  VerifyStats stats;
  auto fail = [&](const std::string& what) {
    stats.failures.push_back(what);
    log << "FAIL " << what << "\n";
  };

  // Paired solver runs over the random corpus.
  for (int trial = 0; trial < opts.trials; ++trial) {
    const std::uint64_t tseed = mix_seed(opts.seed, trial);
    const GenParams params = corpus_params(tseed, opts.max_events,
                                           opts.max_intervals, opts.max_k);
    const ProblemInstance inst = generate(params);
    const SolveResult alg = solve_alg(inst);
    const SolveResult inc = solve_inc(inst);
    const SolveResult hor = solve_hor(inst);
    const SolveResult hori = solve_hor_i(inst);
    const SolveResult top = solve_top(inst);
    const SolveResult rnd = solve_rand(inst, mix_seed(tseed, 0x7a2dULL));
    ++stats.trials;

    std::ostringstream tag;
    tag << "trial " << trial << " (|E|=" << inst.num_events()
        << " |T|=" << inst.num_intervals() << " k=" << inst.k
        << " |U|=" << inst.num_users()
        << " dist=" << to_string(params.interest_dist) << ")";

    if (inc.schedule.same_assignments(alg.schedule))
      ++stats.inc_alg_equal;
    else
      fail(tag.str() + ": schedule(INC) != schedule(ALG)");
    if (hori.schedule.same_assignments(hor.schedule))
      ++stats.hori_hor_equal;
    else
      fail(tag.str() + ": schedule(HOR-I) != schedule(HOR)");

    bool counters_ok = true;
    auto expect = [&](bool cond, const std::string& what) {
      if (!cond) {
        counters_ok = false;
        fail(tag.str() + ": " + what);
      }
    };
    expect(inc.report.score_computations <= alg.report.score_computations,
           "score_computations(INC) > score_computations(ALG)");
    expect(hori.report.score_computations <= hor.report.score_computations,
           "score_computations(HOR-I) > score_computations(HOR)");
    for (const SolveResult* r : {&alg, &inc, &hor, &hori})
      expect(top.report.score_computations <= r->report.score_computations,
             "score_computations(TOP) not minimal vs " + r->report.solver);
    expect(rnd.report.score_computations == 0,
           "score_computations(RAND) != 0");
    expect(inc.report.assignments_examined <= alg.report.assignments_examined,
           "assignments_examined(INC) > assignments_examined(ALG)");
    const std::int64_t initial =
        static_cast<std::int64_t>(inst.num_events()) * inst.num_intervals() *
        inst.num_users();
    expect(top.report.score_computations == initial,
           "score_computations(TOP) != |E||T||U|");
    if (inst.k <= inst.num_intervals()) {
      expect(hor.report.score_computations == initial,
             "k <= |T| but score_computations(HOR) != |E||T||U|");
      expect(hori.report.score_computations == initial,
             "k <= |T| but score_computations(HOR-I) != |E||T||U|");
      if (alg.report.score_computations > initial)
        expect(hor.report.score_computations <
                   alg.report.score_computations,
               "ALG performed updates but HOR not strictly cheaper");
    }
    if (counters_ok) ++stats.counter_dominance_ok;

    bool tel_ok = true;
    for (const SolveResult* r : {&alg, &inc, &hor, &hori}) {
      if (!close_rel(sum_gains(r->schedule), r->report.utility, 1e-6)) {
        tel_ok = false;
        fail(tag.str() + ": telescoped gains != utility for " +
             r->report.solver);
      }
    }
    for (const SolveResult* r : {&alg, &inc, &hor, &hori, &top, &rnd}) {
      if (r->schedule.size() != inst.k || !is_feasible(r->schedule, inst)) {
        tel_ok = false;
        fail(tag.str() + ": infeasible or undersized schedule from " +
             r->report.solver);
      }
      if (!close_rel(total_utility(r->schedule, inst), r->report.utility,
                     1e-6)) {
        tel_ok = false;
        fail(tag.str() + ": reported utility drifts from Eq. 3 for " +
             r->report.solver);
      }
    }
    if (tel_ok) ++stats.telescoping_ok;

    if (close_rel(hor.report.utility, alg.report.utility, 1e-12))
      ++stats.hor_alg_equal_utility;
  }

  // Update monotonicity: adding an assignment to an interval never raises the
  // gain of another candidate at that interval.
  {
    const int instances = std::max(1, opts.monotonicity_samples / 100);
    int done = 0;
    for (int i = 0; i < instances && done < opts.monotonicity_samples; ++i) {
      const std::uint64_t iseed = mix_seed(opts.seed, 0x3030ULL + i);
      GenParams p = corpus_params(iseed, 20, 8, 12);
      p.num_users = 20;
      const ProblemInstance inst = generate(p);
      DetRng rng(mix_seed(iseed, 1));
      ScoreEngine engine(inst);
      ComputationCounter scratch;
      // A few random valid insertions to leave a non-trivial state.
      const int warm = static_cast<int>(rng.uniform_int(0, inst.k));
      for (int w = 0; w < warm; ++w) {
        const EventId e =
            static_cast<EventId>(rng.uniform_int(0, inst.num_events() - 1));
        const IntervalId t = static_cast<IntervalId>(
            rng.uniform_int(0, inst.num_intervals() - 1));
        Assignment a{e, t, 0, false};
        if (is_valid(a, engine.schedule(), inst)) {
          a.score = engine.assignment_gain(e, t, scratch);
          a.updated = true;
          engine.apply(a);
        }
      }
      for (int s = 0; s < 100 && done < opts.monotonicity_samples; ++s) {
        const IntervalId t = static_cast<IntervalId>(
            rng.uniform_int(0, inst.num_intervals() - 1));
        const EventId cand =
            static_cast<EventId>(rng.uniform_int(0, inst.num_events() - 1));
        const EventId added =
            static_cast<EventId>(rng.uniform_int(0, inst.num_events() - 1));
        if (cand == added) continue;
        if (engine.schedule().contains_event(cand) ||
            engine.schedule().contains_event(added))
          continue;
        Assignment add{added, t, 0, false};
        if (!is_valid(add, engine.schedule(), inst)) continue;
        const Scalar before = engine.assignment_gain(cand, t, scratch);
        add.score = engine.assignment_gain(added, t, scratch);
        add.updated = true;
        engine.apply(add);
        const Scalar after = engine.assignment_gain(cand, t, scratch);
        ++done;
        ++stats.monotonicity_samples;
        if (after <= before + 1e-9)
          ++stats.monotonicity_ok;
        else
          fail("monotonicity violated: gain rose from " +
               std::to_string(before) + " to " + std::to_string(after));
      }
    }
  }

  // Exact-oracle gap: greedy never beats the oracle; the mean ratio is
  // reported, not asserted.
  {
    double ratio_sum = 0;
    int ratio_count = 0;
    for (int i = 0; i < opts.oracle_trials; ++i) {
      const std::uint64_t oseed = mix_seed(opts.seed, 0x0acULL + i);
      DetRng rng(oseed);
      GenParams p;
      p.num_events = static_cast<int>(rng.uniform_int(3, 8));
      p.num_intervals = static_cast<int>(rng.uniform_int(1, 4));
      p.num_users = rng.uniform_int(5, 30);
      p.num_locations = static_cast<int>(rng.uniform_int(2, 6));
      p.theta = 10;
      p.xi_min = 0.5;
      p.xi_max = 4;
      p.competing_min = 0;
      p.competing_max = 3;
      p.k = static_cast<int>(
          rng.uniform_int(1, std::min(4, std::min(p.num_events,
                                                  p.num_intervals * 2))));
      p.interest_dist = static_cast<InterestDist>(i % 5);
      p.seed = mix_seed(oseed, 2);
      const ProblemInstance inst = generate(p);
      const SolveResult alg = solve_alg(inst);
      const auto [exact_schedule, exact_utility] = solve_exact(inst);
      ++stats.oracle_trials;
      if (alg.report.utility <= exact_utility + 1e-9)
        ++stats.oracle_bound_ok;
      else
        fail("oracle trial " + std::to_string(i) + ": utility(ALG) = " +
             std::to_string(alg.report.utility) + " > utility(exact) = " +
             std::to_string(exact_utility));
      if (exact_utility > 1e-12) {
        ratio_sum += alg.report.utility / exact_utility;
        ++ratio_count;
      }
    }
    stats.oracle_mean_ratio = ratio_count ? ratio_sum / ratio_count : 1.0;
  }

  log << "trials " << stats.trials << ": schedule(INC)==schedule(ALG) "
      << stats.inc_alg_equal << "/" << stats.trials
      << ", schedule(HOR-I)==schedule(HOR) " << stats.hori_hor_equal << "/"
      << stats.trials << "\n";
  log << "counter dominance ok " << stats.counter_dominance_ok << "/"
      << stats.trials << ", telescoping/utility ok " << stats.telescoping_ok
      << "/" << stats.trials << "\n";
  log << "utility(HOR)==utility(ALG) in " << stats.hor_alg_equal_utility
      << "/" << stats.trials << " trials\n";
  log << "monotonicity " << stats.monotonicity_ok << "/"
      << stats.monotonicity_samples << " samples\n";
  log << "oracle bound " << stats.oracle_bound_ok << "/" << stats.oracle_trials
      << ", mean utility(ALG)/utility(exact) = " << stats.oracle_mean_ratio
      << "\n";
  return stats;
}

}  // namespace ses
