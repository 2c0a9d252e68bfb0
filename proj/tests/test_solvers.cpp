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

#include <cmath>
#include <vector>

#include "doctest.h"

#include "fig1.hpp"
#include "ses/datagen.hpp"
#include "ses/scoring.hpp"
#include "ses/seed.hpp"
#include "ses/solvers.hpp"
#include "ses/verify.hpp"

using namespace ses;

namespace {

std::vector<std::pair<EventId, IntervalId>> selection_order(
    const Schedule& s) {
  std::vector<std::pair<EventId, IntervalId>> out;
  for (const Assignment& a : s.assignments()) out.push_back({a.event, a.interval});
  return out;
}

// Gains evaluated by a solver, in units of whole score computations.
std::int64_t gain_evaluations(const SolverReport& r) {
  REQUIRE(r.num_users > 0);
  REQUIRE(r.score_computations % r.num_users == 0);
  return r.score_computations / r.num_users;
}

}  // namespace

TEST_CASE("fig. 1: ALG selects e4->t2, e1->t1, e2->t2 with 4 updates") {
  const ProblemInstance inst = fig1_instance();
  const SolveResult r = solve_alg(inst);
  const std::vector<std::pair<EventId, IntervalId>> expected = {
      {3, 1}, {0, 0}, {1, 1}};
  CHECK(selection_order(r.schedule) == expected);
  CHECK(gain_evaluations(r.report) == 8 + 4);
  CHECK(r.report.score_computations == 24);  // the example has 2 users
  CHECK(r.report.utility == doctest::Approx(1.4074).epsilon(1e-3));
}

TEST_CASE("fig. 1: INC returns the ALG schedule with a single update") {
  const ProblemInstance inst = fig1_instance();
  const SolveResult alg = solve_alg(inst);
  const SolveResult inc = solve_inc(inst);
  CHECK(selection_order(inc.schedule) == selection_order(alg.schedule));
  CHECK(gain_evaluations(inc.report) == 8 + 1);
  CHECK(inc.report.score_computations == 18);
  CHECK(inc.report.assignments_examined <= alg.report.assignments_examined);
}

TEST_CASE("fig. 1: HOR matches the ALG schedule using 3 updates") {
  const ProblemInstance inst = fig1_instance();
  const SolveResult hor = solve_hor(inst);
  const std::vector<std::pair<EventId, IntervalId>> expected = {
      {3, 1}, {0, 0}, {1, 1}};
  CHECK(selection_order(hor.schedule) == expected);
  CHECK(gain_evaluations(hor.report) == 8 + 3);
}

TEST_CASE("fig. 1: HOR-I performs two of HOR's three updates") {
  const ProblemInstance inst = fig1_instance();
  const SolveResult hori = solve_hor_i(inst);
  const SolveResult hor = solve_hor(inst);
  CHECK(hori.schedule.same_assignments(hor.schedule));
  CHECK(gain_evaluations(hori.report) == 8 + 2);
}

TEST_CASE("k = 1 picks the globally top-scoring assignment everywhere") {
  const ProblemInstance inst = fig1_instance(1);
  for (const auto* solver : {"alg", "inc", "hor", "hor-i", "top"}) {
    const SolveResult r = solve_by_name(solver, inst, 0);
    CHECK(selection_order(r.schedule) ==
          std::vector<std::pair<EventId, IntervalId>>{{3, 1}});
  }
}

TEST_CASE("fig. 1: TOP with k = 2 walks e4->t2 then e1->t1") {
  const ProblemInstance inst = fig1_instance(2);
  const SolveResult r = solve_top(inst);
  const std::vector<std::pair<EventId, IntervalId>> expected = {
      {3, 1}, {0, 0}};
  CHECK(selection_order(r.schedule) == expected);
  CHECK(r.report.score_computations ==
        8 * inst.num_users());  // scores computed exactly once
}

TEST_CASE("HOR with k <= |T| computes only the initial scores") {
  const ProblemInstance inst = fig1_instance(2);
  const SolveResult hor = solve_hor(inst);
  const SolveResult hori = solve_hor_i(inst);
  CHECK(gain_evaluations(hor.report) == 8);
  // With one iteration HOR-I is HOR, counters included.
  CHECK(hori.report.score_computations == hor.report.score_computations);
  CHECK(hori.report.assignments_examined == hor.report.assignments_examined);
  CHECK(hori.schedule.same_assignments(hor.schedule));
}

TEST_CASE("k = |T| = n with everything feasible gives one event per interval") {
  GenParams p;
  p.k = 4;
  p.num_events = 4;
  p.num_intervals = 4;
  p.num_users = 10;
  p.num_locations = 4;
  p.theta = 10;
  p.xi_min = 0;
  p.xi_max = 1;
  p.competing_min = 1;
  p.competing_max = 2;
  p.seed = 17;
  const ProblemInstance inst = generate(p);
  const SolveResult r = solve_hor(inst);
  std::vector<int> per_interval(inst.num_intervals(), 0);
  for (const Assignment& a : r.schedule.assignments())
    ++per_interval[a.interval];
  for (int n : per_interval) CHECK(n == 1);
}

TEST_CASE("equivalence: INC==ALG and HOR-I==HOR on 200 random instances") {
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t seed = mix_seed(1234, trial);
    const GenParams params = corpus_params(seed, 40, 20, 25);
    const ProblemInstance inst = generate(params);
    const SolveResult alg = solve_alg(inst);
    const SolveResult inc = solve_inc(inst);
    REQUIRE_MESSAGE(inc.schedule.same_assignments(alg.schedule),
                    "trial " << trial);
    const SolveResult hor = solve_hor(inst);
    const SolveResult hori = solve_hor_i(inst);
    REQUIRE_MESSAGE(hori.schedule.same_assignments(hor.schedule),
                    "trial " << trial);
    REQUIRE(inc.report.score_computations <= alg.report.score_computations);
    REQUIRE(hori.report.score_computations <= hor.report.score_computations);
  }
}

TEST_CASE("200 random instances with k > |T|: HOR-I == HOR schedules") {
  int covered = 0;
  for (int trial = 0; covered < 200; ++trial) {
    REQUIRE(trial < 4000);
    const std::uint64_t seed = mix_seed(777, trial);
    GenParams params = corpus_params(seed, 30, 6, 20);
    if (params.k <= params.num_intervals) continue;
    const ProblemInstance inst = generate(params);
    const SolveResult hor = solve_hor(inst);
    const SolveResult hori = solve_hor_i(inst);
    REQUIRE_MESSAGE(hori.schedule.same_assignments(hor.schedule),
                    "trial " << trial);
    ++covered;
  }
}

TEST_CASE("ALG beats RAND on paired runs") {
  GenParams p;
  p.k = 3;
  p.num_events = 6;
  p.num_intervals = 3;
  p.num_users = 25;
  p.num_locations = 3;
  p.theta = 10;
  p.xi_min = 0;
  p.xi_max = 2;
  p.competing_min = 1;
  p.competing_max = 3;

  int alg_wins_or_ties = 0;
  for (int trial = 0; trial < 100; ++trial) {
    p.seed = mix_seed(55, trial);
    const ProblemInstance inst = generate(p);
    const SolveResult alg = solve_alg(inst);
    const SolveResult rnd = solve_rand(inst, mix_seed(56, trial));
    if (alg.report.utility + 1e-9 >= rnd.report.utility) ++alg_wins_or_ties;
  }
  CHECK(alg_wins_or_ties == 100);
}

TEST_CASE("RAND is deterministic under its seed") {
  const ProblemInstance inst = fig1_instance();
  const SolveResult a = solve_rand(inst, 42);
  const SolveResult b = solve_rand(inst, 42);
  CHECK(selection_order(a.schedule) == selection_order(b.schedule));
  CHECK(a.report.assignments_examined == b.report.assignments_examined);
  CHECK(a.report.score_computations == 0);

  // mean over seeds never beats the greedy utility
  const SolveResult alg = solve_alg(inst);
  Scalar mean = 0;
  for (int s = 0; s < 100; ++s) mean += solve_rand(inst, s).report.utility;
  mean /= 100;
  CHECK(mean <= alg.report.utility + 1e-9);
}

TEST_CASE("RAND can exhaust every valid assignment") {
  // k equals the largest schedule the instance admits: 2 intervals x 3
  // distinct locations, but only 4 events.
  const ProblemInstance inst = fig1_instance(4);
  const SolveResult r = solve_rand(inst, 9);
  CHECK(r.schedule.size() == 4);
  CHECK(is_feasible(r.schedule, inst));
}

TEST_CASE("infeasible k raises a shortfall error naming the numbers") {
  ProblemInstance inst = fig1_instance(4);
  // Make every event collide on one location: at most |T| = 2 can be placed.
  for (CandidateEvent& e : inst.events) e.location = 0;
  inst.validate();
  for (const auto* solver : {"alg", "inc", "hor", "hor-i", "top"}) {
    CHECK_THROWS_AS(solve_by_name(solver, inst, 0), InfeasibleInstanceError);
  }
  CHECK_THROWS_AS(solve_rand(inst, 3), InfeasibleInstanceError);
  try {
    solve_alg(inst);
  } catch (const InfeasibleInstanceError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("2") != std::string::npos);
    CHECK(msg.find("4") != std::string::npos);
  }
}

TEST_CASE("k > |E| is infeasible up front") {
  ProblemInstance inst = fig1_instance();
  inst.k = 9;
  CHECK_THROWS_AS(solve_alg(inst), InfeasibleInstanceError);
}

TEST_CASE("fig. 1 exact oracle") {
  {
    const ProblemInstance inst = fig1_instance(1);
    const auto [schedule, utility] = solve_exact(inst);
    CHECK(utility == doctest::Approx(0.6564).epsilon(1e-3));
    CHECK(selection_order(schedule) ==
          std::vector<std::pair<EventId, IntervalId>>{{3, 1}});
  }
  {
    const ProblemInstance inst = fig1_instance(3);
    const auto [schedule, utility] = solve_exact(inst);
    CHECK(schedule.size() == 3);
    CHECK(utility >= 1.4074 - 1e-3);  // at least the greedy value
    const SolveResult alg = solve_alg(inst);
    CHECK(alg.report.utility <= utility + 1e-9);
  }
}

TEST_CASE("exact oracle guard and tiny cases") {
  GenParams p;
  p.k = 2;
  p.num_events = 9;  // exceeds the |E| <= 8 guard
  p.num_intervals = 2;
  p.num_users = 4;
  p.num_locations = 3;
  p.theta = 5;
  p.xi_min = 0;
  p.xi_max = 1;
  p.competing_min = 0;
  p.competing_max = 1;
  p.seed = 3;
  const ProblemInstance big = generate(p);
  CHECK_THROWS_AS(solve_exact(big), InvalidParamsError);

  // single-event instance: that event lands at its best interval
  ProblemInstance single = fig1_instance(1);
  single.events.resize(1);
  single.event_interest.conservativeResize(2, 1);
  single.event_names.resize(1);
  single.validate();
  const auto [schedule, utility] = solve_exact(single);
  CHECK(schedule.size() == 1);
  const SolveResult alg = solve_alg(single);
  CHECK(alg.report.utility == doctest::Approx(utility).epsilon(1e-12));
}

TEST_CASE("schedules carry up-to-date gains for the greedy family") {
  const std::uint64_t seed = mix_seed(4242, 7);
  const GenParams params = corpus_params(seed, 30, 10, 15);
  const ProblemInstance inst = generate(params);
  for (const auto* solver : {"alg", "inc", "hor", "hor-i"}) {
    const SolveResult r = solve_by_name(solver, inst, 0);
    Scalar sum = 0;
    for (const Assignment& a : r.schedule.assignments()) {
      CHECK(a.updated);
      sum += a.score;
    }
    CHECK(sum ==
          doctest::Approx(r.report.utility).epsilon(1e-6));
  }
}

TEST_CASE("tie-break mutation in INC is caught by the equivalence check") {
  // Tie-rich family: three-valued interests produce many equal scores.
  int diverged = 0;
  for (int trial = 0; trial < 60; ++trial) {
    GenParams p;
    p.k = 6;
    p.num_events = 12;
    p.num_intervals = 4;
    p.num_users = 6;
    p.num_locations = 3;
    p.theta = 10;
    p.xi_min = 0;
    p.xi_max = 2;
    p.competing_min = 1;
    p.competing_max = 2;
    p.interest_dist = InterestDist::kZipf3;  // coarse value grid, many ties
    p.seed = mix_seed(31337, trial);
    ProblemInstance inst = generate(p);
    // Quantize interests onto {0, 0.5, 1} to force score collisions.
    inst.event_interest = (inst.event_interest * 2).round() / 2;
    inst.competing_interest = (inst.competing_interest * 2).round() / 2;
    inst.activity = (inst.activity * 2).round() / 2;
    inst.validate();

    const SolveResult alg = solve_alg(inst);
    const SolveResult good = solve_inc(inst);
    REQUIRE(good.schedule.same_assignments(alg.schedule));
    const SolveResult faulty = detail::solve_inc_impl(inst, true);
    if (!faulty.schedule.same_assignments(alg.schedule)) ++diverged;
  }
  // The mutation must be observable, otherwise the suite proves nothing.
  CHECK(diverged > 0);
}
