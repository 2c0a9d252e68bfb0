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

#ifndef SES_SOLVERS_HPP_
#define SES_SOLVERS_HPP_

#include <cstdint>
#include <string>
#include <utility>

#include "ses/instance.hpp"
#include "ses/metrics.hpp"
#include "ses/schedule.hpp"
#include "ses/types.hpp"

namespace ses {

struct SolveResult {
  Schedule schedule;
  SolverReport report;
};

// Plain greedy: computes every initial score, then repeatedly selects the
// top-scoring valid assignment and recomputes every valid assignment of the
// selected interval. Deterministic under the shared tie-break.
SolveResult solve_alg(const ProblemInstance& inst);

// Incremental-updating greedy. Returns the identical schedule to solve_alg on
// every instance. Retains stale scores; a stale score is recomputed only when
// it tops the per-interval M list under the shared order (equivalently: only
// not-updated assignments with stale score >= the bound given by the top
// updated valid assignment are recomputed, best first). Never performs more
// score computations than solve_alg.
SolveResult solve_inc(const ProblemInstance& inst);

// Horizontal selection: per iteration, recomputes all remaining valid
// assignments once and then selects at most one assignment per interval (the
// top of each interval, popped from the M list, refilling from the interval
// list when a popped assignment's event was already taken).
SolveResult solve_hor(const ProblemInstance& inst);

// Horizontal selection with incremental updating: identical schedule to
// solve_hor. In iterations >= 2 each interval's update pass walks its list in
// stored-score order, recomputing only scores at or above the interval's
// rising bound; refills fall back to in-place incremental updates. Never
// performs more score computations than solve_hor.
SolveResult solve_hor_i(const ProblemInstance& inst);

// Baseline: computes all initial gains against the empty schedule once, then
// accepts assignments in descending score order while valid. Performs exactly
// |E| * |T| * |U| score computations.
SolveResult solve_top(const ProblemInstance& inst);

// Baseline: repeatedly draws a uniform (event, interval) pair from the
// currently valid set until k are assigned. Fully determined by seed;
// performs zero gain evaluations.
SolveResult solve_rand(const ProblemInstance& inst, std::uint64_t seed);

// Exhaustive oracle for small instances. Guard: |E| <= 8, |T| <= 4, k <= 6;
// throws InvalidParamsError beyond it. Returns an utility-maximal feasible
// schedule of size k and its utility.
std::pair<Schedule, Scalar> solve_exact(const ProblemInstance& inst);

// Dispatch by name: "alg", "inc", "hor", "hor-i", "top", "rand". Throws
// InvalidParamsError for unknown names.
SolveResult solve_by_name(const std::string& name, const ProblemInstance& inst,
                          std::uint64_t seed);
bool is_known_solver(const std::string& name);

namespace detail {
// Fault-injection hook used by the verification suite's mutation check: when
// true, solve_inc breaks score ties arbitrarily instead of using the shared
// order. Not part of the public contract.
SolveResult solve_inc_impl(const ProblemInstance& inst, bool fault_tiebreak);
}  // namespace detail

}  // namespace ses

#endif  // SES_SOLVERS_HPP_
