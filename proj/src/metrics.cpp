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

#include "ses/metrics.hpp"

#include "ses/scoring.hpp"

namespace ses {

SolverReport finalize(const std::string& solver, const Schedule& schedule,
                      const ProblemInstance& inst,
                      const ComputationCounter& counter,
                      const SolveTimer& timer, std::uint64_t seed) {
  SolverReport r;
  r.solver = solver;
  // Recomputed from scratch, independent of any solver-cached gains.
  r.utility = total_utility(schedule, inst);
  r.score_computations = counter.score_computations;
  r.assignments_examined = counter.assignments_examined;
  r.elapsed_us = timer.elapsed_us();
  r.seed = seed;
  r.k = inst.k;
  r.num_events = inst.num_events();
  r.num_intervals = inst.num_intervals();
  r.num_users = inst.num_users();
  return r;
}

}  // namespace ses
