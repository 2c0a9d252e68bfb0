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

#ifndef SES_SCORING_HPP_
#define SES_SCORING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ses/instance.hpp"
#include "ses/schedule.hpp"
#include "ses/types.hpp"

namespace ses {

// score_computations advances by |U| per gain evaluation; that is the paper's
// efficiency currency. assignments_examined advances by one each time a
// solver reads an assignment record during a selection or update scan.
struct ComputationCounter {
  std::int64_t score_computations = 0;
  std::int64_t assignments_examined = 0;
};

// Per-(user, interval) aggregates backing O(|U|) gain evaluation:
//   D_{u,t} = sum of mu_{u,c} over c in C_t      (fixed per instance)
//   A_{u,t} = sum of mu_{u,p} over p in E_t(S)   (grows as events land)
//   W_t     = expected attendance summed over E_t(S)
//
// Columns are materialized per interval. With eager_columns (the default
// below a size threshold) every column is allocated up front, giving the
// dense |U| x |T| layout; above the threshold columns are created only for
// touched intervals. An absent A column is exactly "no event assigned yet".
class ScoreEngine {
 public:
  struct Options {
    // Dense layout is used while |U| * |T| stays at or below this.
    std::int64_t dense_cell_limit = std::int64_t{1} << 26;
  };

  explicit ScoreEngine(const ProblemInstance& inst, Options opts = {});

  const ProblemInstance& instance() const { return inst_; }
  const Schedule& schedule() const { return schedule_; }

  // Eq. 1. Requires e in E_t(S) (the denominator's assigned-events sum
  // includes the event's own interest). A zero denominator yields 0.
  Scalar attendance_probability(UserId u, EventId e, IntervalId t) const;

  // Eq. 2: sum of attendance probabilities over all users. Requires e in
  // E_t(S).
  Scalar expected_attendance(EventId e, IntervalId t) const;

  // W_t for the current schedule state.
  Scalar interval_attendance(IntervalId t) const;

  // Eq. 4: gain in expected attendance from placing e at t, evaluated in one
  // pass over users. Requires e not already scheduled. Counts |U| score
  // computations. Users with a zero denominator contribute 0.
  Scalar assignment_gain(EventId e, IntervalId t, ComputationCounter& c) const;

  // Applies a valid assignment: A_{u,t} += mu_{u,e} for all u, W_t is
  // recomputed with one user pass, and the schedule is extended. Throws
  // InvalidParamsError if the assignment is not valid. Not a score
  // computation.
  void apply(const Assignment& a);

  // Test hook: recomputes A and W for one interval from the schedule alone.
  void recompute_aggregates(IntervalId t, ArrayXs& a_out, Scalar& w_out) const;

 private:
  const ArrayXs& competing_sum(IntervalId t) const;  // D column, cached
  const ArrayXs* assigned_sum(IntervalId t) const;   // A column or nullptr

  const ProblemInstance& inst_;
  Schedule schedule_;
  mutable std::vector<std::optional<ArrayXs>> competing_sum_;
  std::vector<std::optional<ArrayXs>> assigned_sum_;
  std::vector<Scalar> interval_attendance_;
};

// Eq. 3 evaluated from scratch: independent of any engine caches, including
// the competing-interest sums. Throws InvalidParamsError if the schedule is
// infeasible. This is the oracle route the gain/aggregate path is checked
// against.
Scalar total_utility(const Schedule& s, const ProblemInstance& inst);

}  // namespace ses

#endif  // SES_SCORING_HPP_
