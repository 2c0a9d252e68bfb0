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

#include "ses/scoring.hpp"

#include <algorithm>

namespace ses {
namespace {

// Sum of sigma * num / den over users, with zero-denominator users
// contributing 0. den entries are never negative.
template <typename SigmaT, typename NumT, typename DenT>
Scalar guarded_share_sum(const SigmaT& sigma, const NumT& num,
                         const DenT& den) {
  if (sigma.size() == 0) return 0;
  return (den > Scalar(0)).select(sigma * num / den, Scalar(0)).sum();
}

}  // namespace

ScoreEngine::ScoreEngine(const ProblemInstance& inst, Options opts)
    : inst_(inst),
      schedule_(inst),
      competing_sum_(inst.num_intervals()),
      assigned_sum_(inst.num_intervals()),
      interval_attendance_(inst.num_intervals(), 0) {
  const std::int64_t cells =
      static_cast<std::int64_t>(inst.num_users()) * inst.num_intervals();
  if (cells <= opts.dense_cell_limit) {
    // Dense |U| x |T| layout: materialize every column up front.
    for (IntervalId t = 0; t < inst.num_intervals(); ++t) competing_sum(t);
  }
}

const ArrayXs& ScoreEngine::competing_sum(IntervalId t) const {
  std::optional<ArrayXs>& col = competing_sum_.at(t);
  if (!col) {
    ArrayXs d = ArrayXs::Zero(inst_.num_users());
    for (CompetingId c : inst_.intervals[t].competing)
      d += inst_.competing_interest.col(c);
    col = std::move(d);
  }
  return *col;
}

const ArrayXs* ScoreEngine::assigned_sum(IntervalId t) const {
  const std::optional<ArrayXs>& col = assigned_sum_.at(t);
  return col ? &*col : nullptr;
}

Scalar ScoreEngine::attendance_probability(UserId u, EventId e,
                                           IntervalId t) const {
  const auto& at = schedule_.events_at(t);
  if (std::find(at.begin(), at.end(), e) == at.end())
    throw InvalidParamsError("attendance_probability requires the event to be "
                             "scheduled at the queried interval");
  const ArrayXs* a = assigned_sum(t);
  const Scalar den = competing_sum(t)(u) + (a ? (*a)(u) : Scalar(0));
  if (den <= 0) return 0;
  return inst_.activity(u, t) * inst_.event_interest(u, e) / den;
}

Scalar ScoreEngine::expected_attendance(EventId e, IntervalId t) const {
  const auto& at = schedule_.events_at(t);
  if (std::find(at.begin(), at.end(), e) == at.end())
    throw InvalidParamsError("expected_attendance requires the event to be "
                             "scheduled at the queried interval");
  if (const ArrayXs* a = assigned_sum(t))
    return guarded_share_sum(inst_.activity.col(t),
                             inst_.event_interest.col(e),
                             competing_sum(t) + *a);
  return guarded_share_sum(inst_.activity.col(t), inst_.event_interest.col(e),
                           competing_sum(t));
}

Scalar ScoreEngine::interval_attendance(IntervalId t) const {
  return interval_attendance_.at(t);
}

Scalar ScoreEngine::assignment_gain(EventId e, IntervalId t,
                                    ComputationCounter& c) const {
  c.score_computations += inst_.num_users();
  const ArrayXs& d = competing_sum(t);
  const auto mu = inst_.event_interest.col(e);
  const auto sigma = inst_.activity.col(t);
  Scalar after;
  if (const ArrayXs* a = assigned_sum(t)) {
    ArrayXs num = *a + mu;
    ArrayXs den = d + num;
    after = guarded_share_sum(sigma, num, den);
  } else {
    ArrayXs num = mu;
    ArrayXs den = d + num;
    after = guarded_share_sum(sigma, num, den);
  }
  return after - interval_attendance_[t];
}

void ScoreEngine::apply(const Assignment& a) {
  schedule_.insert(a, inst_);  // throws if not valid
  std::optional<ArrayXs>& col = assigned_sum_.at(a.interval);
  if (!col) col = ArrayXs::Zero(inst_.num_users());
  *col += inst_.event_interest.col(a.event);
  // One user pass: W_t = sum over users of sigma * A / (D + A).
  ArrayXs den = competing_sum(a.interval) + *col;
  interval_attendance_[a.interval] =
      guarded_share_sum(inst_.activity.col(a.interval), *col, den);
}

void ScoreEngine::recompute_aggregates(IntervalId t, ArrayXs& a_out,
                                       Scalar& w_out) const {
  a_out = ArrayXs::Zero(inst_.num_users());
  for (EventId e : schedule_.events_at(t)) a_out += inst_.event_interest.col(e);
  ArrayXs den = competing_sum(t) + a_out;
  w_out = guarded_share_sum(inst_.activity.col(t), a_out, den);
}

Scalar total_utility(const Schedule& s, const ProblemInstance& inst) {
  if (!is_feasible(s, inst))
    throw InvalidParamsError("total_utility requires a feasible schedule");
  Scalar total = 0;
  for (IntervalId t = 0; t < inst.num_intervals(); ++t) {
    const auto& at = s.events_at(t);
    if (at.empty()) continue;
    ArrayXs den = ArrayXs::Zero(inst.num_users());
    for (CompetingId c : inst.intervals[t].competing)
      den += inst.competing_interest.col(c);
    for (EventId e : at) den += inst.event_interest.col(e);
    for (EventId e : at)
      total += guarded_share_sum(inst.activity.col(t),
                                 inst.event_interest.col(e), den);
  }
  return total;
}

}  // namespace ses
