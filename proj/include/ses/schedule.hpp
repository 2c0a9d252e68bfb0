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

#ifndef SES_SCHEDULE_HPP_
#define SES_SCHEDULE_HPP_

#include <vector>

#include "ses/instance.hpp"
#include "ses/types.hpp"

namespace ses {

// Placement of one event at one interval, with its cached gain score and
// update status. updated == true means the score was computed against the
// current schedule state of the assignment's interval.
struct Assignment {
  EventId event = 0;
  IntervalId interval = 0;
  Scalar score = 0;
  bool updated = true;
};

// Shared total order used by every solver: score desc, then event id asc,
// then interval id asc. The equivalence propositions between solvers only
// hold run-to-run under one such order.
inline bool assignment_precedes(const Assignment& a, const Assignment& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.event != b.event) return a.event < b.event;
  return a.interval < b.interval;
}

// A feasible set of assignments, at most one per event. Maintains the
// per-interval event lists E_t(S), resource totals and taken locations so the
// two feasibility constraints can be probed in O(|E_t|). Single-owner mutable
// value; no internal synchronization.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(const ProblemInstance& inst);

  int size() const { return static_cast<int>(assignments_.size()); }
  bool empty() const { return assignments_.empty(); }
  const std::vector<Assignment>& assignments() const { return assignments_; }

  bool contains_event(EventId e) const;
  const std::vector<EventId>& events_at(IntervalId t) const;  // E_t(S)
  Scalar resources_at(IntervalId t) const;
  bool location_taken(IntervalId t, LocationId l) const;

  // Inserts a valid assignment; throws MalformedScheduleError on unresolved
  // ids and InvalidParamsError if the assignment is not valid against the
  // current state.
  void insert(const Assignment& a, const ProblemInstance& inst);

  // Set equality over (event, interval) pairs.
  bool same_assignments(const Schedule& other) const;

 private:
  std::vector<Assignment> assignments_;
  std::vector<std::vector<EventId>> events_at_;     // per interval
  std::vector<Scalar> resources_at_;                // per interval
  std::vector<std::vector<LocationId>> locations_;  // per interval, taken
  std::vector<char> event_scheduled_;               // per event
};

// True iff the location constraint and the resources constraint hold for
// every interval and no event is assigned twice. Recomputed from scratch;
// unresolved ids raise MalformedScheduleError.
bool is_feasible(const Schedule& s, const ProblemInstance& inst);

// True iff `a` is feasible w.r.t. its interval under the current schedule and
// a.event is not already scheduled anywhere.
bool is_valid(const Assignment& a, const Schedule& s,
              const ProblemInstance& inst);

}  // namespace ses

#endif  // SES_SCHEDULE_HPP_
