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

#ifndef SES_INSTANCE_HPP_
#define SES_INSTANCE_HPP_

#include <string>
#include <vector>

#include "ses/types.hpp"

namespace ses {

// A candidate event to be placed into a time interval.
struct CandidateEvent {
  EventId id = 0;
  LocationId location = 0;
  Scalar required_resources = 0;  // xi_e >= 0
};

// A third-party event fixed to one interval; drains user attention there.
struct CompetingEvent {
  CompetingId id = 0;
  IntervalId interval = 0;  // t_c
};

struct TimeInterval {
  IntervalId id = 0;
  std::vector<CompetingId> competing;  // C_t
};

// The full problem input. Immutable after construction / validate(); safe to
// share across threads.
//
// User data is stored columnar: row u of each array is user u, and a column
// is one event / competing event / interval. Missing interest entries are 0.
struct ProblemInstance {
  Scalar available_resources = 0;  // theta > 0
  int k = 0;

  std::vector<TimeInterval> intervals;
  std::vector<CandidateEvent> events;
  std::vector<CompetingEvent> competing;

  ArrayXXs activity;            // |U| x |T|, sigma_u^t in [0,1]
  ArrayXXs event_interest;      // |U| x |E|, mu_{u,e} in [0,1]
  ArrayXXs competing_interest;  // |U| x |C|, mu_{u,c} in [0,1]

  // External string ids, preserved from files for output. Empty vectors mean
  // "synthesize names from indices" (e0, t0, c0, u0, ...).
  std::vector<std::string> event_names;
  std::vector<std::string> interval_names;
  std::vector<std::string> competing_names;
  std::vector<std::string> user_names;
  std::vector<std::string> location_names;

  Eigen::Index num_users() const { return activity.rows(); }
  int num_events() const { return static_cast<int>(events.size()); }
  int num_intervals() const { return static_cast<int>(intervals.size()); }
  int num_competing() const { return static_cast<int>(competing.size()); }

  std::string event_name(EventId e) const;
  std::string interval_name(IntervalId t) const;
  std::string competing_name(CompetingId c) const;
  std::string user_name(UserId u) const;
  std::string location_name(LocationId l) const;

  // Checks every structural invariant: contiguous ids, the competing-event
  // partition (each c appears exactly in C_{t_c}), value bounds in [0,1],
  // theta > 0, k >= 1, xi_e >= 0, and matrix shapes. Throws
  // InvalidParamsError on violation. Emits a warning to stderr for events
  // with xi_e > theta (legal to load, never validly assignable).
  void validate() const;
};

}  // namespace ses

#endif  // SES_INSTANCE_HPP_
