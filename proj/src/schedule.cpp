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

#include "ses/schedule.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ses {
namespace {

void check_ids(EventId e, IntervalId t, const ProblemInstance& inst) {
  if (e < 0 || e >= inst.num_events())
    throw MalformedScheduleError("unresolved event id " + std::to_string(e));
  if (t < 0 || t >= inst.num_intervals())
    throw MalformedScheduleError("unresolved interval id " + std::to_string(t));
}

}  // namespace

Schedule::Schedule(const ProblemInstance& inst)
    : events_at_(inst.num_intervals()),
      resources_at_(inst.num_intervals(), 0),
      locations_(inst.num_intervals()),
      event_scheduled_(inst.num_events(), 0) {}

bool Schedule::contains_event(EventId e) const {
  return e >= 0 && e < static_cast<EventId>(event_scheduled_.size()) &&
         event_scheduled_[e] != 0;
}

const std::vector<EventId>& Schedule::events_at(IntervalId t) const {
  return events_at_.at(t);
}

Scalar Schedule::resources_at(IntervalId t) const { return resources_at_.at(t); }

bool Schedule::location_taken(IntervalId t, LocationId l) const {
  const auto& locs = locations_.at(t);
  return std::find(locs.begin(), locs.end(), l) != locs.end();
}

void Schedule::insert(const Assignment& a, const ProblemInstance& inst) {
  if (!is_valid(a, *this, inst))
    throw InvalidParamsError("assignment of event " + inst.event_name(a.event) +
                             " at interval " + inst.interval_name(a.interval) +
                             " is not valid against the current schedule");
  assignments_.push_back(a);
  events_at_[a.interval].push_back(a.event);
  resources_at_[a.interval] += inst.events[a.event].required_resources;
  locations_[a.interval].push_back(inst.events[a.event].location);
  event_scheduled_[a.event] = 1;
}

bool Schedule::same_assignments(const Schedule& other) const {
  auto key = [](const Assignment& a) { return std::pair(a.event, a.interval); };
  std::set<std::pair<EventId, IntervalId>> lhs, rhs;
  for (const Assignment& a : assignments_) lhs.insert(key(a));
  for (const Assignment& a : other.assignments_) rhs.insert(key(a));
  return lhs == rhs;
}

bool is_feasible(const Schedule& s, const ProblemInstance& inst) {
  std::vector<char> event_seen(inst.num_events(), 0);
  std::vector<std::set<LocationId>> locations(inst.num_intervals());
  std::vector<Scalar> resources(inst.num_intervals(), 0);
  for (const Assignment& a : s.assignments()) {
    check_ids(a.event, a.interval, inst);
    if (event_seen[a.event]) return false;
    event_seen[a.event] = 1;
    const CandidateEvent& e = inst.events[a.event];
    if (!locations[a.interval].insert(e.location).second) return false;
    resources[a.interval] += e.required_resources;
    if (resources[a.interval] > inst.available_resources) return false;
  }
  return true;
}

bool is_valid(const Assignment& a, const Schedule& s,
              const ProblemInstance& inst) {
  check_ids(a.event, a.interval, inst);
  if (s.contains_event(a.event)) return false;
  const CandidateEvent& e = inst.events[a.event];
  if (s.location_taken(a.interval, e.location)) return false;
  return s.resources_at(a.interval) + e.required_resources <=
         inst.available_resources;
}

}  // namespace ses
