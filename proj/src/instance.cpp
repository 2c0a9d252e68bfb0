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

#include "ses/instance.hpp"

#include <iostream>
#include <vector>

namespace ses {
namespace {

std::string fallback_name(char prefix, std::int64_t idx) {
  return std::string(1, prefix) + std::to_string(idx);
}

std::string name_or(const std::vector<std::string>& names, std::int64_t idx,
                    char prefix) {
  if (idx >= 0 && idx < static_cast<std::int64_t>(names.size()))
    return names[idx];
  return fallback_name(prefix, idx);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidParamsError(msg);
}

}  // namespace

std::string ProblemInstance::event_name(EventId e) const {
  return name_or(event_names, e, 'e');
}
std::string ProblemInstance::interval_name(IntervalId t) const {
  return name_or(interval_names, t, 't');
}
std::string ProblemInstance::competing_name(CompetingId c) const {
  return name_or(competing_names, c, 'c');
}
std::string ProblemInstance::user_name(UserId u) const {
  return name_or(user_names, u, 'u');
}
std::string ProblemInstance::location_name(LocationId l) const {
  return name_or(location_names, l, 'L');
}

void ProblemInstance::validate() const {
  require(k >= 1, "k must be >= 1");
  require(available_resources > 0, "available_resources must be > 0");

  const auto num_t = static_cast<std::int64_t>(intervals.size());
  const auto num_e = static_cast<std::int64_t>(events.size());
  const auto num_c = static_cast<std::int64_t>(competing.size());
  const std::int64_t num_u = activity.rows();

  require(num_e >= 1, "at least one candidate event is required");
  require(num_t >= 1, "at least one time interval is required");

  for (std::int64_t i = 0; i < num_t; ++i)
    require(intervals[i].id == i, "interval ids must be contiguous from 0");
  for (std::int64_t i = 0; i < num_e; ++i) {
    require(events[i].id == i, "event ids must be contiguous from 0");
    require(events[i].required_resources >= 0,
            "required_resources must be >= 0 for event " + event_name(i));
    if (events[i].required_resources > available_resources)
      std::cerr << "warning: event " << event_name(i)
                << " requires more resources than available ("
                << events[i].required_resources << " > " << available_resources
                << "); it can never be validly assigned\n";
  }
  for (std::int64_t i = 0; i < num_c; ++i) {
    require(competing[i].id == i, "competing ids must be contiguous from 0");
    require(competing[i].interval >= 0 && competing[i].interval < num_t,
            "competing event " + competing_name(i) +
                " references an unknown interval");
  }

  // Partition: each competing event appears in exactly one interval's list,
  // and that list is its own t_c's.
  std::vector<int> seen(num_c, 0);
  for (const TimeInterval& t : intervals) {
    for (CompetingId c : t.competing) {
      require(c >= 0 && c < num_c,
              "interval " + interval_name(t.id) +
                  " lists an unknown competing event");
      require(competing[c].interval == t.id,
              "competing event " + competing_name(c) +
                  " listed under interval " + interval_name(t.id) +
                  " but its own interval is " +
                  interval_name(competing[c].interval));
      ++seen[c];
    }
  }
  for (std::int64_t c = 0; c < num_c; ++c)
    require(seen[c] == 1, "competing event " + competing_name(c) +
                              " appears in " + std::to_string(seen[c]) +
                              " interval lists (expected exactly 1)");

  require(activity.rows() == num_u && activity.cols() == num_t,
          "activity matrix shape mismatch");
  require(event_interest.rows() == num_u && event_interest.cols() == num_e,
          "event_interest matrix shape mismatch");
  require(competing_interest.rows() == num_u &&
              competing_interest.cols() == num_c,
          "competing_interest matrix shape mismatch");

  auto in_unit = [](const ArrayXXs& m) {
    return m.size() == 0 || (m.minCoeff() >= 0 && m.maxCoeff() <= 1);
  };
  require(in_unit(activity), "activity values must lie in [0,1]");
  require(in_unit(event_interest), "interest values must lie in [0,1]");
  require(in_unit(competing_interest),
          "competing-interest values must lie in [0,1]");
  require(activity.allFinite() && event_interest.allFinite() &&
              competing_interest.allFinite(),
          "user values must be finite");
}

}  // namespace ses
