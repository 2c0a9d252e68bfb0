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

#ifndef SES_IO_HPP_
#define SES_IO_HPP_

#include <iosfwd>
#include <string>

#include "ses/instance.hpp"
#include "ses/metrics.hpp"
#include "ses/schedule.hpp"

namespace ses {

// Line-oriented instance text format, version 1. Sections appear in this
// exact order; '#' starts a comment, blank lines are ignored. Floats are
// written with 17 significant digits so serialization round-trips exactly.
//
//   ses-instance v1
//   [header]
//   available_resources <float>
//   k <int>
//   [intervals]
//   <interval-id> [<competing-id> ...]          # one line per interval
//   [events]
//   <event-id> <location-id> <float xi>
//   [competing]
//   <competing-id> <interval-id>
//   [users]
//   user <user-id>
//   activity <interval-id> <float>
//   interest <event-id> <float>
//   competing_interest <competing-id> <float>
//
// Ids are arbitrary whitespace-free strings; they are mapped to dense
// indices in file order and preserved for output. Omitted user entries are
// 0. Unknown sections or directives are rejected with the offending line.
ProblemInstance read_instance(std::istream& in);
ProblemInstance read_instance_file(const std::string& path);

void write_instance(const ProblemInstance& inst, std::ostream& out);
void write_instance_file(const ProblemInstance& inst, const std::string& path);

// Schedule file: one "<event-id>,<interval-id>" line per assignment, in
// selection order.
void write_schedule(const Schedule& s, const ProblemInstance& inst,
                    std::ostream& out);
void write_schedule_file(const Schedule& s, const ProblemInstance& inst,
                         const std::string& path);

// CSV row shape used by `ses solve` (header pinned by the CLI contract;
// elapsed is reported in integer milliseconds there).
std::string solve_csv_header();
std::string solve_csv_row(const SolverReport& r);

std::string format_scalar(Scalar v);  // 17 significant digits

}  // namespace ses

#endif  // SES_IO_HPP_
