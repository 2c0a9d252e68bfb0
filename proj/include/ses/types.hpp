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

#ifndef SES_TYPES_HPP_
#define SES_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ses {

using Scalar = double;

// Dense ids, assigned contiguously from 0 at load/generation time.
using EventId = std::int32_t;
using IntervalId = std::int32_t;
using CompetingId = std::int32_t;
using UserId = std::int32_t;
using LocationId = std::int32_t;

using ArrayXs = Eigen::ArrayX<Scalar>;
using ArrayXXs = Eigen::ArrayXX<Scalar>;

// Raised when an id in a schedule or file does not resolve against the
// instance it is checked against.
struct MalformedScheduleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a solver cannot reach k valid assignments.
struct InfeasibleInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for inconsistent generator/CLI parameters or size-guard violations.
struct InvalidParamsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the instance-file parser; line is 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  int line;
};

}  // namespace ses

#endif  // SES_TYPES_HPP_
