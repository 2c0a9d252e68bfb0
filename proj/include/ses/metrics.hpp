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

#ifndef SES_METRICS_HPP_
#define SES_METRICS_HPP_

#include <chrono>
#include <cstdint>
#include <string>

#include "ses/instance.hpp"
#include "ses/schedule.hpp"
#include "ses/scoring.hpp"

namespace ses {

// One solve's measurements. utility is always a from-scratch Eq. 3
// recomputation, never a solver-cached value.
struct SolverReport {
  std::string solver;
  Scalar utility = 0;
  std::int64_t score_computations = 0;
  std::int64_t assignments_examined = 0;
  std::int64_t elapsed_us = 0;
  std::uint64_t seed = 0;
  int k = 0;
  int num_events = 0;
  int num_intervals = 0;
  std::int64_t num_users = 0;
};

// Wall-clock scope for one solve.
class SolveTimer {
 public:
  SolveTimer() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_us() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

SolverReport finalize(const std::string& solver, const Schedule& schedule,
                      const ProblemInstance& inst,
                      const ComputationCounter& counter,
                      const SolveTimer& timer, std::uint64_t seed = 0);

}  // namespace ses

#endif  // SES_METRICS_HPP_
