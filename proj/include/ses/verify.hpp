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

#ifndef SES_VERIFY_HPP_
#define SES_VERIFY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ses/datagen.hpp"
#include "ses/instance.hpp"

namespace ses {

// Cross-solver checks shared by `ses verify` and the acceptance suite: the
// two schedule-equivalence propositions, counter dominance, the
// update-monotonicity property, telescoping/utility consistency, and the
// exact-oracle gap report.
struct VerifyOptions {
  int trials = 200;
  std::uint64_t seed = 2024;
  int max_events = 60;
  int max_intervals = 30;
  int max_k = 40;
  int oracle_trials = 100;  // small instances pushed through solve_exact
  int monotonicity_samples = 10000;
};

struct VerifyStats {
  int trials = 0;
  int inc_alg_equal = 0;
  int hori_hor_equal = 0;
  int hor_alg_equal_utility = 0;
  int counter_dominance_ok = 0;
  int telescoping_ok = 0;
  int monotonicity_samples = 0;
  int monotonicity_ok = 0;
  int oracle_trials = 0;
  int oracle_bound_ok = 0;
  double oracle_mean_ratio = 0;  // utility(ALG) / utility(exact)
  std::vector<std::string> failures;

  bool all_ok() const { return failures.empty(); }
};

// Draws one random corpus instance. Cycles interest distributions across
// Uniform / Normal / Zipfian and keeps sizes within the given caps.
GenParams corpus_params(std::uint64_t seed, int max_events, int max_intervals,
                        int max_k);

VerifyStats run_verification(const VerifyOptions& opts, std::ostream& log);

}  // namespace ses

#endif  // SES_VERIFY_HPP_
