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

#ifndef SES_DATAGEN_HPP_
#define SES_DATAGEN_HPP_

#include <cstdint>

#include "ses/instance.hpp"

namespace ses {

enum class InterestDist { kUniform, kNormal, kZipf1, kZipf2, kZipf3 };
enum class ActivityDist { kUniform, kNormal };

// Synthetic-instance parameters. Defaults are the benchmark grid's bold
// entries: k=100, |E|=2k, |T|=3k/2, |U|=50000, 25 locations, theta=20,
// xi ~ U[1, theta/3], competing count per interval ~ U{1..16}, uniform
// interest and activity.
struct GenParams {
  int k = 100;
  int num_events = 200;
  int num_intervals = 150;
  std::int64_t num_users = 50000;
  int num_locations = 25;
  Scalar theta = 20;
  Scalar xi_min = 1;
  Scalar xi_max = 20.0 / 3.0;
  int competing_min = 1;
  int competing_max = 16;
  InterestDist interest_dist = InterestDist::kUniform;
  ActivityDist activity_dist = ActivityDist::kUniform;
  std::uint64_t seed = 1;

  // Throws InvalidParamsError when internally inconsistent (k > |E|,
  // locations < 1, theta <= 0, empty ranges, ...).
  void check() const;
};

InterestDist interest_dist_from_string(const std::string& s);
ActivityDist activity_dist_from_string(const std::string& s);
std::string to_string(InterestDist d);
std::string to_string(ActivityDist d);

// Deterministic under params.seed. All interest/activity values are clamped
// to [0,1]. If the drawn locations leave fewer than k placeable events, the
// locations are redrawn with a warning (the grid defaults never trigger
// this).
ProblemInstance generate(const GenParams& params);

}  // namespace ses

#endif  // SES_DATAGEN_HPP_
