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

#include "ses/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <vector>

#include "ses/seed.hpp"

namespace ses {
namespace {

Scalar clamp01(Scalar v) { return std::min(Scalar(1), std::max(Scalar(0), v)); }

// Zipf over ranks 1..100 mapped onto a descending unit grid: rank r emits
// 1 - (r-1)/100, so rank 1 (most probable) is the top value class.
class ZipfGrid {
 public:
  explicit ZipfGrid(double exponent) {
    cdf_.resize(kRanks);
    double total = 0;
    for (int r = 1; r <= kRanks; ++r) {
      total += 1.0 / std::pow(static_cast<double>(r), exponent);
      cdf_[r - 1] = total;
    }
    for (double& c : cdf_) c /= total;
  }

  Scalar draw(DetRng& rng) const {
    const double u = rng.canonical();
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    const int rank = static_cast<int>(it - cdf_.begin()) + 1;
    return Scalar(1) - Scalar(rank - 1) / Scalar(kRanks);
  }

 private:
  static constexpr int kRanks = 100;
  std::vector<double> cdf_;
};

Scalar draw_interest(InterestDist d, DetRng& rng, const ZipfGrid* zipf) {
  switch (d) {
    case InterestDist::kUniform:
      return rng.canonical();
    case InterestDist::kNormal:
      return clamp01(rng.normal(0.5, 0.25));
    default:
      return zipf->draw(rng);
  }
}

Scalar draw_activity(ActivityDist d, DetRng& rng) {
  if (d == ActivityDist::kNormal) return clamp01(rng.normal(0.5, 0.25));
  return rng.canonical();
}

// Lower bound on the number of valid assignments the instance admits: greedy
// placement of events (cheapest resource demand first) into intervals.
int placeable_count(const ProblemInstance& inst, int need) {
  const int num_t = inst.num_intervals();
  std::vector<Scalar> used(num_t, 0);
  std::vector<std::vector<LocationId>> locs(num_t);
  std::vector<int> order(inst.num_events());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.events[a].required_resources != inst.events[b].required_resources)
      return inst.events[a].required_resources <
             inst.events[b].required_resources;
    return a < b;
  });
  int placed = 0;
  for (int e : order) {
    const CandidateEvent& ev = inst.events[e];
    for (IntervalId t = 0; t < num_t; ++t) {
      if (used[t] + ev.required_resources > inst.available_resources) continue;
      if (std::find(locs[t].begin(), locs[t].end(), ev.location) !=
          locs[t].end())
        continue;
      used[t] += ev.required_resources;
      locs[t].push_back(ev.location);
      ++placed;
      break;
    }
    if (placed >= need) break;
  }
  return placed;
}

}  // namespace

void GenParams::check() const {
  if (k < 1) throw InvalidParamsError("k must be >= 1");
  if (num_events < k)
    throw InvalidParamsError("num_events (" + std::to_string(num_events) +
                             ") must be >= k (" + std::to_string(k) + ")");
  if (num_intervals < 1)
    throw InvalidParamsError("num_intervals must be >= 1");
  if (num_users < 0) throw InvalidParamsError("num_users must be >= 0");
  if (num_locations < 1)
    throw InvalidParamsError("num_locations must be >= 1");
  if (theta <= 0) throw InvalidParamsError("theta must be > 0");
  if (xi_min < 0 || xi_min > xi_max)
    throw InvalidParamsError("xi range must satisfy 0 <= xi_min <= xi_max");
  if (competing_min < 0 || competing_min > competing_max)
    throw InvalidParamsError(
        "competing range must satisfy 0 <= min <= max");
}

InterestDist interest_dist_from_string(const std::string& s) {
  if (s == "uniform") return InterestDist::kUniform;
  if (s == "normal") return InterestDist::kNormal;
  if (s == "zipf1") return InterestDist::kZipf1;
  if (s == "zipf2") return InterestDist::kZipf2;
  if (s == "zipf3") return InterestDist::kZipf3;
  throw InvalidParamsError("unknown interest distribution '" + s +
                           "' (expected uniform|normal|zipf1|zipf2|zipf3)");
}

ActivityDist activity_dist_from_string(const std::string& s) {
  if (s == "uniform") return ActivityDist::kUniform;
  if (s == "normal") return ActivityDist::kNormal;
  throw InvalidParamsError("unknown activity distribution '" + s +
                           "' (expected uniform|normal)");
}

std::string to_string(InterestDist d) {
  switch (d) {
    case InterestDist::kUniform: return "uniform";
    case InterestDist::kNormal: return "normal";
    case InterestDist::kZipf1: return "zipf1";
    case InterestDist::kZipf2: return "zipf2";
    case InterestDist::kZipf3: return "zipf3";
  }
  return "uniform";
}

std::string to_string(ActivityDist d) {
  return d == ActivityDist::kNormal ? "normal" : "uniform";
}

ProblemInstance generate(const GenParams& params) {
  params.check();
  DetRng rng(params.seed);

  ProblemInstance inst;
  inst.available_resources = params.theta;
  inst.k = params.k;

  const ZipfGrid zipf1(1), zipf2(2), zipf3(3);
  const ZipfGrid* zipf = nullptr;
  switch (params.interest_dist) {
    case InterestDist::kZipf1: zipf = &zipf1; break;
    case InterestDist::kZipf2: zipf = &zipf2; break;
    case InterestDist::kZipf3: zipf = &zipf3; break;
    default: break;
  }

  inst.events.resize(params.num_events);
  for (int e = 0; e < params.num_events; ++e) {
    inst.events[e].id = e;
    inst.events[e].required_resources =
        rng.uniform(params.xi_min, params.xi_max);
  }

  inst.intervals.resize(params.num_intervals);
  for (int t = 0; t < params.num_intervals; ++t) {
    inst.intervals[t].id = t;
    const auto count = rng.uniform_int(params.competing_min,
                                       params.competing_max);
    for (std::int64_t i = 0; i < count; ++i) {
      const CompetingId c = static_cast<CompetingId>(inst.competing.size());
      inst.competing.push_back({c, t});
      inst.intervals[t].competing.push_back(c);
    }
  }

  const auto num_u = static_cast<Eigen::Index>(params.num_users);
  inst.activity.resize(num_u, params.num_intervals);
  for (int t = 0; t < params.num_intervals; ++t)
    for (Eigen::Index u = 0; u < num_u; ++u)
      inst.activity(u, t) = draw_activity(params.activity_dist, rng);

  inst.event_interest.resize(num_u, params.num_events);
  for (int e = 0; e < params.num_events; ++e)
    for (Eigen::Index u = 0; u < num_u; ++u)
      inst.event_interest(u, e) =
          draw_interest(params.interest_dist, rng, zipf);

  inst.competing_interest.resize(num_u, inst.num_competing());
  for (int c = 0; c < inst.num_competing(); ++c)
    for (Eigen::Index u = 0; u < num_u; ++u)
      inst.competing_interest(u, c) =
          draw_interest(params.interest_dist, rng, zipf);

  // Locations come from a derived stream so a redraw disturbs nothing else.
  constexpr int kMaxLocationAttempts = 16;
  for (int attempt = 0;; ++attempt) {
    DetRng loc_rng(mix_seed(params.seed, 0x10cULL + attempt));
    for (int e = 0; e < params.num_events; ++e)
      inst.events[e].location =
          static_cast<LocationId>(loc_rng.uniform_int(0, params.num_locations - 1));
    if (placeable_count(inst, params.k) >= params.k) break;
    if (attempt + 1 >= kMaxLocationAttempts)
      throw InvalidParamsError(
          "could not draw locations admitting k valid assignments after " +
          std::to_string(kMaxLocationAttempts) + " attempts");
    std::cerr << "warning: drawn locations admit fewer than k = " << params.k
              << " valid assignments; redrawing locations (attempt "
              << attempt + 2 << ")\n";
  }

  inst.validate();
  return inst;
}

}  // namespace ses
