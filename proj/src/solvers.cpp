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

#include "ses/solvers.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "ses/scoring.hpp"

namespace ses {
namespace {

// Solver-internal assignment record; the interval is the index of the list
// holding it. epoch matches the interval's selection epoch while the score is
// up to date.
struct Rec {
  Scalar score;
  EventId event;
  std::uint32_t epoch;
};

// Within one interval: score desc, then event id asc.
bool rec_precedes(const Rec& a, const Rec& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.event < b.event;
}

// Cached per-interval top used for selection. Reading the cache is free; it
// was filled from counted record reads.
struct Top {
  Scalar score = 0;
  EventId event = -1;
  bool fresh = false;
  bool present = false;
};

// Cross-interval order: score desc, event asc, interval asc (the shared
// tie-break). fault_tiebreak drops everything past the score (the
// verification suite's mutation hook); ties then stay with the earlier
// interval regardless of event ids.
bool top_precedes(const Top& a, IntervalId, const Top& b, IntervalId,
                  bool fault_tiebreak) {
  if (a.score != b.score) return a.score > b.score;
  if (fault_tiebreak) return false;
  return a.event < b.event;  // interval asc == scan order, implicit
}

void throw_shortfall(int placed, int k) {
  throw InfeasibleInstanceError(
      "instance admits only " + std::to_string(placed) +
      " valid assignments; k = " + std::to_string(k) +
      " requested (shortfall " + std::to_string(k - placed) + ")");
}

void check_k(const ProblemInstance& inst) {
  if (inst.k < 1) throw InvalidParamsError("k must be >= 1");
  if (inst.k > inst.num_events())
    throw InfeasibleInstanceError(
        "k = " + std::to_string(inst.k) + " exceeds the " +
        std::to_string(inst.num_events()) + " candidate events");
}

bool fits_alone(const CandidateEvent& e, const ProblemInstance& inst) {
  return e.required_resources <= inst.available_resources;
}

// After the record at `pos` had its score lowered, restore descending order
// by sinking it. List maintenance, not a counted scan.
void sink(std::vector<Rec>& list, std::size_t pos) {
  while (pos + 1 < list.size() && rec_precedes(list[pos + 1], list[pos])) {
    std::swap(list[pos], list[pos + 1]);
    ++pos;
  }
}

// ---------------------------------------------------------------------------
// ALG: full table, full rescan per step.
// ---------------------------------------------------------------------------

SolveResult solve_alg_impl(const ProblemInstance& inst) {
  SolveTimer timer;
  check_k(inst);
  ScoreEngine engine(inst);
  ComputationCounter counter;
  const int num_e = inst.num_events();
  const int num_t = inst.num_intervals();

  // All |E| x |T| initial scores; records that can never be valid are
  // computed (the initial pass prices every pair) but not kept.
  std::vector<std::vector<Rec>> lists(num_t);
  for (IntervalId t = 0; t < num_t; ++t) {
    lists[t].reserve(num_e);
    for (EventId e = 0; e < num_e; ++e) {
      const Scalar s = engine.assignment_gain(e, t, counter);
      if (fits_alone(inst.events[e], inst)) lists[t].push_back({s, e, 0});
    }
  }

  std::vector<char> taken(num_e, 0);
  while (engine.schedule().size() < inst.k) {
    // Selection scan over every remaining assignment.
    bool found = false;
    Rec best{0, -1, 0};
    IntervalId best_t = -1;
    for (IntervalId t = 0; t < num_t; ++t) {
      auto& list = lists[t];
      for (std::size_t i = 0; i < list.size();) {
        ++counter.assignments_examined;
        if (taken[list[i].event]) {
          list[i] = list.back();
          list.pop_back();
          continue;
        }
        const Rec& r = list[i];
        if (!found || r.score > best.score ||
            (r.score == best.score &&
             (r.event < best.event ||
              (r.event == best.event && t < best_t)))) {
          found = true;
          best = r;
          best_t = t;
        }
        ++i;
      }
    }
    if (!found) throw_shortfall(engine.schedule().size(), inst.k);

    engine.apply({best.event, best_t, best.score, true});
    taken[best.event] = 1;
    if (engine.schedule().size() == inst.k) break;

    // Update pass: every still-valid assignment of the selected interval is
    // recomputed; invalid ones are dropped.
    auto& list = lists[best_t];
    for (std::size_t i = 0; i < list.size();) {
      ++counter.assignments_examined;
      Rec& r = list[i];
      if (taken[r.event] ||
          !is_valid({r.event, best_t, 0, true}, engine.schedule(), inst)) {
        r = list.back();
        list.pop_back();
        continue;
      }
      r.score = engine.assignment_gain(r.event, best_t, counter);
      ++i;
    }
  }

  SolveResult out;
  out.schedule = engine.schedule();
  out.report = finalize("alg", out.schedule, inst, counter, timer);
  return out;
}

// ---------------------------------------------------------------------------
// INC: per-interval sorted lists with stale-score retention. A stale score is
// recomputed only while it tops the interval-top cache under the shared
// order, which realizes the bound rule (only not-updated assignments scoring
// at or above the top updated valid assignment are touched) and skips whole
// intervals whose top sits below the bound.
// ---------------------------------------------------------------------------

SolveResult solve_inc_body(const ProblemInstance& inst, bool fault_tiebreak) {
  SolveTimer timer;
  check_k(inst);
  ScoreEngine engine(inst);
  ComputationCounter counter;
  const int num_e = inst.num_events();
  const int num_t = inst.num_intervals();

  std::vector<std::vector<Rec>> lists(num_t);
  for (IntervalId t = 0; t < num_t; ++t) {
    lists[t].reserve(num_e);
    for (EventId e = 0; e < num_e; ++e) {
      const Scalar s = engine.assignment_gain(e, t, counter);
      if (fits_alone(inst.events[e], inst)) lists[t].push_back({s, e, 0});
    }
    if (fault_tiebreak)
      std::stable_sort(lists[t].begin(), lists[t].end(),
                       [](const Rec& a, const Rec& b) {
                         return a.score > b.score;
                       });
    else
      std::sort(lists[t].begin(), lists[t].end(), rec_precedes);
  }

  std::vector<std::size_t> head(num_t, 0);
  std::vector<std::uint32_t> epoch(num_t, 0);
  std::vector<char> taken(num_e, 0);
  std::vector<Top> tops(num_t);

  // Advances the head past dead records and snapshots the top. Every record
  // read is counted.
  auto peek = [&](IntervalId t) {
    auto& list = lists[t];
    std::size_t& h = head[t];
    while (h < list.size()) {
      ++counter.assignments_examined;
      const Rec& r = list[h];
      if (taken[r.event] ||
          !is_valid({r.event, t, 0, true}, engine.schedule(), inst)) {
        ++h;
        continue;
      }
      tops[t] = {r.score, r.event, r.epoch == epoch[t], true};
      return;
    }
    tops[t] = Top{};
  };

  while (engine.schedule().size() < inst.k) {
    for (IntervalId t = 0; t < num_t; ++t) peek(t);
    IntervalId best_t;
    for (;;) {
      best_t = -1;
      for (IntervalId t = 0; t < num_t; ++t) {
        if (!tops[t].present) continue;
        if (best_t < 0 ||
            top_precedes(tops[t], t, tops[best_t], best_t, fault_tiebreak))
          best_t = t;
      }
      if (best_t < 0) throw_shortfall(engine.schedule().size(), inst.k);
      if (tops[best_t].fresh) break;
      // Stale top at the front of the order: bring it up to date in place.
      Rec& r = lists[best_t][head[best_t]];
      r.score = engine.assignment_gain(r.event, best_t, counter);
      r.epoch = epoch[best_t];
      sink(lists[best_t], head[best_t]);
      peek(best_t);
    }

    const Rec sel = lists[best_t][head[best_t]];
    engine.apply({sel.event, best_t, sel.score, true});
    taken[sel.event] = 1;
    ++head[best_t];
    ++epoch[best_t];  // remaining records of this interval turn stale
  }

  SolveResult out;
  out.schedule = engine.schedule();
  out.report = finalize("inc", out.schedule, inst, counter, timer);
  return out;
}

// ---------------------------------------------------------------------------
// HOR / HOR-I: horizontal selection. Shared iteration scaffolding; HOR
// rebuilds every score at each iteration start, HOR-I keeps the lists and
// prunes the per-interval update pass with a rising bound.
// ---------------------------------------------------------------------------

SolveResult solve_hor_body(const ProblemInstance& inst, bool incremental) {
  SolveTimer timer;
  check_k(inst);
  ScoreEngine engine(inst);
  ComputationCounter counter;
  const int num_e = inst.num_events();
  const int num_t = inst.num_intervals();

  std::vector<std::vector<Rec>> lists(num_t);
  std::vector<std::size_t> head(num_t, 0);
  std::vector<std::uint32_t> epoch(num_t, 0);
  std::vector<char> taken(num_e, 0);
  std::vector<Top> tops(num_t);
  bool first_iteration = true;

  // Walks the head forward past taken events; for HOR-I additionally brings
  // a stale head up to date in place before it may be offered for selection.
  auto peek = [&](IntervalId t) {
    auto& list = lists[t];
    std::size_t& h = head[t];
    while (h < list.size()) {
      ++counter.assignments_examined;
      Rec& r = list[h];
      if (taken[r.event]) {
        ++h;
        continue;
      }
      if (incremental && r.epoch != epoch[t]) {
        r.score = engine.assignment_gain(r.event, t, counter);
        r.epoch = epoch[t];
        sink(list, h);
        continue;
      }
      tops[t] = {r.score, r.event, true, true};
      return;
    }
    tops[t] = Top{};
  };

  while (engine.schedule().size() < inst.k) {
    const int placed_before = engine.schedule().size();

    if (first_iteration || !incremental) {
      // (Re)generate: score every currently valid pair. Probes in iterations
      // past the first are update-scan reads.
      for (IntervalId t = 0; t < num_t; ++t) {
        lists[t].clear();
        head[t] = 0;
        for (EventId e = 0; e < num_e; ++e) {
          if (taken[e]) continue;
          if (!first_iteration) ++counter.assignments_examined;
          if (!is_valid({e, t, 0, true}, engine.schedule(), inst)) continue;
          lists[t].push_back(
              {engine.assignment_gain(e, t, counter), e, epoch[t]});
        }
        std::sort(lists[t].begin(), lists[t].end(), rec_precedes);
      }
    } else {
      // Incremental update pass: walk each list in stored order with a
      // per-interval bound starting at 0; recompute only stale scores at or
      // above the bound, raise it as updates land, drop invalid records.
      for (IntervalId t = 0; t < num_t; ++t) {
        auto& list = lists[t];
        std::vector<Rec> kept;
        kept.reserve(list.size() - std::min(head[t], list.size()));
        Scalar bound = 0;
        for (std::size_t i = head[t]; i < list.size(); ++i) {
          ++counter.assignments_examined;
          Rec r = list[i];
          if (taken[r.event] ||
              !is_valid({r.event, t, 0, true}, engine.schedule(), inst))
            continue;
          if (r.epoch == epoch[t]) {
            bound = std::max(bound, r.score);
          } else if (r.score >= bound) {
            r.score = engine.assignment_gain(r.event, t, counter);
            r.epoch = epoch[t];
            bound = std::max(bound, r.score);
          }
          kept.push_back(r);
        }
        std::sort(kept.begin(), kept.end(), rec_precedes);
        list = std::move(kept);
        head[t] = 0;
      }
    }
    first_iteration = false;

    // Selection phase: pop the top assignment per interval, closing the
    // interval for this iteration; a popped record whose event was taken by
    // an earlier interval is replaced from its list.
    for (IntervalId t = 0; t < num_t; ++t) peek(t);
    while (engine.schedule().size() < inst.k) {
      IntervalId best_t = -1;
      for (IntervalId t = 0; t < num_t; ++t) {
        if (!tops[t].present) continue;
        if (taken[tops[t].event]) {
          peek(t);  // refill from the interval's list
          if (!tops[t].present) continue;
        }
        if (best_t < 0 || top_precedes(tops[t], t, tops[best_t], best_t, false))
          best_t = t;
      }
      if (best_t < 0) break;  // iteration exhausted

      const Rec sel = lists[best_t][head[best_t]];
      engine.apply({sel.event, best_t, sel.score, true});
      taken[sel.event] = 1;
      ++head[best_t];
      ++epoch[best_t];
      tops[best_t] = Top{};  // interval closed for this iteration
    }

    if (engine.schedule().size() == placed_before)
      throw_shortfall(engine.schedule().size(), inst.k);
  }

  SolveResult out;
  out.schedule = engine.schedule();
  out.report = finalize(incremental ? "hor-i" : "hor", out.schedule, inst,
                        counter, timer);
  return out;
}

// ---------------------------------------------------------------------------
// TOP baseline: one scoring pass against the empty schedule, then a single
// descending walk accepting whatever is still valid.
// ---------------------------------------------------------------------------

SolveResult solve_top_impl(const ProblemInstance& inst) {
  SolveTimer timer;
  check_k(inst);
  ScoreEngine engine(inst);
  ComputationCounter counter;
  const int num_e = inst.num_events();
  const int num_t = inst.num_intervals();

  struct Flat {
    Scalar score;
    EventId event;
    IntervalId interval;
  };
  std::vector<Flat> all;
  all.reserve(static_cast<std::size_t>(num_e) * num_t);
  for (IntervalId t = 0; t < num_t; ++t)
    for (EventId e = 0; e < num_e; ++e)
      all.push_back({engine.assignment_gain(e, t, counter), e, t});
  std::sort(all.begin(), all.end(), [](const Flat& a, const Flat& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.event != b.event) return a.event < b.event;
    return a.interval < b.interval;
  });

  for (const Flat& f : all) {
    if (engine.schedule().size() == inst.k) break;
    ++counter.assignments_examined;
    Assignment a{f.event, f.interval, f.score,
                 engine.schedule().events_at(f.interval).empty()};
    if (is_valid(a, engine.schedule(), inst)) engine.apply(a);
  }
  if (engine.schedule().size() < inst.k)
    throw_shortfall(engine.schedule().size(), inst.k);

  SolveResult out;
  out.schedule = engine.schedule();
  out.report = finalize("top", out.schedule, inst, counter, timer);
  return out;
}

// ---------------------------------------------------------------------------
// RAND baseline: uniform draws over the currently valid pairs.
// ---------------------------------------------------------------------------

SolveResult solve_rand_impl(const ProblemInstance& inst, std::uint64_t seed) {
  SolveTimer timer;
  check_k(inst);
  ComputationCounter counter;
  Schedule sched(inst);
  std::mt19937_64 rng(seed);

  std::vector<std::pair<EventId, IntervalId>> valid;
  while (sched.size() < inst.k) {
    valid.clear();
    for (EventId e = 0; e < inst.num_events(); ++e) {
      if (sched.contains_event(e)) continue;
      for (IntervalId t = 0; t < inst.num_intervals(); ++t) {
        ++counter.assignments_examined;
        if (is_valid({e, t, 0, false}, sched, inst)) valid.push_back({e, t});
      }
    }
    if (valid.empty()) throw_shortfall(sched.size(), inst.k);
    const auto& pick = valid[rng() % valid.size()];
    sched.insert({pick.first, pick.second, 0, false}, inst);
  }

  SolveResult out;
  out.schedule = sched;
  out.report = finalize("rand", out.schedule, inst, counter, timer, seed);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle.
// ---------------------------------------------------------------------------

struct ExactState {
  const ProblemInstance& inst;
  std::vector<Assignment> chosen;
  std::vector<Scalar> resources;
  std::vector<std::vector<LocationId>> locations;
  Scalar best_utility = -1;
  std::vector<Assignment> best;

  explicit ExactState(const ProblemInstance& i)
      : inst(i),
        resources(i.num_intervals(), 0),
        locations(i.num_intervals()) {}

  bool placeable(EventId e, IntervalId t) const {
    const CandidateEvent& ev = inst.events[e];
    if (resources[t] + ev.required_resources > inst.available_resources)
      return false;
    const auto& locs = locations[t];
    return std::find(locs.begin(), locs.end(), ev.location) == locs.end();
  }

  void evaluate_leaf() {
    Schedule s(inst);
    for (const Assignment& a : chosen) s.insert(a, inst);
    const Scalar u = total_utility(s, inst);
    if (u > best_utility) {
      best_utility = u;
      best = chosen;
    }
  }

  void dfs(EventId e) {
    if (static_cast<int>(chosen.size()) == inst.k) {
      evaluate_leaf();
      return;
    }
    if (e == inst.num_events()) return;
    const int remaining_needed = inst.k - static_cast<int>(chosen.size());
    if (inst.num_events() - e < remaining_needed) return;
    for (IntervalId t = 0; t < inst.num_intervals(); ++t) {
      if (!placeable(e, t)) continue;
      const CandidateEvent& ev = inst.events[e];
      chosen.push_back({e, t, 0, false});
      resources[t] += ev.required_resources;
      locations[t].push_back(ev.location);
      dfs(e + 1);
      locations[t].pop_back();
      resources[t] -= ev.required_resources;
      chosen.pop_back();
    }
    dfs(e + 1);  // leave e unscheduled
  }
};

}  // namespace

SolveResult solve_alg(const ProblemInstance& inst) {
  return solve_alg_impl(inst);
}

SolveResult solve_inc(const ProblemInstance& inst) {
  return solve_inc_body(inst, false);
}

SolveResult solve_hor(const ProblemInstance& inst) {
  return solve_hor_body(inst, false);
}

SolveResult solve_hor_i(const ProblemInstance& inst) {
  return solve_hor_body(inst, true);
}

SolveResult solve_top(const ProblemInstance& inst) {
  return solve_top_impl(inst);
}

SolveResult solve_rand(const ProblemInstance& inst, std::uint64_t seed) {
  return solve_rand_impl(inst, seed);
}

std::pair<Schedule, Scalar> solve_exact(const ProblemInstance& inst) {
  if (inst.num_events() > 8 || inst.num_intervals() > 4 || inst.k > 6)
    throw InvalidParamsError(
        "exact oracle size guard: requires |E| <= 8, |T| <= 4, k <= 6, got "
        "|E| = " + std::to_string(inst.num_events()) +
        ", |T| = " + std::to_string(inst.num_intervals()) +
        ", k = " + std::to_string(inst.k));
  check_k(inst);
  ExactState state(inst);
  state.dfs(0);
  if (state.best_utility < 0) throw_shortfall(0, inst.k);
  Schedule s(inst);
  for (const Assignment& a : state.best) s.insert(a, inst);
  return {s, state.best_utility};
}

bool is_known_solver(const std::string& name) {
  return name == "alg" || name == "inc" || name == "hor" || name == "hor-i" ||
         name == "top" || name == "rand";
}

SolveResult solve_by_name(const std::string& name, const ProblemInstance& inst,
                          std::uint64_t seed) {
  if (name == "alg") return solve_alg(inst);
  if (name == "inc") return solve_inc(inst);
  if (name == "hor") return solve_hor(inst);
  if (name == "hor-i") return solve_hor_i(inst);
  if (name == "top") return solve_top(inst);
  if (name == "rand") return solve_rand(inst, seed);
  throw InvalidParamsError("unknown solver '" + name + "'");
}

namespace detail {
SolveResult solve_inc_impl(const ProblemInstance& inst, bool fault_tiebreak) {
  return solve_inc_body(inst, fault_tiebreak);
}
}  // namespace detail

}  // namespace ses
