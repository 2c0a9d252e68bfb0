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

#include "fig1.hpp"

ses::ProblemInstance fig1_instance(int k) {
  ses::ProblemInstance inst;
  inst.available_resources = 1;
  inst.k = k;

  // e1: Stage 1, e2: Stage 1, e3: Room A, e4: Stage 2; no resource demands.
  inst.events = {{0, 0, 0}, {1, 0, 0}, {2, 1, 0}, {3, 2, 0}};
  inst.intervals = {{0, {0}}, {1, {1}}};
  inst.competing = {{0, 0}, {1, 1}};

  inst.activity.resize(2, 2);
  inst.activity << 0.8, 0.5,   // u1 at t1, t2
                   0.5, 0.7;   // u2

  inst.event_interest.resize(2, 4);
  inst.event_interest << 0.9, 0.3, 0.0, 0.6,   // u1 over e1..e4
                         0.2, 0.6, 0.1, 0.6;   // u2

  inst.competing_interest.resize(2, 2);
  inst.competing_interest << 0.8, 0.3,   // u1 over c1, c2
                             0.4, 0.7;   // u2

  inst.event_names = {"e1", "e2", "e3", "e4"};
  inst.interval_names = {"t1", "t2"};
  inst.competing_names = {"c1", "c2"};
  inst.user_names = {"u1", "u2"};
  inst.location_names = {"stage1", "roomA", "stage2"};

  inst.validate();
  return inst;
}
