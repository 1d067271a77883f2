// Copyright 2026 The gconc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gconc/witness.hpp"

namespace gconc {

// Aggregated result of the bound pipeline for one input state. All bounds are
// certified lower bounds on the G-concurrence of the original state; when a
// normal form was used they carry the trace factor already.
struct BoundReport {
  std::string input_digest;
  int d = 0;
  double fidelity = 0;                         // of the input state
  std::optional<double> fidelity_optimized;    // after local-unitary search
  std::optional<witness::WitnessResult> witness;  // absent for d > 8
  std::optional<double> witness_bound;         // trace-scaled witness raw
  double axisym_bound = 0;                     // trace-scaled projection bound
  bool nf_used = false;
  bool nf_converged = true;
  bool nf_vanished = false;                    // vanished normal form: C_G = 0 exactly
  std::optional<double> trace_factor;
  double final_bound = 0;
  std::map<int, double> distance_bounds;       // k -> HS-distance bound
  std::optional<double> upper_bound;           // convex-roof estimate
  std::uint64_t seed = 0;
  std::map<std::string, double> timings_ms;    // not serialized by default
};

}  // namespace gconc
