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
#include <optional>
#include <string>
#include <vector>

#include "gconc/core.hpp"

namespace gconc::multi {

// Split of n qubits into two halves; side_a is sorted and the complement
// forms side B.
struct Partition {
  int n_qubits;
  std::vector<int> side_a;

  Partition(int n, std::vector<int> a);
  std::vector<int> side_b() const;
  std::string label() const;  // e.g. "(AC)(BD)"
};

// Linear cluster state on n qubits (n even, 4..12): |+>^n, controlled-Z on
// each neighboring pair, then Hadamards on the odd sites. The final local
// gauge leaves all amplitudes real nonnegative: 2^{n/2} basis states
// y with y_i = y_{i-1} xor y_{i+1} on odd i, each with amplitude 2^{-n/4}.
// Qubit 0 is the most significant bit of the amplitude index.
CVector cluster_state(int n);

// Reshapes an n-qubit pure state into a bipartite amplitude matrix: rows are
// indexed by the side-A qubits (listed order, first = most significant) and
// columns by side B ascending.
PureState bipartition_reshape(const CVector& state, const Partition& part);

// Largest white-noise admixture under which the projection bound still
// certifies full Schmidt rank. The bound is affine in the fidelity and the
// fidelity affine in w, so the threshold is closed-form:
//   w* = (f_opt - (d-1)/d) / (f_opt - 1/d^2)   when f_opt > (d-1)/d, else 0.
struct ThresholdResult {
  Dim d;
  double f_opt = 0;
  double w_star = 0;
  std::optional<double> gme_reference;  // displayed comparison value only
};

ThresholdResult noise_threshold(const PureState& psi, bool with_lu_opt,
                                int restarts, std::uint64_t seed);

struct ClusterRow {
  std::string label;
  std::vector<int> side_a;
  int schmidt_rank = 0;
  double f_opt = 0;
  double w_star = 0;
  bool applicable = false;  // false when the bipartition is rank deficient
  std::optional<double> gme_reference;
};

// One row per equal bipartition class (side containing qubit 0), sorted by
// side_a. The GME comparison column is quoted from the literature, not
// computed here: 8/13 for n = 4, 1 - (n/3) 2^{-n/3} otherwise.
std::vector<ClusterRow> cluster_report(int n, int restarts,
                                       std::uint64_t seed);

}  // namespace gconc::multi
