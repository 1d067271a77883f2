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

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace gconc::rng {

// splitmix64 step; used to derive independent per-job seeds so that
// multistart kernels are reproducible regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::mt19937_64 engine(std::uint64_t seed);

// Haar-distributed unitary: QR of a complex Gaussian with the R-diagonal
// phase fix.
Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& gen);

// Complex Gaussian matrix, entries N(0,1) + i N(0,1).
Eigen::MatrixXcd gaussian_matrix(int rows, int cols, std::mt19937_64& gen);

}  // namespace gconc::rng
