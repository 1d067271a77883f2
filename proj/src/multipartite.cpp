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

#include "gconc/multipartite.hpp"

#include <algorithm>
#include <cmath>

#include "gconc/random.hpp"
#include "gconc/slopt.hpp"

namespace gconc::multi {

namespace {
constexpr int kMinQubits = 4;
constexpr int kMaxQubits = 12;

int bit_of(std::size_t index, int qubit, int n) {
  // Qubit 0 is the most significant bit.
  return static_cast<int>((index >> (n - 1 - qubit)) & 1u);
}
}  // namespace

Partition::Partition(int n, std::vector<int> a)
    : n_qubits(n), side_a(std::move(a)) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("Partition: qubit count must be even");
  }
  if (static_cast<int>(side_a.size()) != n / 2) {
    throw std::invalid_argument("Partition: side A must hold n/2 qubits");
  }
  if (!std::is_sorted(side_a.begin(), side_a.end())) {
    throw std::invalid_argument("Partition: side A indices must be sorted");
  }
  for (std::size_t i = 0; i < side_a.size(); ++i) {
    if (side_a[i] < 0 || side_a[i] >= n) {
      throw std::invalid_argument("Partition: qubit index out of range");
    }
    if (i > 0 && side_a[i] == side_a[i - 1]) {
      throw std::invalid_argument("Partition: duplicate qubit index");
    }
  }
}

std::vector<int> Partition::side_b() const {
  std::vector<int> b;
  std::size_t ai = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if (ai < side_a.size() && side_a[ai] == q) {
      ++ai;
    } else {
      b.push_back(q);
    }
  }
  return b;
}

std::string Partition::label() const {
  auto letters = [](const std::vector<int>& qs) {
    std::string s;
    for (int q : qs) s += static_cast<char>('A' + q);
    return s;
  };
  return "(" + letters(side_a) + ")(" + letters(side_b()) + ")";
}

CVector cluster_state(int n) {
  if (n % 2 != 0 || n < kMinQubits || n > kMaxQubits) {
    throw std::invalid_argument(
        "cluster_state: qubit count must be even and within [4, 12]");
  }
  const std::size_t size = std::size_t{1} << n;
  CVector v(size);
  double amp = std::pow(2.0, -n / 2.0);
  for (std::size_t z = 0; z < size; ++z) v[z] = amp;
  for (int i = 0; i + 1 < n; ++i) {
    for (std::size_t z = 0; z < size; ++z) {
      if (bit_of(z, i, n) && bit_of(z, i + 1, n)) v[z] = -v[z];
    }
  }
  // Hadamard on each odd site; the result is the sparse nonnegative form.
  for (int q = 1; q < n; q += 2) {
    const std::size_t mask = std::size_t{1} << (n - 1 - q);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t z = 0; z < size; ++z) {
      if (z & mask) continue;
      Cplx a = v[z];
      Cplx b = v[z | mask];
      v[z] = (a + b) * inv_sqrt2;
      v[z | mask] = (a - b) * inv_sqrt2;
    }
  }
  return v;
}

PureState bipartition_reshape(const CVector& state, const Partition& part) {
  const int n = part.n_qubits;
  if (state.size() != static_cast<Eigen::Index>(std::size_t{1} << n)) {
    throw std::invalid_argument("bipartition_reshape: state size mismatch");
  }
  const int half = n / 2;
  const int d = 1 << half;
  std::vector<int> b = part.side_b();
  Matrix c = Matrix::Zero(d, d);
  for (std::size_t z = 0; z < (std::size_t{1} << n); ++z) {
    int row = 0, col = 0;
    for (int i = 0; i < half; ++i) {
      row = (row << 1) | bit_of(z, part.side_a[i], n);
      col = (col << 1) | bit_of(z, b[i], n);
    }
    c(row, col) = state[z];
  }
  return PureState(Dim(d, d), std::move(c));
}

ThresholdResult noise_threshold(const PureState& psi, bool with_lu_opt,
                                int restarts, std::uint64_t seed) {
  const int d = psi.d();
  DensityMatrix rho = dm_from_pure(psi);
  double f_opt = with_lu_opt
                     ? slopt::maximize_fef(rho, restarts, seed).f_max
                     : fidelity_phi(rho);
  double border = static_cast<double>(d - 1) / d;
  double w_star = 0.0;
  if (f_opt > border) {
    w_star = (f_opt - border) / (f_opt - 1.0 / (static_cast<double>(d) * d));
  }
  return ThresholdResult{psi.dim(), f_opt, w_star, std::nullopt};
}

std::vector<ClusterRow> cluster_report(int n, int restarts,
                                       std::uint64_t seed) {
  if (n % 2 != 0 || n < kMinQubits || n > kMaxQubits) {
    throw std::invalid_argument(
        "cluster_report: qubit count must be even and within [4, 12]");
  }
  CVector state = cluster_state(n);
  const int half = n / 2;
  const int d = 1 << half;

  double gme = (n == 4) ? 8.0 / 13.0
                        : 1.0 - (n / 3.0) * std::pow(2.0, -n / 3.0);

  // Enumerate equal bipartitions whose side A contains qubit 0 (each
  // unordered split once), in sorted order.
  std::vector<std::vector<int>> sides;
  std::vector<int> current{0};
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == half) {
      sides.push_back(current);
      return;
    }
    for (int q = next; q < n; ++q) {
      current.push_back(q);
      self(self, q + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);

  std::vector<ClusterRow> rows;
  rows.reserve(sides.size());
  for (std::size_t i = 0; i < sides.size(); ++i) {
    Partition part(n, sides[i]);
    PureState reshaped = bipartition_reshape(state, part);
    SchmidtSpectrum sp = schmidt(reshaped);
    int rank = 0;
    for (int j = 0; j < sp.size(); ++j) {
      if (sp[j] > 1e-9) ++rank;
    }
    ThresholdResult th =
        noise_threshold(reshaped, true, restarts, rng::derive_seed(seed, i));
    ClusterRow row;
    row.label = part.label();
    row.side_a = part.side_a;
    row.schmidt_rank = rank;
    row.f_opt = th.f_opt;
    row.applicable = (rank == d) && th.w_star > 0;
    row.w_star = row.applicable ? th.w_star : 0.0;
    row.gme_reference = gme;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gconc::multi
