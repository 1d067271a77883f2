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

// Command-line front-end.
//
// Exit codes:
//   0  success; for `bound`, a strictly positive certified bound
//   2  input error (malformed file, violated invariant, bad arguments)
//   3  `bound` ran but certified nothing (final bound = 0)
//   1  unexpected internal failure

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gconc/axisym.hpp"
#include "gconc/io.hpp"
#include "gconc/multipartite.hpp"
#include "gconc/oracles.hpp"
#include "gconc/pure.hpp"
#include "gconc/random.hpp"
#include "gconc/slopt.hpp"
#include "gconc/witness.hpp"

namespace {

using namespace gconc;

int cmd_bound(const std::string& input, bool use_lu, bool use_nf,
              bool use_phases, int restarts, std::uint64_t seed,
              int upper_trials, bool as_json, bool with_timings, int max_dim) {
  std::string bytes = io::read_file(input);
  DensityMatrix rho = io::load_state_json(bytes, max_dim);

  slopt::BoundConfig config;
  config.use_nf = use_nf;
  config.use_lu = use_lu;
  config.use_phases = use_phases;
  config.restarts = restarts;
  config.seed = seed;

  BoundReport report = slopt::best_bound(rho, config);
  report.input_digest = io::content_digest(bytes);
  if (upper_trials > 0) {
    report.upper_bound =
        oracles::convex_roof_upper(rho, upper_trials, rng::derive_seed(seed, 3))
            .value;
  }

  if (as_json) {
    std::cout << io::report_to_json(report, with_timings);
  } else {
    if (!with_timings) report.timings_ms.clear();
    std::cout << io::report_to_text(report);
  }
  return report.final_bound > 0 ? 0 : 3;
}

int cmd_curve(int d_value, int samples, const std::string& out_path) {
  Dim d(d_value);
  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "F,cg_axisym,c2_axisym,cg_of_F,x,y\n";
  const double onset = static_cast<double>(d_value - 1) / d_value;
  for (int i = 0; i < samples; ++i) {
    double F = static_cast<double>(i) / (samples - 1);
    axisym::AxisymState s = axisym::axisym_from_fidelity(d, F);
    axisym::HsCoords xy = axisym::coords_xy(s);
    csv << F << ',' << axisym::cg_axisym(F, d) << ','
        << axisym::c2_axisym(F, d) << ',';
    if (F >= onset) {
      csv << pure::cg_of_F(d, F).cg;
    }
    csv << ',' << xy.x << ',' << xy.y << "\n";
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    io::write_file(out_path, csv.str());
  }
  return 0;
}

int cmd_cluster(int qubits, int restarts, std::uint64_t seed, bool as_csv) {
  auto rows = multi::cluster_report(qubits, restarts, seed);
  std::ostringstream out;
  out << std::setprecision(12);
  if (as_csv) {
    out << "partition,schmidt_rank,f_opt,w_star,applicable,gme_reference\n";
    for (const auto& r : rows) {
      out << r.label << ',' << r.schmidt_rank << ',' << r.f_opt << ','
          << r.w_star << ',' << (r.applicable ? "yes" : "no") << ','
          << *r.gme_reference << "\n";
    }
  } else {
    out << std::left << std::setw(18) << "partition" << std::setw(6) << "rank"
        << std::setw(16) << "f_opt" << std::setw(16) << "w_star"
        << std::setw(8) << "usable" << "gme_ref\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(18) << r.label << std::setw(6)
          << r.schmidt_rank << std::setw(16) << r.f_opt << std::setw(16)
          << (r.applicable ? r.w_star : 0.0) << std::setw(8)
          << (r.applicable ? "yes" : "n/a") << *r.gme_reference << "\n";
    }
  }
  std::cout << out.str();
  return 0;
}

int cmd_distance(const std::string& input, int k, int max_dim) {
  DensityMatrix rho = io::load_state_file(input, max_dim);
  if (k < 1 || k > rho.d() - 1) {
    std::cerr << "distance: k must lie in [1, d-1]\n";
    return 2;
  }
  double value = axisym::distance_lower_bound(rho, k);
  std::cout << std::setprecision(17) << value << "\n";
  return 0;
}

// Oracle-driven verification suites; each prints one line per check group.
int verify_sandwich(std::uint64_t seed) {
  const int d = 3;
  const int states = 200;
  int failures = 0;
  double worst_gap = 1e9;
  for (int i = 0; i < states; ++i) {
    auto gen = rng::engine(rng::derive_seed(seed, 1000 + i));
    Matrix x = rng::gaussian_matrix(d * d, d * d, gen);
    Matrix w = x * x.adjoint();
    w /= w.trace().real();
    DensityMatrix rho = DensityMatrix::trusted(Dim(d), std::move(w));

    slopt::BoundConfig config;
    config.use_nf = true;
    config.use_lu = true;
    config.use_phases = true;
    config.restarts = 4;
    config.seed = rng::derive_seed(seed, 2000 + i);
    BoundReport rep = slopt::best_bound(rho, config);
    double upper =
        oracles::convex_roof_upper(rho, 3, rng::derive_seed(seed, 3000 + i))
            .value;
    double gap = upper - rep.final_bound;
    worst_gap = std::min(worst_gap, gap);
    if (rep.final_bound > upper + 1e-6) ++failures;
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << " sandwich: " << states
            << " random d=3 states, min(upper - lower) = " << worst_gap
            << "\n";
  return failures == 0 ? 0 : 1;
}

int verify_curve(std::uint64_t seed) {
  int failures = 0;
  double worst = 0;
  for (int d = 3; d <= 5; ++d) {
    const double lo = static_cast<double>(d - 1) / d;
    for (int i = 0; i < 50; ++i) {
      double F = lo + (1.0 - lo) * i / 49.0;
      double closed = pure::cg_of_F(Dim(d), F).cg;
      double numeric =
          oracles::constrained_cg_min(Dim(d), F, 12, rng::derive_seed(seed, i));
      worst = std::max(worst, std::abs(closed - numeric));
      if (std::abs(closed - numeric) > 1e-4) ++failures;
    }
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL")
            << " curve: closed form vs constrained minimizer, max |diff| = "
            << worst << "\n";
  return failures == 0 ? 0 : 1;
}

int verify_appendix_distance(std::uint64_t seed) {
  int failures = 0;
  const int pairs = 100;
  for (int d = 3; d <= 4; ++d) {
    for (int i = 0; i < pairs; ++i) {
      auto gen = rng::engine(rng::derive_seed(seed, d * 10000 + i));
      Matrix x = rng::gaussian_matrix(d * d, d * d, gen);
      Matrix w = x * x.adjoint();
      w /= w.trace().real();
      DensityMatrix rho = DensityMatrix::trusted(Dim(d), std::move(w));

      int k = 1 + static_cast<int>(i % (d - 1));
      // sigma: mixture of pure states of Schmidt rank <= k
      Matrix sig = Matrix::Zero(d * d, d * d);
      int terms = 3;
      for (int t = 0; t < terms; ++t) {
        Matrix ua = rng::haar_unitary(d, gen);
        Matrix ub = rng::haar_unitary(d, gen);
        CVector coef(k);
        double norm2 = 0;
        for (int j = 0; j < k; ++j) {
          coef[j] = Cplx(std::abs(std::uniform_real_distribution<double>(
                             0.1, 1.0)(gen)),
                         0);
          norm2 += std::norm(coef[j]);
        }
        coef /= std::sqrt(norm2);
        Matrix c = Matrix::Zero(d, d);
        for (int j = 0; j < k; ++j) {
          c += coef[j] * ua.col(j) * ub.col(j).transpose();
        }
        PureState psi(Dim(d), c / c.norm());
        sig += dm_from_pure(psi).entries() / terms;
      }
      DensityMatrix sigma = DensityMatrix::trusted(Dim(d), std::move(sig));
      double lower = axisym::distance_lower_bound(rho, k);
      double actual = hs_distance(rho, sigma);
      if (lower > actual + 1e-9) ++failures;
    }
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL")
            << " appendixC: distance bound vs bounded-rank states ("
            << 2 * pairs << " pairs)\n";
  return failures == 0 ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  if (suite == "sandwich") return verify_sandwich(seed);
  if (suite == "curve") return verify_curve(seed);
  if (suite == "appendixC") return verify_appendix_distance(seed);
  std::cerr << "unknown suite: " << suite << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified lower bounds on the G-concurrence of bipartite states"};
  app.require_subcommand(1);

  // bound
  std::string bound_input;
  bool use_lu = false, use_nf = false, use_phases = false;
  int restarts = 20;
  std::uint64_t seed = 0;
  int upper_trials = 0;
  bool as_json = false, as_text = false, with_timings = false;
  int max_dim = kDefaultDimCap;
  auto* bound = app.add_subcommand("bound", "Run the bound pipeline on a state file");
  bound->add_option("input", bound_input, "JSON state file")->required();
  bound->add_flag("--lu-opt", use_lu, "optimize local unitaries before projecting");
  bound->add_flag("--nf", use_nf, "use the filtering normal form");
  bound->add_flag("--phases", use_phases, "optimize local phases in the witness");
  bound->add_option("--restarts", restarts, "multistart count")->check(CLI::PositiveNumber);
  bound->add_option("--seed", seed, "RNG seed");
  bound->add_option("--upper-trials", upper_trials, "convex-roof upper bound trials (0 = off)");
  bound->add_flag("--json", as_json, "JSON report");
  bound->add_flag("--text", as_text, "text report (default)");
  bound->add_flag("--timings", with_timings, "include per-stage timings");
  bound->add_option("--max-dim", max_dim, "local dimension cap")->check(CLI::PositiveNumber);

  // curve
  int curve_d = 4, curve_samples = 1000;
  std::string curve_out;
  auto* curve = app.add_subcommand("curve", "Emit the exact family curves as CSV");
  curve->add_option("--d", curve_d, "local dimension")->check(CLI::Range(2, 64));
  curve->add_option("--samples", curve_samples, "row count")->check(CLI::Range(2, 10000000));
  curve->add_option("--out", curve_out, "output file (default: stdout)");

  // cluster
  int cluster_n = 4;
  int cluster_restarts = 8;
  std::uint64_t cluster_seed = 0;
  bool cluster_csv = false;
  auto* cluster = app.add_subcommand("cluster", "White-noise thresholds of linear cluster states");
  cluster->add_option("--qubits", cluster_n, "even qubit count in [4, 12]")->required();
  cluster->add_option("--restarts", cluster_restarts, "multistart count")->check(CLI::PositiveNumber);
  cluster->add_option("--seed", cluster_seed, "RNG seed");
  cluster->add_flag("--csv", cluster_csv, "CSV output");

  // distance
  std::string dist_input;
  int dist_k = 1;
  int dist_max_dim = kDefaultDimCap;
  auto* distance = app.add_subcommand("distance", "Distance lower bound to bounded Schmidt number");
  distance->add_option("input", dist_input, "JSON state file")->required();
  distance->add_option("--schmidt-number", dist_k, "Schmidt number k")->required();
  distance->add_option("--max-dim", dist_max_dim, "local dimension cap")->check(CLI::PositiveNumber);

  // verify
  std::string verify_suite;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "Run an oracle property suite");
  verify->add_option("--suite", verify_suite, "sandwich | curve | appendixC")->required();
  verify->add_option("--seed", verify_seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound->parsed()) {
      if (as_json && as_text) {
        std::cerr << "choose one of --json / --text\n";
        return 2;
      }
      return cmd_bound(bound_input, use_lu, use_nf, use_phases, restarts, seed,
                       upper_trials, as_json, with_timings, max_dim);
    }
    if (curve->parsed()) return cmd_curve(curve_d, curve_samples, curve_out);
    if (cluster->parsed()) {
      return cmd_cluster(cluster_n, cluster_restarts, cluster_seed, cluster_csv);
    }
    if (distance->parsed()) {
      return cmd_distance(dist_input, dist_k, dist_max_dim);
    }
    if (verify->parsed()) return cmd_verify(verify_suite, verify_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
