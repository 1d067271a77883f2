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

#include "gconc/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace gconc::io {

namespace {

using nlohmann::json;

Matrix parse_complex_matrix(const json& obj, int rows, const char* what) {
  if (!obj.contains("re") || !obj.contains("im")) {
    throw std::invalid_argument(std::string(what) +
                                ": missing \"re\" or \"im\" array");
  }
  const json& re = obj.at("re");
  const json& im = obj.at("im");
  if (!re.is_array() || !im.is_array() ||
      static_cast<int>(re.size()) != rows ||
      static_cast<int>(im.size()) != rows) {
    throw std::invalid_argument(std::string(what) +
                                ": \"re\"/\"im\" must be " +
                                std::to_string(rows) + " rows");
  }
  Matrix m(rows, rows);
  for (int i = 0; i < rows; ++i) {
    const json& rrow = re.at(i);
    const json& irow = im.at(i);
    if (static_cast<int>(rrow.size()) != rows ||
        static_cast<int>(irow.size()) != rows) {
      throw std::invalid_argument(std::string(what) + ": row " +
                                  std::to_string(i) + " must have " +
                                  std::to_string(rows) + " entries");
    }
    for (int j = 0; j < rows; ++j) {
      m(i, j) = Cplx(rrow.at(j).get<double>(), irow.at(j).get<double>());
    }
  }
  return m;
}

int parse_dim(const json& obj, const char* what) {
  if (!obj.contains("d") || !obj.at("d").is_number_integer()) {
    throw std::invalid_argument(std::string(what) +
                                ": missing integer field \"d\"");
  }
  return obj.at("d").get<int>();
}

json matrix_to_json(const Matrix& m) {
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json rrow = json::array();
    json irow = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace

DensityMatrix load_state_json(const std::string& text, int dim_cap) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") +
                                e.what());
  }
  if (!root.is_object()) {
    throw std::invalid_argument("input must be a JSON object");
  }
  if (root.contains("pure")) {
    const json& p = root.at("pure");
    int d = parse_dim(p, "pure state");
    Dim dim(d, dim_cap);
    Matrix c = parse_complex_matrix(p, d, "pure state");
    return dm_from_pure(PureState(dim, std::move(c)));
  }
  int d = parse_dim(root, "density matrix");
  Dim dim(d, dim_cap);
  Matrix rho = parse_complex_matrix(root, d * d, "density matrix");
  return DensityMatrix::validated(dim, std::move(rho));
}

DensityMatrix load_state_file(const std::string& path, int dim_cap) {
  return load_state_json(read_file(path), dim_cap);
}

std::string dump_density_json(const DensityMatrix& rho) {
  json root = matrix_to_json(rho.entries());
  root["d"] = rho.d();
  return root.dump();
}

std::string dump_pure_json(const PureState& psi) {
  json inner = matrix_to_json(psi.amplitudes());
  inner["d"] = psi.d();
  json root{{"pure", std::move(inner)}};
  return root.dump();
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

namespace {

json witness_to_json(const witness::WitnessResult& w) {
  json obj{{"raw", w.raw},
           {"clamped", w.clamped},
           {"positive_term", w.positive_term},
           {"diagonal_term", w.diagonal_term},
           {"permutation_term", w.permutation_term}};
  if (w.phases_applied) {
    json phases = json::array();
    for (int i = 0; i < w.phases_applied->size(); ++i) {
      phases.push_back((*w.phases_applied)[i]);
    }
    obj["phases_applied"] = std::move(phases);
  } else {
    obj["phases_applied"] = nullptr;
  }
  return obj;
}

}  // namespace

std::string report_to_json(const BoundReport& report, bool include_timings) {
  json obj;
  obj["input_digest"] = report.input_digest;
  obj["d"] = report.d;
  obj["fidelity"] = report.fidelity;
  obj["fidelity_optimized"] =
      report.fidelity_optimized ? json(*report.fidelity_optimized) : json(nullptr);
  obj["witness"] = report.witness ? witness_to_json(*report.witness) : json(nullptr);
  obj["witness_bound"] =
      report.witness_bound ? json(*report.witness_bound) : json(nullptr);
  obj["axisym_bound"] = report.axisym_bound;
  obj["nf_used"] = report.nf_used;
  obj["nf_converged"] = report.nf_converged;
  obj["nf_vanished"] = report.nf_vanished;
  obj["trace_factor"] =
      report.trace_factor ? json(*report.trace_factor) : json(nullptr);
  obj["final_bound"] = report.final_bound;
  json dist = json::object();
  for (const auto& [k, v] : report.distance_bounds) {
    dist[std::to_string(k)] = v;
  }
  obj["distance_bounds"] = std::move(dist);
  obj["upper_bound"] =
      report.upper_bound ? json(*report.upper_bound) : json(nullptr);
  obj["seed"] = report.seed;
  if (include_timings) {
    json t = json::object();
    for (const auto& [k, v] : report.timings_ms) t[k] = v;
    obj["timings_ms"] = std::move(t);
  }
  return obj.dump(2) + "\n";
}

std::string report_to_text(const BoundReport& report) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "input digest    " << report.input_digest << "\n";
  out << "local dimension " << report.d << "\n";
  out << "fidelity        " << report.fidelity << "\n";
  if (report.fidelity_optimized) {
    out << "fidelity (LU)   " << *report.fidelity_optimized << "\n";
  }
  if (report.nf_used) {
    out << "normal form     trace factor " << *report.trace_factor
        << (report.nf_vanished ? ", vanished (G-concurrence = 0 exactly)"
                               : (report.nf_converged ? "" : ", not converged"))
        << "\n";
  }
  if (report.witness) {
    out << "witness raw     " << report.witness->raw << " (positive "
        << report.witness->positive_term << ", diagonal "
        << report.witness->diagonal_term << ", permutation "
        << report.witness->permutation_term << ")\n";
    out << "witness bound   " << *report.witness_bound << "\n";
  } else {
    out << "witness         skipped (d > witness cap)\n";
  }
  out << "projection bound " << report.axisym_bound << "\n";
  out << "final bound     " << report.final_bound << "\n";
  for (const auto& [k, v] : report.distance_bounds) {
    out << "distance (k=" << k << ")  " << v << "\n";
  }
  if (report.upper_bound) {
    out << "roof upper      " << *report.upper_bound << "\n";
  }
  out << "seed            " << report.seed << "\n";
  for (const auto& [name, ms] : report.timings_ms) {
    out << "time " << std::left << std::setw(12) << name << std::right << " "
        << ms << " ms\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path);
  }
  out << content;
  if (!out) {
    throw std::invalid_argument("write failed: " + path);
  }
}

}  // namespace gconc::io
