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

#include <string>

#include "gconc/core.hpp"
#include "gconc/report.hpp"

namespace gconc::io {

// Input format, UTF-8 JSON:
//   {"d": 3, "re": [[...]], "im": [[...]]}            d^2 x d^2 density matrix
//   {"pure": {"d": 3, "re": [[...]], "im": [[...]]}}  d x d amplitude matrix
// Row-major composite index |jk> -> j*d + k. Validation applies the full set
// of state invariants and reports the first violated one.
DensityMatrix load_state_json(const std::string& text, int dim_cap = kDefaultDimCap);
DensityMatrix load_state_file(const std::string& path, int dim_cap = kDefaultDimCap);

std::string dump_density_json(const DensityMatrix& rho);
std::string dump_pure_json(const PureState& psi);

// FNV-1a 64 over the raw bytes, 16 hex digits.
std::string content_digest(const std::string& bytes);

// Stable JSON rendering of a report: keys sorted, numbers in shortest
// round-trip form, no whitespace variance; byte-identical for identical
// inputs. Timings are included only when requested since they vary per run.
std::string report_to_json(const BoundReport& report, bool include_timings);

std::string report_to_text(const BoundReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gconc::io
