// Copyright 2026 The blochsep authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blochsep/criteria.hpp"
#include "blochsep/states.hpp"

namespace blochsep {

/// On-disk description of a state: dims plus exactly one of a dense
/// complex matrix ([re, im] pairs, row-major), a pure amplitude vector, or
/// a named family with a pure-state weight.
struct StateDocument {
  std::vector<int> dims;
  std::optional<ComplexMatrix> matrix;
  std::optional<ComplexVector> pure;
  std::optional<std::pair<std::string, double>> family;

  static StateDocument from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  static StateDocument dense(const DensityMatrix& rho);

  /// Builds and validates the density matrix.  Pure amplitude vectors off
  /// normalization by less than 1e-6 are renormalized with a warning;
  /// larger deviations are errors.
  DensityMatrix realize(double validity_tol,
                        std::vector<std::string>* warnings) const;
};

/// FNV-1a fingerprint of dims plus matrix entries, for report provenance.
std::uint64_t state_digest(const DensityMatrix& rho);

/// Analysis results plus provenance, serializable as JSON or a text table.
struct ReportDocument {
  std::string digest;
  std::vector<int> dims;
  double tolerance = kDefaultViolationTol;
  std::vector<std::string> warnings;
  AnalysisReport analysis;

  static ReportDocument build(const DensityMatrix& rho,
                              const AnalysisReport& analysis,
                              std::vector<std::string> warnings);

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace blochsep
