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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blochsep/bloch.hpp"
#include "blochsep/states.hpp"

namespace blochsep {

/// Margin above the bound that counts as a violation.  Well above SVD
/// noise, far below the example margins.
inline constexpr double kDefaultViolationTol = 1e-8;

/// The six criterion templates.
///
///   B1    bipartition f|gh of three active parties (trace-norm bound)
///   F1    three active parties in pairwise distinct blocks
///   B2    two active parties in distinct blocks (four-partite systems)
///   B3    pair-vs-pair split fg|he (four-partite systems)
///   F2    full separability of four parties
///   KSEP  squared full-tensor-norm bound per block-size multiset
///         (equal local dimensions)
enum class CriterionId { B1, F1, B2, B3, F2, KSEP };

std::string to_string(CriterionId id);
std::optional<CriterionId> parse_criterion(const std::string& name);

/// A concrete role assignment for one criterion template.  `roles` lists
/// the party carrying each role in template order (B1/F1: f,g,h; B2: f,g;
/// B3/F2: f,g,h,e).  KSEP labelings carry the block-size multiset instead.
struct RoleLabeling {
  CriterionId id = CriterionId::B1;
  std::vector<int> roles;
  std::vector<int> block_sizes;  // KSEP only, descending

  std::string to_string() const;  // 1-based, e.g. "f=1,g=2,h=3"
  friend bool operator==(const RoleLabeling&, const RoleLabeling&) = default;
  friend auto operator<=>(const RoleLabeling&, const RoleLabeling&) = default;
};

/// Block matrix assembled from correlation tensors per one template.
struct SMatrix {
  RoleLabeling labeling;
  RealMatrix matrix;
};

/// One criterion instance evaluated against one partition hypothesis.
struct CriterionReport {
  PartitionSpec partition;
  CriterionId id = CriterionId::B1;
  RoleLabeling labeling;
  double lhs = 0.0;    // trace norm, or squared tensor norm for KSEP
  double bound = 0.0;
  double margin = 0.0;  // lhs - bound
  bool violated = false;
};

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

/// Squared-norm bound 2(d-1)/d on single-party correlation tensors.
double one_body_bound(int d);

/// Pure-state bound 4(d2^2-1)/d2^2 on two-body tensors, d1 <= d2.
double pure_two_body_bound(int d1, int d2);

/// Pure-state bound on three-body tensors, d1 <= d2 <= d3.
double pure_three_body_bound(int d1, int d2, int d3);

/// Pure-state bound on four-body tensors, d1 <= d2 <= d3 <= d4.
double pure_four_body_bound(int d1, int d2, int d3, int d4);

/// Pure-state bound on the full n-body tensor at equal local dimension d;
/// n = 2 delegates to pure_two_body_bound.
double pure_n_body_bound(int n, int d);

/// Per-block factor of the k-separability bound: the squared-norm bound on
/// a j-party correlation tensor at equal local dimension d.
double w_factor(int j, int d);

/// Product of w-factors over a block-size multiset (equal local dims).
double k_sep_bound(const std::vector<int>& block_sizes, int d);

// ---------------------------------------------------------------------------
// Criterion machinery
// ---------------------------------------------------------------------------

/// Every role assignment of `id` that yields a valid necessary condition
/// for separability under `partition`, after symmetry deduplication.
/// Includes assignments whose hypothesis is implied by coarsening the
/// partition.
std::vector<RoleLabeling> admissible_labelings(CriterionId id,
                                               const PartitionSpec& partition,
                                               const std::vector<int>& dims);

/// Assembles the template block matrix from a complete tensor set.
/// KSEP has no matrix and raises std::invalid_argument.
SMatrix build_s_matrix(const TensorSet& ts, const RoleLabeling& labeling);

/// Closed-form bound matching the labeling's template and role dimensions.
double bound_for(const RoleLabeling& labeling, const std::vector<int>& dims);

/// Evaluates every admissible criterion instance against the partition.
/// Reports are sorted by (criterion, labeling).  Throws
/// UnsupportedConfigError when no criterion covers the configuration.
std::vector<CriterionReport> evaluate(const DensityMatrix& rho,
                                      const PartitionSpec& partition,
                                      double tol = kDefaultViolationTol);

/// Verdict for one partition inside a full analysis.
struct PartitionVerdict {
  PartitionSpec partition;
  bool certified = false;  // some criterion falsified separability
  double max_margin = 0.0;
  CriterionId strongest_id = CriterionId::B1;
  RoleLabeling strongest_labeling;
  std::vector<CriterionReport> reports;
};

struct AnalysisReport {
  std::vector<int> dims;
  double tolerance = kDefaultViolationTol;
  std::vector<PartitionVerdict> partitions;
  std::vector<std::string> skipped;  // criterion families not applicable
};

/// Evaluates all partitions: every proper set partition for 3 or 4
/// parties, and one representative per block-size multiset otherwise
/// (where only KSEP applies).
AnalysisReport analyze(const DensityMatrix& rho,
                       double tol = kDefaultViolationTol);

// ---------------------------------------------------------------------------
// Threshold scanning
// ---------------------------------------------------------------------------

struct ScanPoint {
  double x = 0.0;
  double lhs = 0.0;
  double bound = 0.0;

  double margin() const { return lhs - bound; }
};

enum class ScanStatus { RootFound, NeverViolated, AlwaysViolated };

struct ScanOutcome {
  ScanStatus status = ScanStatus::NeverViolated;
  double threshold = 0.0;  // meaningful only for RootFound
  std::vector<ScanPoint> samples;
};

/// Samples (lhs, bound) over [lo, hi] and bisects the margin's sign change
/// to within `xtol`.  A bracket without a sign change yields the
/// never/always-violated status instead of an error.
ScanOutcome threshold_scan(
    const std::function<std::pair<double, double>(double)>& lhs_bound_at,
    double lo, double hi, int steps, double xtol = 1e-6);

/// Strongest margin of one criterion on one partition: evaluates every
/// admissible labeling and returns the (lhs, bound) of the largest margin.
std::pair<double, double> criterion_value(const DensityMatrix& rho,
                                          CriterionId id,
                                          const PartitionSpec& partition);

/// threshold_scan driven by a named family's sweep parameter.
ScanOutcome scan_family(const std::string& family, CriterionId id,
                        const PartitionSpec& partition, double lo, double hi,
                        int steps, double xtol = 1e-6);

}  // namespace blochsep
