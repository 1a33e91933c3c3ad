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
#include <string>
#include <vector>

#include "blochsep/criteria.hpp"

namespace blochsep {

/// A published closed-form left-hand side for one criterion on one of the
/// bundled families, with the threshold quoted alongside it.  These forms
/// are kept verbatim as cross-checks; where they disagree with the numeric
/// pipeline, the reconciliation report records the discrepancy instead of
/// adopting either side silently.
struct ReferenceForm {
  std::string family;
  CriterionId criterion = CriterionId::B1;
  std::string partition;        // canonical 1-based partition string
  RoleLabeling labeling;        // the role assignment the form describes
  std::function<double(double)> lhs;  // closed form at sweep parameter x
  double bound = 0.0;
  double stated_threshold = 0.0;  // NaN when the form never crosses in (0,1)
};

const std::vector<ReferenceForm>& reference_forms();

/// Catalog lookup; nullptr when no form is recorded.
const ReferenceForm* find_reference_form(const std::string& family,
                                         CriterionId criterion,
                                         const std::string& partition);

/// Root of the form's margin on [0,1] via bisection, or NaN if the margin
/// does not change sign.
double reference_threshold(const ReferenceForm& form, double xtol = 1e-9);

/// One sampled comparison between the numeric pipeline and a closed form.
struct ReconciliationRow {
  double x = 0.0;
  double pipeline_lhs = 0.0;
  double reference_lhs = 0.0;

  double delta() const { return pipeline_lhs - reference_lhs; }
};

struct ReconciliationRecord {
  std::string family;
  CriterionId criterion = CriterionId::B1;
  std::string partition;
  std::string labeling;
  double bound = 0.0;
  std::vector<ReconciliationRow> rows;
  double max_abs_delta = 0.0;
  bool match = false;  // max |delta| < tolerance
};

/// Evaluates every catalogued form at `samples` equally spaced sweep values
/// and compares against the numeric pipeline.
std::vector<ReconciliationRecord> reconcile_reference_forms(
    int samples = 11, double match_tol = 1e-6);

/// Renders the reconciliation as a markdown report.
std::string reconciliation_markdown(
    const std::vector<ReconciliationRecord>& records);

}  // namespace blochsep
