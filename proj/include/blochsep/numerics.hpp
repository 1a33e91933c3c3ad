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

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace blochsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Singular values in descending order, all non-negative.
struct SingularSpectrum {
  std::vector<double> values;

  double sum() const;
};

/// Kronecker product, shape (a.rows*b.rows) x (a.cols*b.cols).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

/// Total Hilbert-space dimension of a party-dimension vector.
long total_dimension(const std::vector<int>& dims);

/// Reduced matrix of `rho` on the parties listed in `keep` (0-based,
/// strictly ascending), tracing out the rest.  `rho` must be square with
/// side equal to the product of `dims`; party 0 is the slowest index.
/// An empty keep set yields the 1x1 matrix holding trace(rho).
/// Throws std::invalid_argument on any shape mismatch.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep);

enum class DensityDefect {
  None,
  ShapeMismatch,
  NonFinite,
  NonHermitian,
  TraceDeviation,
  Negativity,
};

std::string to_string(DensityDefect defect);

/// Outcome of a density-matrix validity check.  `magnitude` quantifies the
/// defect (max deviation, |trace-1|, or most negative eigenvalue).
struct ValidityReport {
  bool ok = false;
  DensityDefect defect = DensityDefect::None;
  double magnitude = 0.0;
  std::string message;
};

/// Checks Hermiticity, unit trace and positive semi-definiteness within
/// `tol`.  Never throws; all failures are reported structurally.
ValidityReport validate_density(const ComplexMatrix& m,
                                const std::vector<int>& dims,
                                double tol = 1e-10);

/// Singular values of a real matrix, descending.  Throws
/// std::invalid_argument on non-finite input and std::runtime_error if the
/// decomposition fails to converge.
SingularSpectrum singular_values(const RealMatrix& m);

/// Sum of the singular values.
double trace_norm(const RealMatrix& m);

}  // namespace blochsep
