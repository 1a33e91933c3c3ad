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

#include "blochsep/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blochsep {

namespace {

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

std::vector<long> party_strides(const std::vector<int>& dims) {
  std::vector<long> strides(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * dims[i + 1];
  }
  return strides;
}

}  // namespace

double SingularSpectrum::sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

long total_dimension(const std::vector<int>& dims) {
  long d = 1;
  for (int x : dims) d *= x;
  return d;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  const long side = total_dimension(dims);
  if (rho.rows() != side || rho.cols() != side) {
    std::ostringstream oss;
    oss << "partial_trace: matrix is " << rho.rows() << "x" << rho.cols()
        << " but dims imply " << side << "x" << side;
    throw std::invalid_argument(oss.str());
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n) {
      throw std::invalid_argument("partial_trace: party index out of range");
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw std::invalid_argument(
          "partial_trace: keep set must be strictly ascending");
    }
  }

  std::vector<int> traced;
  {
    std::size_t k = 0;
    for (int p = 0; p < n; ++p) {
      if (k < keep.size() && keep[k] == p) {
        ++k;
      } else {
        traced.push_back(p);
      }
    }
  }

  const auto strides = party_strides(dims);
  long keep_dim = 1;
  for (int p : keep) keep_dim *= dims[p];
  long traced_dim = 1;
  for (int p : traced) traced_dim *= dims[p];

  // Global index of a (keep multi-index, traced multi-index) pair.
  auto global_index = [&](long keep_flat, long traced_flat) {
    long g = 0;
    for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
      const int p = keep[i];
      g += (keep_flat % dims[p]) * strides[p];
      keep_flat /= dims[p];
    }
    for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
      const int p = traced[i];
      g += (traced_flat % dims[p]) * strides[p];
      traced_flat /= dims[p];
    }
    return g;
  };

  ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
  for (long r = 0; r < keep_dim; ++r) {
    for (long c = 0; c < keep_dim; ++c) {
      Complex acc(0.0, 0.0);
      for (long t = 0; t < traced_dim; ++t) {
        acc += rho(global_index(r, t), global_index(c, t));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

std::string to_string(DensityDefect defect) {
  switch (defect) {
    case DensityDefect::None: return "none";
    case DensityDefect::ShapeMismatch: return "shape mismatch";
    case DensityDefect::NonFinite: return "non-finite entries";
    case DensityDefect::NonHermitian: return "non-Hermitian";
    case DensityDefect::TraceDeviation: return "trace deviation";
    case DensityDefect::Negativity: return "negativity";
  }
  return "unknown";
}

ValidityReport validate_density(const ComplexMatrix& m,
                                const std::vector<int>& dims,
                                double tol) {
  ValidityReport report;
  const long side = total_dimension(dims);
  if (m.rows() != m.cols() || m.rows() != side) {
    report.defect = DensityDefect::ShapeMismatch;
    std::ostringstream oss;
    oss << "matrix is " << m.rows() << "x" << m.cols() << ", dims imply "
        << side << "x" << side;
    report.message = oss.str();
    return report;
  }
  if (!all_finite(m)) {
    report.defect = DensityDefect::NonFinite;
    report.message = "matrix contains NaN or Inf entries";
    return report;
  }
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol) {
    report.defect = DensityDefect::NonHermitian;
    report.magnitude = herm_dev;
    std::ostringstream oss;
    oss << "max |m - m^dagger| = " << herm_dev;
    report.message = oss.str();
    return report;
  }
  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol) {
    report.defect = DensityDefect::TraceDeviation;
    report.magnitude = trace_dev;
    std::ostringstream oss;
    oss << "|trace - 1| = " << trace_dev;
    report.message = oss.str();
    return report;
  }
  const ComplexMatrix herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    report.defect = DensityDefect::NonFinite;
    report.message = "eigenvalue computation failed";
    return report;
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    report.defect = DensityDefect::Negativity;
    report.magnitude = min_eig;
    std::ostringstream oss;
    oss << "minimum eigenvalue = " << min_eig;
    report.message = oss.str();
    return report;
  }
  report.ok = true;
  report.message = "ok";
  return report;
}

SingularSpectrum singular_values(const RealMatrix& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument(
        "singular_values: matrix contains NaN or Inf entries");
  }
  Eigen::JacobiSVD<RealMatrix> svd(m);
  if (svd.info() != Eigen::Success) {
    std::ostringstream oss;
    oss << "singular_values: SVD failed to converge on " << m.rows() << "x"
        << m.cols() << " matrix";
    throw std::runtime_error(oss.str());
  }
  SingularSpectrum spectrum;
  const auto& sv = svd.singularValues();
  spectrum.values.assign(sv.data(), sv.data() + sv.size());
  return spectrum;
}

double trace_norm(const RealMatrix& m) {
  return singular_values(m).sum();
}

}  // namespace blochsep
