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
//
// Brute-force oracles for the test suite.  Everything here recomputes
// quantities from first principles (full-space operators, direct index
// contractions) so it stays independent of the library code paths it
// checks.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "blochsep/bloch.hpp"
#include "blochsep/numerics.hpp"
#include "blochsep/states.hpp"
#include "blochsep/su_basis.hpp"

namespace oracle {

using blochsep::Complex;
using blochsep::ComplexMatrix;

// Independent Kronecker product (accumulated index arithmetic, not block
// assignment).
inline ComplexMatrix okron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long r = 0; r < out.rows(); ++r) {
    for (long c = 0; c < out.cols(); ++c) {
      out(r, c) = a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
    }
  }
  return out;
}

// Hand-written Pauli matrices (kept separate from the generator basis).
inline const std::vector<ComplexMatrix>& paulis() {
  static const std::vector<ComplexMatrix> p = [] {
    std::vector<ComplexMatrix> out(3, ComplexMatrix::Zero(2, 2));
    out[0](0, 1) = 1.0;
    out[0](1, 0) = 1.0;
    out[1](0, 1) = Complex(0.0, -1.0);
    out[1](1, 0) = Complex(0.0, 1.0);
    out[2](0, 0) = 1.0;
    out[2](1, 1) = -1.0;
    return out;
  }();
  return p;
}

inline double expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
  Complex acc(0.0, 0.0);
  for (long r = 0; r < rho.rows(); ++r) {
    for (long c = 0; c < rho.cols(); ++c) {
      acc += rho(r, c) * op(c, r);
    }
  }
  return acc.real();
}

// Correlation-tensor entry via the full-space operator: generator
// `indices[k]` on party subset[k], identity elsewhere.
inline double tensor_entry(const blochsep::DensityMatrix& rho,
                           const std::vector<int>& subset,
                           const std::vector<int>& indices) {
  ComplexMatrix op = ComplexMatrix::Identity(1, 1);
  std::size_t pos = 0;
  for (int party = 0; party < rho.parties(); ++party) {
    const int d = rho.dims[party];
    if (pos < subset.size() && subset[pos] == party) {
      const auto& basis = blochsep::generators(d).generators;
      op = okron(op, basis[indices[pos]]);
      ++pos;
    } else {
      op = okron(op, ComplexMatrix::Identity(d, d));
    }
  }
  return expectation(rho.matrix, op);
}

// Full correlation tensor on `subset`, flattened ascending / last fastest.
inline std::vector<double> tensor(const blochsep::DensityMatrix& rho,
                                  const std::vector<int>& subset) {
  std::vector<int> ranges;
  for (int p : subset) ranges.push_back(rho.dims[p] * rho.dims[p] - 1);
  std::size_t total = 1;
  for (int r : ranges) total *= r;
  std::vector<double> out(total);
  std::vector<int> multi(subset.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    out[flat] = tensor_entry(rho, subset, multi);
    for (int i = static_cast<int>(multi.size()) - 1; i >= 0; --i) {
      if (++multi[i] < ranges[i]) break;
      multi[i] = 0;
    }
  }
  return out;
}

// Direct index-contraction partial trace.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho,
                                   const std::vector<int>& dims,
                                   const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  long keep_dim = 1;
  for (int p : keep) keep_dim *= dims[p];
  ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
  const long full = rho.rows();
  for (long r = 0; r < full; ++r) {
    for (long c = 0; c < full; ++c) {
      bool diagonal_on_traced = true;
      for (int p = 0; p < n && diagonal_on_traced; ++p) {
        const bool kept =
            std::find(keep.begin(), keep.end(), p) != keep.end();
        if (!kept && (r / stride[p]) % dims[p] != (c / stride[p]) % dims[p]) {
          diagonal_on_traced = false;
        }
      }
      if (!diagonal_on_traced) continue;
      long rr = 0, cc = 0;
      for (int p : keep) {
        rr = rr * dims[p] + (r / stride[p]) % dims[p];
        cc = cc * dims[p] + (c / stride[p]) % dims[p];
      }
      out(rr, cc) += rho(r, c);
    }
  }
  return out;
}

// Generic mixed state: marginal of a Haar-random pure state on the doubled
// space.
inline blochsep::DensityMatrix random_mixed(const std::vector<int>& dims,
                                            std::uint64_t seed) {
  std::vector<int> doubled = dims;
  doubled.push_back(static_cast<int>(blochsep::total_dimension(dims)));
  const auto psi = blochsep::random_pure(doubled, seed);
  std::vector<int> keep(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) keep[i] = static_cast<int>(i);
  blochsep::DensityMatrix rho;
  rho.dims = dims;
  rho.matrix = blochsep::partial_trace(psi.matrix, doubled, keep);
  return rho;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
