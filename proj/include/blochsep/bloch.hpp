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

#include <cstddef>
#include <map>
#include <vector>

#include "blochsep/states.hpp"
#include "blochsep/su_basis.hpp"

namespace blochsep {

/// Real correlation tensor of a density matrix on a party subset.
/// entries[i_1,...,i_k] = trace(rho * g_{i_1} x ... x g_{i_k} x I...),
/// flattened with ascending party order and the last index fastest; each
/// index i_p ranges over 0..d_p^2-2.
struct CorrelationTensor {
  std::vector<int> subset;  // 0-based party indices, ascending
  std::vector<int> dims;    // local dimensions of those parties
  std::vector<double> entries;
};

/// All correlation tensors of a state, keyed by party subset.
struct TensorSet {
  std::vector<int> dims;
  std::map<std::vector<int>, CorrelationTensor> tensors;

  const CorrelationTensor& at(const std::vector<int>& subset) const;
  bool complete() const;
};

/// Sum over all size-m subsets of the squared tensor norm.
struct NormAggregate {
  int body_count = 0;
  double value = 0.0;
};

/// Default cap on the total number of tensor entries all_tensors may
/// allocate (covers 8 qubits with room to spare).
inline constexpr std::size_t kDefaultTensorEntryCap = 10'000'000;

/// Extracts the correlation tensor on `subset` (ascending party indices).
/// Works on the reduced state, which is equivalent to tracing against
/// full-space operators.  Imaginary parts beyond 1e-10 signal an invalid
/// input and raise std::runtime_error.
CorrelationTensor correlation_tensor(
    const DensityMatrix& rho, const std::vector<int>& subset,
    const BasisCache& cache = global_basis_cache());

/// Tensors for every non-empty party subset.  Throws ResourceLimitError if
/// the total entry count would exceed `entry_cap`.
TensorSet all_tensors(const DensityMatrix& rho,
                      const BasisCache& cache = global_basis_cache(),
                      std::size_t entry_cap = kDefaultTensorEntryCap);

/// Sum of squared entries.
double tensor_norm_sq(const CorrelationTensor& t);

/// A_m = sum over all size-m subsets of the squared tensor norm.
NormAggregate aggregate_norms(const TensorSet& ts, int body_count);

/// Rebuilds the density matrix from a complete tensor set: the subset-S
/// term carries coefficient 1 / (2^|S| * prod of dims outside S), i.e.
/// each party contributes either a generator/2 factor or I/d.
DensityMatrix reconstruct(const TensorSet& ts,
                          const BasisCache& cache = global_basis_cache());

/// Reshapes a tensor into a matrix: rows run over `row_parties`, columns
/// over `col_parties` (each flattened in ascending party order, last index
/// fastest).  The two sets must partition t.subset exactly; empty
/// row_parties yields a single row.
RealMatrix matricize(const CorrelationTensor& t,
                     const std::vector<int>& row_parties,
                     const std::vector<int>& col_parties);

}  // namespace blochsep
