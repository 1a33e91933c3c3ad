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

#include "blochsep/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "blochsep/errors.hpp"

namespace blochsep {

namespace {

constexpr double kImagResidueTol = 1e-10;

void check_subset(const std::vector<int>& subset, int n) {
  if (subset.empty()) {
    throw std::invalid_argument("correlation tensor: empty party subset");
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n) {
      throw std::invalid_argument("correlation tensor: party out of range");
    }
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw std::invalid_argument(
          "correlation tensor: subset must be strictly ascending");
    }
  }
}

std::size_t tensor_size(const std::vector<int>& dims) {
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d) * d - 1;
  return total;
}

double traced_product(const ComplexMatrix& rho, const ComplexMatrix& op,
                      double* max_imag) {
  const Complex value = (rho.transpose().cwiseProduct(op)).sum();
  *max_imag = std::max(*max_imag, std::abs(value.imag()));
  return value.real();
}

}  // namespace

const CorrelationTensor& TensorSet::at(const std::vector<int>& subset) const {
  auto it = tensors.find(subset);
  if (it == tensors.end()) {
    std::ostringstream oss;
    oss << "tensor set: missing subset {";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      oss << (i ? "," : "") << (subset[i] + 1);
    }
    oss << "}";
    throw std::invalid_argument(oss.str());
  }
  return it->second;
}

bool TensorSet::complete() const {
  const std::size_t n = dims.size();
  return tensors.size() == (std::size_t{1} << n) - 1;
}

CorrelationTensor correlation_tensor(const DensityMatrix& rho,
                                     const std::vector<int>& subset,
                                     const BasisCache& cache) {
  check_subset(subset, rho.parties());

  CorrelationTensor t;
  t.subset = subset;
  for (int p : subset) t.dims.push_back(rho.dims[p]);
  t.entries.resize(tensor_size(t.dims));

  const ComplexMatrix reduced = partial_trace(rho.matrix, rho.dims, subset);
  const int k = static_cast<int>(subset.size());
  double max_imag = 0.0;
  std::size_t flat = 0;

  // Depth-first over the multi-index, reusing the operator prefix product.
  auto recurse = [&](auto&& self, int level, const ComplexMatrix& acc) -> void {
    const auto& basis = cache.get(t.dims[level]).generators;
    for (const auto& gen : basis) {
      const ComplexMatrix next = (level == 0) ? gen : kron(acc, gen);
      if (level == k - 1) {
        t.entries[flat++] = traced_product(reduced, next, &max_imag);
      } else {
        self(self, level + 1, next);
      }
    }
  };
  recurse(recurse, 0, ComplexMatrix());

  if (max_imag > kImagResidueTol) {
    std::ostringstream oss;
    oss << "correlation tensor: imaginary residue " << max_imag
        << " exceeds " << kImagResidueTol << "; input is not a valid state";
    throw std::runtime_error(oss.str());
  }
  return t;
}

TensorSet all_tensors(const DensityMatrix& rho, const BasisCache& cache,
                      std::size_t entry_cap) {
  const int n = rho.parties();
  std::size_t total_entries = 1;
  for (int d : rho.dims) total_entries *= static_cast<std::size_t>(d) * d;
  total_entries -= 1;  // sum over non-empty subsets of prod(d^2-1)
  if (total_entries > entry_cap) {
    std::ostringstream oss;
    oss << "all_tensors: " << total_entries
        << " tensor entries exceed the cap of " << entry_cap;
    throw ResourceLimitError(oss.str());
  }

  TensorSet ts;
  ts.dims = rho.dims;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) subset.push_back(p);
    }
    ts.tensors.emplace(subset, correlation_tensor(rho, subset, cache));
  }
  return ts;
}

double tensor_norm_sq(const CorrelationTensor& t) {
  double acc = 0.0;
  for (double e : t.entries) acc += e * e;
  return acc;
}

NormAggregate aggregate_norms(const TensorSet& ts, int body_count) {
  const int n = static_cast<int>(ts.dims.size());
  if (body_count < 1 || body_count > n) {
    throw std::domain_error("aggregate_norms: body count out of range");
  }
  NormAggregate agg;
  agg.body_count = body_count;
  for (const auto& [subset, tensor] : ts.tensors) {
    if (static_cast<int>(subset.size()) == body_count) {
      agg.value += tensor_norm_sq(tensor);
    }
  }
  return agg;
}

DensityMatrix reconstruct(const TensorSet& ts, const BasisCache& cache) {
  if (!ts.complete()) {
    throw std::invalid_argument(
        "reconstruct: tensor set does not cover every non-empty subset");
  }
  const int n = static_cast<int>(ts.dims.size());
  const long dim = total_dimension(ts.dims);
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);

  // Identity term.
  acc += ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);

  for (const auto& [subset, tensor] : ts.tensors) {
    double coeff = 1.0;
    {
      std::size_t k = 0;
      for (int p = 0; p < n; ++p) {
        if (k < subset.size() && subset[k] == p) {
          coeff /= 2.0;
          ++k;
        } else {
          coeff /= ts.dims[p];
        }
      }
    }
    std::size_t flat = 0;
    // Operators over the full space: generator on subset parties,
    // identity elsewhere.
    auto recurse = [&](auto&& self, int party, std::size_t sub_pos,
                       const ComplexMatrix& partial) -> void {
      if (party == n) {
        acc += (coeff * tensor.entries[flat++]) * partial;
        return;
      }
      const bool in_subset =
          sub_pos < subset.size() && subset[sub_pos] == party;
      if (in_subset) {
        for (const auto& gen : cache.get(ts.dims[party]).generators) {
          self(self, party + 1, sub_pos + 1,
               party == 0 ? gen : kron(partial, gen).eval());
        }
      } else {
        const ComplexMatrix eye =
            ComplexMatrix::Identity(ts.dims[party], ts.dims[party]);
        self(self, party + 1, sub_pos,
             party == 0 ? eye : kron(partial, eye).eval());
      }
    };
    recurse(recurse, 0, 0, ComplexMatrix());
  }

  DensityMatrix rho;
  rho.dims = ts.dims;
  rho.matrix = std::move(acc);
  return rho;
}

RealMatrix matricize(const CorrelationTensor& t,
                     const std::vector<int>& row_parties,
                     const std::vector<int>& col_parties) {
  std::vector<int> merged;
  merged.reserve(row_parties.size() + col_parties.size());
  merged.insert(merged.end(), row_parties.begin(), row_parties.end());
  merged.insert(merged.end(), col_parties.begin(), col_parties.end());
  std::sort(merged.begin(), merged.end());
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) {
    throw std::invalid_argument("matricize: row/column parties overlap");
  }
  if (merged != t.subset) {
    throw std::invalid_argument(
        "matricize: row and column parties must partition the tensor subset");
  }

  std::vector<int> rows = row_parties;
  std::vector<int> cols = col_parties;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());

  // Index range per tensor slot, and whether the slot maps to a row.
  const int k = static_cast<int>(t.subset.size());
  std::vector<int> ranges(k);
  std::vector<bool> is_row(k);
  for (int i = 0; i < k; ++i) {
    ranges[i] = t.dims[i] * t.dims[i] - 1;
    is_row[i] = std::binary_search(rows.begin(), rows.end(), t.subset[i]);
  }
  long n_rows = 1, n_cols = 1;
  for (int i = 0; i < k; ++i) {
    (is_row[i] ? n_rows : n_cols) *= ranges[i];
  }

  RealMatrix out(n_rows, n_cols);
  std::vector<int> multi(k, 0);
  for (std::size_t flat = 0; flat < t.entries.size(); ++flat) {
    long r = 0, c = 0;
    for (int i = 0; i < k; ++i) {
      if (is_row[i]) {
        r = r * ranges[i] + multi[i];
      } else {
        c = c * ranges[i] + multi[i];
      }
    }
    out(r, c) = t.entries[flat];
    for (int i = k - 1; i >= 0; --i) {
      if (++multi[i] < ranges[i]) break;
      multi[i] = 0;
    }
  }
  return out;
}

}  // namespace blochsep
