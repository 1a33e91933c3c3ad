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

#include <map>
#include <mutex>
#include <vector>

#include "blochsep/numerics.hpp"

namespace blochsep {

/// The d^2-1 generalized Gell-Mann generators of su(d), Hermitian and
/// traceless, normalized so that trace(g_a g_b) = 2 delta_ab.
///
/// Ordering is fixed for reproducible tensor indices: first the symmetric
/// pair family E_jk + E_kj for j < k (lexicographic), then the
/// antisymmetric family -i(E_jk - E_kj) for j < k, then the diagonal
/// family sqrt(2/(l(l+1))) (sum_{m<=l} E_mm - l E_{l+1,l+1}) for
/// l = 1..d-1.  For d = 2 this is (sigma_x, sigma_y, sigma_z).
struct GeneratorBasis {
  int dim = 0;
  std::vector<ComplexMatrix> generators;
};

/// Builds the basis for local dimension d >= 2 (std::domain_error below).
GeneratorBasis generators(int d);

/// Memoizing store of generator bases, safe for concurrent lookup.
class BasisCache {
 public:
  const GeneratorBasis& get(int d) const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<int, GeneratorBasis> cache_;
};

/// Process-wide cache used by default throughout the library.
const BasisCache& global_basis_cache();

}  // namespace blochsep
