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

#include "blochsep/su_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace blochsep {

GeneratorBasis generators(int d) {
  if (d < 2) {
    throw std::domain_error("generators: local dimension must be >= 2");
  }
  GeneratorBasis basis;
  basis.dim = d;
  basis.generators.reserve(static_cast<std::size_t>(d) * d - 1);

  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = Complex(1.0, 0.0);
      m(k, j) = Complex(1.0, 0.0);
      basis.generators.push_back(std::move(m));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = Complex(0.0, -1.0);
      m(k, j) = Complex(0.0, 1.0);
      basis.generators.push_back(std::move(m));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int mdx = 0; mdx < l; ++mdx) {
      m(mdx, mdx) = Complex(scale, 0.0);
    }
    m(l, l) = Complex(-l * scale, 0.0);
    basis.generators.push_back(std::move(m));
  }
  return basis;
}

const GeneratorBasis& BasisCache::get(int d) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(d);
  if (it == cache_.end()) {
    it = cache_.emplace(d, generators(d)).first;
  }
  return it->second;
}

const BasisCache& global_basis_cache() {
  static BasisCache cache;
  return cache;
}

}  // namespace blochsep
