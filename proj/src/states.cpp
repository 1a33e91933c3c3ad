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

#include "blochsep/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blochsep {

namespace {

DensityMatrix projector(const std::vector<int>& dims,
                        const ComplexVector& amplitudes) {
  DensityMatrix rho;
  rho.dims = dims;
  rho.matrix = amplitudes * amplitudes.adjoint();
  return rho;
}

ComplexVector haar_vector(long dim, std::mt19937_64& engine) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (long i = 0; i < dim; ++i) {
    const double re = gauss(engine);
    const double im = gauss(engine);
    v(i) = Complex(re, im);
  }
  v /= v.norm();
  return v;
}

}  // namespace

double DensityMatrix::purity() const {
  return (matrix * matrix).trace().real();
}

void PartitionSpec::validate(int n_parties) const {
  if (blocks.empty()) {
    throw std::invalid_argument("partition: no blocks");
  }
  std::set<int> seen;
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("partition: empty block");
    }
    for (int p : block) {
      if (p < 0 || p >= n_parties) {
        std::ostringstream oss;
        oss << "partition: party " << (p + 1) << " out of range for "
            << n_parties << " parties";
        throw std::invalid_argument(oss.str());
      }
      if (!seen.insert(p).second) {
        std::ostringstream oss;
        oss << "partition: party " << (p + 1) << " appears twice";
        throw std::invalid_argument(oss.str());
      }
    }
  }
  if (static_cast<int>(seen.size()) != n_parties) {
    throw std::invalid_argument("partition: blocks do not cover all parties");
  }
}

PartitionSpec PartitionSpec::canonical() const {
  PartitionSpec out = *this;
  for (auto& block : out.blocks) {
    std::sort(block.begin(), block.end());
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<int> PartitionSpec::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& block : blocks) {
    sizes.push_back(static_cast<int>(block.size()));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

int PartitionSpec::parties() const {
  int n = 0;
  for (const auto& block : blocks) n += static_cast<int>(block.size());
  return n;
}

std::string PartitionSpec::to_string() const {
  const PartitionSpec c = canonical();
  bool wide = false;
  for (const auto& block : c.blocks) {
    for (int p : block) {
      if (p >= 9) wide = true;
    }
  }
  std::ostringstream oss;
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    if (b > 0) oss << '|';
    for (std::size_t i = 0; i < c.blocks[b].size(); ++i) {
      if (wide && i > 0) oss << ',';
      oss << (c.blocks[b][i] + 1);
    }
  }
  return oss.str();
}

PartitionSpec PartitionSpec::parse(const std::string& text, int n_parties) {
  PartitionSpec spec;
  std::vector<int> current;
  auto flush_block = [&]() {
    if (!current.empty()) {
      spec.blocks.push_back(current);
      current.clear();
    }
  };
  std::string number;
  const bool comma_form = text.find(',') != std::string::npos;
  auto flush_number = [&]() {
    if (!number.empty()) {
      current.push_back(std::stoi(number) - 1);
      number.clear();
    }
  };
  for (char ch : text) {
    if (ch == '|') {
      flush_number();
      flush_block();
    } else if (ch == ',' || ch == ' ') {
      flush_number();
    } else if (ch >= '0' && ch <= '9') {
      number.push_back(ch);
      if (!comma_form) flush_number();  // digit-per-party form
    } else {
      std::ostringstream oss;
      oss << "partition: unexpected character '" << ch << "' in \"" << text
          << "\"";
      throw std::invalid_argument(oss.str());
    }
  }
  flush_number();
  flush_block();
  spec.validate(n_parties);
  return spec.canonical();
}

std::vector<PartitionSpec> PartitionSpec::enumerate(int n_parties) {
  std::vector<PartitionSpec> out;
  PartitionSpec working;
  // Assign each party in order to an existing block or a fresh one.
  auto recurse = [&](auto&& self, int party) -> void {
    if (party == n_parties) {
      if (working.blocks.size() >= 2) {
        out.push_back(working.canonical());
      }
      return;
    }
    for (std::size_t b = 0; b < working.blocks.size(); ++b) {
      working.blocks[b].push_back(party);
      self(self, party + 1);
      working.blocks[b].pop_back();
    }
    working.blocks.push_back({party});
    self(self, party + 1);
    working.blocks.pop_back();
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.blocks.size() != b.blocks.size()) {
      return a.blocks.size() < b.blocks.size();
    }
    return a.to_string() < b.to_string();
  });
  return out;
}

DensityMatrix ghz(int n) {
  if (n < 2) {
    throw std::domain_error("ghz: need at least 2 parties");
  }
  const std::vector<int> dims(n, 2);
  const long dim = total_dimension(dims);
  ComplexVector v = ComplexVector::Zero(dim);
  const double amp = 1.0 / std::sqrt(2.0);
  v(0) = Complex(amp, 0.0);
  v(dim - 1) = Complex(amp, 0.0);
  return projector(dims, v);
}

DensityMatrix w4() {
  const std::vector<int> dims(4, 2);
  ComplexVector v = ComplexVector::Zero(16);
  for (long idx : {1L, 2L, 4L, 8L}) {
    v(idx) = Complex(0.5, 0.0);
  }
  return projector(dims, v);
}

DensityMatrix isotropic_mix(const DensityMatrix& psi, double pure_weight) {
  if (std::abs(psi.purity() - 1.0) > 1e-10) {
    throw std::invalid_argument("isotropic_mix: input state is not pure");
  }
  if (!(pure_weight >= 0.0 && pure_weight <= 1.0)) {
    throw std::domain_error("isotropic_mix: weight must lie in [0,1]");
  }
  const long dim = psi.total_dim();
  DensityMatrix rho;
  rho.dims = psi.dims;
  rho.matrix = pure_weight * psi.matrix +
               ((1.0 - pure_weight) / static_cast<double>(dim)) *
                   ComplexMatrix::Identity(dim, dim);
  return rho;
}

DensityMatrix random_pure(const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return projector(dims, haar_vector(total_dimension(dims), engine));
}

DensityMatrix random_separable(const std::vector<int>& dims,
                               const PartitionSpec& partition, int terms,
                               std::uint64_t seed) {
  const int n = static_cast<int>(dims.size());
  partition.validate(n);
  if (terms < 1) {
    throw std::invalid_argument("random_separable: need at least one term");
  }
  const PartitionSpec part = partition.canonical();
  std::mt19937_64 engine(seed);

  std::vector<double> weights(terms);
  std::exponential_distribution<double> expo(1.0);
  double total = 0.0;
  for (double& w : weights) {
    w = expo(engine);
    total += w;
  }
  for (double& w : weights) w /= total;

  const long dim = total_dimension(dims);
  std::vector<long> strides(n, 1);
  for (int i = n - 2; i >= 0; --i) strides[i] = strides[i + 1] * dims[i + 1];

  DensityMatrix rho;
  rho.dims = dims;
  rho.matrix = ComplexMatrix::Zero(dim, dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<ComplexVector> block_vectors;
    block_vectors.reserve(part.blocks.size());
    for (const auto& block : part.blocks) {
      std::vector<int> bdims;
      for (int p : block) bdims.push_back(dims[p]);
      block_vectors.push_back(haar_vector(total_dimension(bdims), engine));
    }
    ComplexVector v(dim);
    for (long g = 0; g < dim; ++g) {
      Complex amp(1.0, 0.0);
      for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        long sub = 0;
        for (int p : part.blocks[b]) {
          sub = sub * dims[p] + (g / strides[p]) % dims[p];
        }
        amp *= block_vectors[b](sub);
      }
      v(g) = amp;
    }
    rho.matrix += weights[t] * (v * v.adjoint()).eval();
  }
  return rho;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"ghz3", "ghz4", "ghz5", "w4"};
  return names;
}

bool is_family_name(const std::string& name) {
  const auto& names = family_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

int family_party_count(const std::string& name) {
  if (name == "ghz3") return 3;
  if (name == "ghz4") return 4;
  if (name == "ghz5") return 5;
  if (name == "w4") return 4;
  throw std::invalid_argument("unknown family: " + name);
}

DensityMatrix family_state(const std::string& name, double pure_weight) {
  if (name == "ghz3") return isotropic_mix(ghz(3), pure_weight);
  if (name == "ghz4") return isotropic_mix(ghz(4), pure_weight);
  if (name == "ghz5") return isotropic_mix(ghz(5), pure_weight);
  if (name == "w4") return isotropic_mix(w4(), pure_weight);
  throw std::invalid_argument("unknown family: " + name);
}

DensityMatrix family_sweep_state(const std::string& name, double x) {
  if (name == "ghz3") return family_state(name, 1.0 - x);
  return family_state(name, x);
}

}  // namespace blochsep
