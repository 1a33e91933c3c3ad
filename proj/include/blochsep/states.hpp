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

#include <cstdint>
#include <string>
#include <vector>

#include "blochsep/numerics.hpp"

namespace blochsep {

/// A multipartite density matrix together with its party dimensions.
/// Party 0 is the slowest tensor index.
struct DensityMatrix {
  std::vector<int> dims;
  ComplexMatrix matrix;

  int parties() const { return static_cast<int>(dims.size()); }
  long total_dim() const { return total_dimension(dims); }
  double purity() const;
};

/// A partition of the parties 0..n-1 into disjoint, non-empty blocks.
struct PartitionSpec {
  std::vector<std::vector<int>> blocks;

  /// Throws std::invalid_argument unless blocks are non-empty, disjoint
  /// and cover exactly 0..n_parties-1.
  void validate(int n_parties) const;

  /// Sorts parties within blocks and blocks by leading party.
  PartitionSpec canonical() const;

  /// Block sizes as a descending-sorted multiset.
  std::vector<int> block_sizes() const;

  int parties() const;

  /// Renders 1-based, e.g. "1|23" (or "1|2,3" once a party index needs
  /// two digits).
  std::string to_string() const;

  /// Parses "1|23" or "1|2,3" (1-based parties).
  static PartitionSpec parse(const std::string& text, int n_parties);

  /// All proper partitions (at least two blocks) of n parties.
  static std::vector<PartitionSpec> enumerate(int n_parties);

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

/// Projector onto (|0...0> + |1...1>)/sqrt(2) on n qubits, n >= 2.
DensityMatrix ghz(int n);

/// Projector onto (|0001>+|0010>+|0100>+|1000>)/2.
DensityMatrix w4();

/// p * psi + (1-p) * I/D for a pure state psi and p in [0,1].
/// Throws std::invalid_argument if psi is not pure within 1e-10 and
/// std::domain_error if p is outside [0,1].
DensityMatrix isotropic_mix(const DensityMatrix& psi, double pure_weight);

/// Haar-random pure-state projector; identical seeds give identical states.
DensityMatrix random_pure(const std::vector<int>& dims, std::uint64_t seed);

/// Convex mixture of `terms` products of independent Haar-random pure
/// states, one factor per partition block; mixture weights are uniform on
/// the simplex.  By construction separable under `partition` and any
/// coarsening of it.
DensityMatrix random_separable(const std::vector<int>& dims,
                               const PartitionSpec& partition, int terms,
                               std::uint64_t seed);

/// Named state families reachable from the command line.
const std::vector<std::string>& family_names();
bool is_family_name(const std::string& name);
int family_party_count(const std::string& name);

/// Family state at pure-state weight p: p * psi + (1-p) * I/D.
DensityMatrix family_state(const std::string& name, double pure_weight);

/// Family state at the family's conventional sweep parameter x.  The ghz3
/// family sweeps the maximally mixed weight (pure weight 1-x); ghz4, ghz5
/// and w4 sweep the pure weight directly.
DensityMatrix family_sweep_state(const std::string& name, double x);

}  // namespace blochsep
