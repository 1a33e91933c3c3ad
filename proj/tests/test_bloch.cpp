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

#include <catch2/catch_amalgamated.hpp>

#include "blochsep/bloch.hpp"
#include "blochsep/errors.hpp"
#include "blochsep/states.hpp"
#include "support.hpp"

using namespace blochsep;

namespace {

double entry_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("single-party tensor of GHZ3 vanishes") {
  const auto t = correlation_tensor(ghz(3), {0});
  REQUIRE(t.entries.size() == 3);
  for (double e : t.entries) REQUIRE(std::abs(e) < 1e-14);
}

TEST_CASE("two-party GHZ3 tensor has only the zz entry") {
  const auto t = correlation_tensor(ghz(3), {1, 2});
  REQUIRE(t.entries.size() == 9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double expected = (i == 2 && j == 2) ? 1.0 : 0.0;
      REQUIRE(std::abs(t.entries[i * 3 + j] - expected) < 1e-13);
    }
  }
  REQUIRE(entry_diff(t.entries, oracle::tensor(ghz(3), {1, 2})) < 1e-12);
}

TEST_CASE("maximally mixed states have vanishing tensors") {
  DensityMatrix mixed;
  mixed.dims = {2, 2, 2};
  mixed.matrix = ComplexMatrix::Identity(8, 8) / 8.0;
  for (const std::vector<int>& subset :
       {std::vector<int>{0}, {1, 2}, {0, 1, 2}}) {
    for (double e : correlation_tensor(mixed, subset).entries) {
      REQUIRE(std::abs(e) < 1e-14);
    }
  }
}

TEST_CASE("extraction agrees with the full-space oracle on mixed dims") {
  const auto rho = oracle::random_mixed({2, 3, 2}, 77);
  for (const std::vector<int>& subset :
       {std::vector<int>{0}, {1}, {0, 1}, {1, 2}, {0, 1, 2}}) {
    const auto t = correlation_tensor(rho, subset);
    REQUIRE(entry_diff(t.entries, oracle::tensor(rho, subset)) < 1e-11);
  }
}

TEST_CASE("all_tensors of GHZ3 is nonzero exactly on even subsets") {
  const TensorSet ts = all_tensors(ghz(3));
  REQUIRE(ts.complete());
  REQUIRE(ts.tensors.size() == 7);
  for (const auto& [subset, tensor] : ts.tensors) {
    const bool expect_nonzero = subset.size() >= 2;
    REQUIRE((tensor_norm_sq(tensor) > 0.5) == expect_nonzero);
  }
}

TEST_CASE("product states factorize their two-party tensors") {
  const auto a = oracle::random_mixed({2}, 1);
  const auto b = oracle::random_mixed({2}, 2);
  const auto c = oracle::random_mixed({3}, 3);
  DensityMatrix rho;
  rho.dims = {2, 2, 3};
  rho.matrix = kron(kron(a.matrix, b.matrix), c.matrix);

  const TensorSet ts = all_tensors(rho);
  const RealMatrix t01 = matricize(ts.at({0, 1}), {0}, {1});
  const RealMatrix t0 = matricize(ts.at({0}), {0}, {});
  const RealMatrix t1 = matricize(ts.at({1}), {1}, {});
  REQUIRE((t01 - t0 * t1.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("squared norms of GHZ tensors match brute force") {
  const TensorSet t3 = all_tensors(ghz(3));
  std::vector<int> full3 = {0, 1, 2};
  double brute3 = 0.0;
  for (double e : oracle::tensor(ghz(3), full3)) brute3 += e * e;
  REQUIRE(brute3 == Catch::Approx(4.0).margin(1e-12));
  REQUIRE(tensor_norm_sq(t3.at(full3)) == Catch::Approx(brute3).margin(1e-11));

  std::vector<int> full4 = {0, 1, 2, 3};
  double brute4 = 0.0;
  for (double e : oracle::tensor(ghz(4), full4)) brute4 += e * e;
  REQUIRE(brute4 == Catch::Approx(9.0).margin(1e-12));
  REQUIRE(tensor_norm_sq(correlation_tensor(ghz(4), full4)) ==
          Catch::Approx(brute4).margin(1e-11));

  CorrelationTensor zero;
  zero.subset = {0};
  zero.dims = {2};
  zero.entries = {0.0, 0.0, 0.0};
  REQUIRE(tensor_norm_sq(zero) == 0.0);
}

TEST_CASE("aggregate norms of GHZ3") {
  const TensorSet ts = all_tensors(ghz(3));
  REQUIRE(aggregate_norms(ts, 1).value == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(aggregate_norms(ts, 2).value == Catch::Approx(3.0).margin(1e-11));
  REQUIRE(aggregate_norms(ts, 3).value == Catch::Approx(4.0).margin(1e-11));
  REQUIRE_THROWS_AS(aggregate_norms(ts, 0), std::domain_error);
  REQUIRE_THROWS_AS(aggregate_norms(ts, 4), std::domain_error);
}

TEST_CASE("purity identity holds for random pure states") {
  // trace(rho^2) = 1/prod(d) + sum_S ||T^(S)||^2 / (2^|S| prod_{out} d)
  for (const std::vector<int>& dims :
       {std::vector<int>{2, 2}, {2, 3}, {2, 2, 2}, {2, 2, 3}}) {
    const auto rho = random_pure(dims, 1234);
    const TensorSet ts = all_tensors(rho);
    double purity = 1.0 / total_dimension(dims);
    for (const auto& [subset, tensor] : ts.tensors) {
      double coeff = 1.0;
      std::size_t pos = 0;
      for (std::size_t p = 0; p < dims.size(); ++p) {
        if (pos < subset.size() &&
            subset[pos] == static_cast<int>(p)) {
          coeff /= 2.0;
          ++pos;
        } else {
          coeff /= dims[p];
        }
      }
      purity += coeff * tensor_norm_sq(tensor);
    }
    REQUIRE(std::abs(purity - 1.0) < 1e-10);
  }
}

TEST_CASE("reconstruct inverts extraction") {
  SECTION("all-zero tensors give the maximally mixed state") {
    DensityMatrix mixed;
    mixed.dims = {2, 2, 2};
    mixed.matrix = ComplexMatrix::Identity(8, 8) / 8.0;
    const DensityMatrix rebuilt = reconstruct(all_tensors(mixed));
    REQUIRE(oracle::max_abs_diff(rebuilt.matrix, mixed.matrix) < 1e-12);
  }
  SECTION("random mixed state on 2x2x3") {
    const auto rho = oracle::random_mixed({2, 2, 3}, 99);
    const DensityMatrix rebuilt = reconstruct(all_tensors(rho));
    REQUIRE(oracle::max_abs_diff(rebuilt.matrix, rho.matrix) < 1e-10);
  }
  SECTION("GHZ3 projector") {
    const DensityMatrix rebuilt = reconstruct(all_tensors(ghz(3)));
    REQUIRE(oracle::max_abs_diff(rebuilt.matrix, ghz(3).matrix) < 1e-10);
  }
  SECTION("incomplete sets are rejected") {
    TensorSet ts = all_tensors(ghz(3));
    ts.tensors.erase(std::vector<int>{0, 1});
    REQUIRE_THROWS_AS(reconstruct(ts), std::invalid_argument);
  }
}

TEST_CASE("matricize layouts") {
  SECTION("product state two-party tensor is rank one") {
    const DensityMatrix rho = random_separable(
        {2, 2}, PartitionSpec{{{0}, {1}}}, 1, 5);
    const auto t = correlation_tensor(rho, {0, 1});
    const RealMatrix m = matricize(t, {0}, {1});
    const auto spectrum = singular_values(m);
    for (std::size_t i = 1; i < spectrum.values.size(); ++i) {
      REQUIRE(spectrum.values[i] < 1e-10);
    }
  }
  SECTION("GHZ3 full tensor split 1 vs 23 has an empty z row") {
    const auto t = correlation_tensor(ghz(3), {0, 1, 2});
    const RealMatrix m = matricize(t, {0}, {1, 2});
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 9);
    REQUIRE(m.row(2).cwiseAbs().maxCoeff() < 1e-13);
    // xxx = 1 and xyy = -1 sit in the x row
    REQUIRE(m(0, 0) == Catch::Approx(1.0));
    REQUIRE(m(0, 4) == Catch::Approx(-1.0));
  }
  SECTION("Frobenius norm is split-invariant") {
    const auto rho = oracle::random_mixed({2, 2, 3}, 6);
    const auto t = correlation_tensor(rho, {0, 1, 2});
    const double norm_sq = tensor_norm_sq(t);
    for (const auto& [rows, cols] :
         std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{0}, {1, 2}}, {{1}, {0, 2}}, {{0, 2}, {1}}, {{}, {0, 1, 2}}}) {
      REQUIRE(matricize(t, rows, cols).squaredNorm() ==
              Catch::Approx(norm_sq).margin(1e-11));
    }
  }
  SECTION("row and column sets must partition the subset") {
    const auto t = correlation_tensor(ghz(3), {0, 1, 2});
    REQUIRE_THROWS_AS(matricize(t, {0}, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(matricize(t, {0, 1}, {1, 2}), std::invalid_argument);
  }
}

TEST_CASE("extraction commutes with reduction to the subset") {
  const auto rho = oracle::random_mixed({2, 3, 2}, 17);
  const std::vector<int> subset = {0, 2};
  const auto from_full = correlation_tensor(rho, subset);

  DensityMatrix reduced;
  reduced.dims = {2, 2};
  reduced.matrix = partial_trace(rho.matrix, rho.dims, subset);
  const auto from_reduced = correlation_tensor(reduced, {0, 1});
  REQUIRE(entry_diff(from_full.entries, from_reduced.entries) < 1e-12);
}

TEST_CASE("one-body tensors respect the 2(d-1)/d bound") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const auto rho = oracle::random_mixed({2, 3, 4}, 1000 + seed);
    for (int party = 0; party < 3; ++party) {
      const double norm_sq =
          tensor_norm_sq(correlation_tensor(rho, {party}));
      const double d = rho.dims[party];
      REQUIRE(norm_sq <= 2.0 * (d - 1.0) / d + 1e-9);
      ++checked;
    }
  }
  REQUIRE(checked == 750);
}

TEST_CASE("invalid inputs are rejected") {
  REQUIRE_THROWS_AS(correlation_tensor(ghz(3), {}), std::invalid_argument);
  REQUIRE_THROWS_AS(correlation_tensor(ghz(3), {1, 0}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(correlation_tensor(ghz(3), {3}), std::invalid_argument);

  // non-Hermitian input shows up as imaginary residue
  DensityMatrix bad;
  bad.dims = {2, 2};
  bad.matrix = ComplexMatrix::Identity(4, 4) / 4.0;
  bad.matrix(0, 3) = Complex(0.2, 0.0);
  REQUIRE_THROWS_AS(correlation_tensor(bad, {0, 1}), std::runtime_error);
}

TEST_CASE("the tensor entry cap is enforced with a resource error") {
  try {
    all_tensors(ghz(4), global_basis_cache(), 10);
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    REQUIRE(std::string(e.what()).find("cap") != std::string::npos);
  }
}

TEST_CASE("round trip holds across dimension mixes") {
  const std::vector<std::vector<int>> dim_sets = {
      {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {2, 2, 2, 2}};
  for (std::size_t seti = 0; seti < dim_sets.size(); ++seti) {
    for (std::uint64_t k = 0; k < 5; ++k) {
      const auto rho = oracle::random_mixed(dim_sets[seti], 400 + 10 * seti + k);
      const DensityMatrix rebuilt = reconstruct(all_tensors(rho));
      REQUIRE(oracle::max_abs_diff(rebuilt.matrix, rho.matrix) < 1e-9);
    }
  }
}
