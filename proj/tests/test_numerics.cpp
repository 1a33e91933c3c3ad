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
#include <random>

#include "blochsep/numerics.hpp"
#include "blochsep/states.hpp"
#include "support.hpp"

using namespace blochsep;

namespace {

ComplexMatrix random_complex(long rows, long cols, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      m(r, c) = Complex(gauss(engine), gauss(engine));
    }
  }
  return m;
}

RealMatrix random_real(long rows, long cols, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      m(r, c) = gauss(engine);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("kron of sigma_z with sigma_z is diag(1,-1,-1,1)") {
  const auto& sz = oracle::paulis()[2];
  const ComplexMatrix out = kron(sz, sz);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = 1.0;
  REQUIRE(oracle::max_abs_diff(out, expected) == 0.0);
}

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix eye2 = ComplexMatrix::Identity(2, 2);
  REQUIRE(oracle::max_abs_diff(kron(eye2, eye2),
                               ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("trace of a Kronecker product factorizes") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ComplexMatrix a = random_complex(2, 2, seed);
    const ComplexMatrix b = random_complex(2, 2, seed + 1000);
    const Complex lhs = kron(a, b).trace();
    const Complex rhs = a.trace() * b.trace();
    REQUIRE(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("kron agrees with the index-arithmetic oracle") {
  const ComplexMatrix a = random_complex(2, 3, 7);
  const ComplexMatrix b = random_complex(3, 2, 8);
  REQUIRE(oracle::max_abs_diff(kron(a, b), oracle::okron(a, b)) < 1e-14);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
  const DensityMatrix bell = ghz(2);
  const ComplexMatrix reduced = partial_trace(bell.matrix, bell.dims, {0});
  REQUIRE(oracle::max_abs_diff(reduced, ComplexMatrix::Identity(2, 2) / 2.0) <
          1e-14);
}

TEST_CASE("partial trace recovers a product factor") {
  const auto a = oracle::random_mixed({2}, 11);
  const auto b = oracle::random_mixed({3}, 12);
  const ComplexMatrix joint = kron(a.matrix, b.matrix);
  REQUIRE(oracle::max_abs_diff(partial_trace(joint, {2, 3}, {0}), a.matrix) <
          1e-13);
  REQUIRE(oracle::max_abs_diff(partial_trace(joint, {2, 3}, {1}), b.matrix) <
          1e-13);
}

TEST_CASE("two-party marginal of a three-qubit GHZ state") {
  const DensityMatrix g = ghz(3);
  const ComplexMatrix reduced = partial_trace(g.matrix, g.dims, {0, 1});
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  REQUIRE(oracle::max_abs_diff(reduced, expected) < 1e-14);
  // cross-check against the direct index-contraction oracle
  REQUIRE(oracle::max_abs_diff(
              reduced, oracle::partial_trace(g.matrix, g.dims, {0, 1})) <
          1e-14);
}

TEST_CASE("partial trace preserves the trace and matches the oracle") {
  const auto rho = oracle::random_mixed({2, 3, 2}, 21);
  for (const std::vector<int>& keep :
       {std::vector<int>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
    const ComplexMatrix reduced = partial_trace(rho.matrix, rho.dims, keep);
    REQUIRE(std::abs(reduced.trace() - rho.matrix.trace()) < 1e-12);
    REQUIRE(oracle::max_abs_diff(
                reduced, oracle::partial_trace(rho.matrix, rho.dims, keep)) <
            1e-13);
  }
}

TEST_CASE("tracing everything returns the scalar trace") {
  const auto rho = oracle::random_mixed({2, 2, 3}, 31);
  const ComplexMatrix scalar = partial_trace(rho.matrix, rho.dims, {});
  REQUIRE(scalar.rows() == 1);
  REQUIRE(std::abs(scalar(0, 0) - rho.matrix.trace()) < 1e-12);
}

TEST_CASE("nested partial traces commute") {
  const auto rho = oracle::random_mixed({2, 2, 3}, 41);
  const ComplexMatrix two_step = partial_trace(
      partial_trace(rho.matrix, rho.dims, {0, 1}), {2, 2}, {0});
  const ComplexMatrix direct = partial_trace(rho.matrix, rho.dims, {0});
  REQUIRE(oracle::max_abs_diff(two_step, direct) < 1e-12);
}

TEST_CASE("partial trace rejects bad shapes and indices") {
  const ComplexMatrix eye = ComplexMatrix::Identity(4, 4);
  REQUIRE_THROWS_AS(partial_trace(eye, {2, 3}, {0}), std::invalid_argument);
  REQUIRE_THROWS_AS(partial_trace(eye, {2, 2}, {2}), std::invalid_argument);
  REQUIRE_THROWS_AS(partial_trace(eye, {2, 2}, {1, 0}), std::invalid_argument);
}

TEST_CASE("validate_density accepts proper states") {
  REQUIRE(validate_density(ComplexMatrix::Identity(4, 4) / 4.0, {2, 2}).ok);
  REQUIRE(validate_density(ghz(3).matrix, {2, 2, 2}).ok);
}

TEST_CASE("validate_density reports structured defects") {
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  const auto negative = validate_density(neg, {2});
  REQUIRE_FALSE(negative.ok);
  REQUIRE(negative.defect == DensityDefect::Negativity);

  ComplexMatrix skew = ComplexMatrix::Identity(2, 2) / 2.0;
  skew(0, 1) = Complex(0.1, 0.0);
  const auto non_hermitian = validate_density(skew, {2});
  REQUIRE(non_hermitian.defect == DensityDefect::NonHermitian);

  const auto off_trace =
      validate_density(ComplexMatrix::Identity(2, 2), {2});
  REQUIRE(off_trace.defect == DensityDefect::TraceDeviation);

  const auto bad_shape =
      validate_density(ComplexMatrix::Identity(3, 3) / 3.0, {2, 2});
  REQUIRE(bad_shape.defect == DensityDefect::ShapeMismatch);
}

TEST_CASE("singular values of a diagonal matrix") {
  RealMatrix m = RealMatrix::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  const auto spectrum = singular_values(m);
  REQUIRE(spectrum.values.size() == 2);
  REQUIRE(spectrum.values[0] == Catch::Approx(3.0));
  REQUIRE(spectrum.values[1] == Catch::Approx(1.0));
}

TEST_CASE("rank-one matrices have a single singular value") {
  RealVector a = random_real(5, 1, 3);
  RealVector b = random_real(4, 1, 4);
  const RealMatrix m = a * b.transpose();
  const auto spectrum = singular_values(m);
  REQUIRE(spectrum.values[0] == Catch::Approx(a.norm() * b.norm()));
  for (std::size_t i = 1; i < spectrum.values.size(); ++i) {
    REQUIRE(spectrum.values[i] < 1e-12 * spectrum.values[0]);
  }
}

TEST_CASE("squared singular values sum to the squared Frobenius norm") {
  const RealMatrix m = random_real(4, 7, 5);
  const auto spectrum = singular_values(m);
  double sum_sq = 0.0;
  for (double s : spectrum.values) sum_sq += s * s;
  REQUIRE(std::abs(sum_sq - m.squaredNorm()) < 1e-10);
}

TEST_CASE("singular values are transpose-invariant and descending") {
  const RealMatrix m = random_real(6, 3, 6);
  const auto direct = singular_values(m).values;
  const auto flipped = singular_values(m.transpose()).values;
  REQUIRE(direct.size() == flipped.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    REQUIRE(std::abs(direct[i] - flipped[i]) < 1e-10);
    if (i > 0) REQUIRE(direct[i - 1] >= direct[i]);
  }
}

TEST_CASE("singular_values rejects non-finite input") {
  RealMatrix m = RealMatrix::Zero(2, 2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  REQUIRE_THROWS_AS(singular_values(m), std::invalid_argument);
}

TEST_CASE("trace norm basics") {
  RealMatrix m = RealMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -2.0;
  REQUIRE(trace_norm(m) == Catch::Approx(3.0));
  REQUIRE(trace_norm(RealMatrix::Zero(3, 5)) == 0.0);

  const RealVector a = random_real(6, 1, 9);
  const RealVector b = random_real(2, 1, 10);
  REQUIRE(trace_norm(a * b.transpose()) ==
          Catch::Approx(a.norm() * b.norm()));
}

TEST_CASE("trace norm satisfies the triangle inequality") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const RealMatrix a = random_real(4, 6, 100 + seed);
    const RealMatrix b = random_real(4, 6, 200 + seed);
    REQUIRE(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-9);
  }
}
