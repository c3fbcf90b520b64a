// Copyright 2026 The qslkit Authors
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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "qslkit/errors.hpp"
#include "qslkit/linalg.hpp"

using namespace qslkit;
using doctest::Approx;

namespace {

const Complex kI{0.0, 1.0};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

}  // namespace

TEST_CASE("matrix construction") {
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), InvalidInput);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), InvalidInput);
  CHECK_THROWS_AS(ComplexMatrix::hermitian({{0.0, 1.0}, {0.0, 0.0}}), InvalidInput);
  CHECK_NOTHROW(ComplexMatrix::hermitian({{1.0, kI}, {-kI, 2.0}}));
  // Within 1e-12 elementwise is accepted, beyond is not.
  CHECK_NOTHROW(ComplexMatrix::hermitian({{1.0, 1.0}, {1.0 + 5e-13, 0.0}}));
  CHECK_THROWS_AS(ComplexMatrix::hermitian({{1.0, 1.0}, {1.0 + 1e-11, 0.0}}),
                  InvalidInput);
}

TEST_CASE("matrix ops") {
  const ComplexMatrix sz{{1.0, 0.0}, {0.0, -1.0}};
  CHECK(commutator(sz, sz) == ComplexMatrix(2));
  CHECK(trace(ComplexMatrix::identity(2)) == Complex(2.0));
  CHECK(adjoint(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}) ==
        (ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}}));
  CHECK(adjoint(ComplexMatrix{{0.0, kI}, {0.0, 0.0}}) ==
        (ComplexMatrix{{0.0, 0.0}, {-kI, 0.0}}));

  const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix sy{{0.0, -kI}, {kI, 0.0}};
  // [sx, sy] = 2i sz.
  CHECK(max_abs_diff(commutator(sx, sy), 2.0 * kI * sz) == 0.0);
  CHECK(max_abs_diff(add(sx, sx), scale(sx, 2.0)) == 0.0);
  CHECK(max_abs_diff(multiply(sx, sx), ComplexMatrix::identity(2)) == 0.0);

  CHECK_THROWS_AS(add(sx, ComplexMatrix(3)), InvalidInput);
  CHECK_THROWS_AS(multiply(sx, ComplexMatrix(3)), InvalidInput);
  CHECK_THROWS_AS(commutator(sx, ComplexMatrix(1)), InvalidInput);
}

TEST_CASE("singular values: examples") {
  SUBCASE("identity") {
    const auto s = singular_values(ComplexMatrix::identity(2));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Approx(1.0));
    CHECK(s[1] == Approx(1.0));
  }
  SUBCASE("Hermitian diag(2, -3)") {
    const auto s = singular_values(ComplexMatrix::diagonal({2.0, -3.0}));
    CHECK(s[0] == Approx(3.0));
    CHECK(s[1] == Approx(2.0));
  }
  SUBCASE("nilpotent") {
    // M^dagger M = diag(0, 1).
    const auto s = singular_values(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
    CHECK(s[0] == Approx(1.0));
    CHECK(s[1] == 0.0);
  }
  SUBCASE("3x3 diagonal") {
    const auto s = singular_values(ComplexMatrix::diagonal({-1.0, 5.0, 2.0}));
    CHECK(s[0] == Approx(5.0));
    CHECK(s[1] == Approx(2.0));
    CHECK(s[2] == Approx(1.0));
  }
  SUBCASE("non-finite input") {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(singular_values(m), InvalidInput);
    m(0, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(schatten_norm(m, NormKind::kTrace), InvalidInput);
  }
}

TEST_CASE("singular values satisfy the characteristic polynomial of M^dagger M") {
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix m = oracle::random_matrix(n);
      const auto s = singular_values(m);
      const ComplexMatrix gram = adjoint(m) * m;
      double frob2 = 0.0;
      for (const Complex& z : m.entries()) frob2 += std::norm(z);
      double sum2 = 0.0;
      double prod = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n) CHECK(s[i] >= s[i + 1]);
        CHECK(s[i] >= 0.0);
        sum2 += s[i] * s[i];
        prod *= s[i];
        // det(M^dagger M - s^2 I) = 0, relative to the scale of the gram.
        const double det = std::abs(
            oracle::determinant(gram - (s[i] * s[i]) * ComplexMatrix::identity(n)));
        CHECK(det <= 1e-9 * std::pow(frob2, static_cast<double>(n)));
      }
      CHECK(sum2 == Approx(frob2).epsilon(1e-12));
      CHECK(prod == Approx(std::abs(oracle::determinant(m))).epsilon(1e-9));
    }
  }
}

TEST_CASE("singular values: adjoint and unitary invariance") {
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix m = oracle::random_matrix(n);
      const auto s = singular_values(m);
      const auto s_adj = singular_values(adjoint(m));
      const auto s_rot = singular_values(oracle::random_unitary(n) * m *
                                         oracle::random_unitary(n));
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(s[i] - s_adj[i]) <= 1e-12 * s[0]);
        CHECK(std::abs(s[i] - s_rot[i]) <= 1e-10 * std::max(1.0, s[0]));
      }
    }
  }
}

TEST_CASE("von Neumann trace inequality on random Hermitian pairs") {
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const ComplexMatrix a = oracle::random_hermitian(n);
      const ComplexMatrix b = oracle::random_hermitian(n);
      const auto sa = singular_values(a);
      const auto sb = singular_values(b);
      double rhs = 0.0;
      for (std::size_t i = 0; i < n; ++i) rhs += sa[i] * sb[i];
      CHECK(oracle::abs_trace_product(a, b) <= rhs * (1.0 + 1e-12) + 1e-14);
    }
  }
}

TEST_CASE("Schatten norms") {
  CHECK(schatten_norm(ComplexMatrix::identity(2), NormKind::kTrace) == Approx(2.0));
  CHECK(schatten_norm(ComplexMatrix::diagonal({3.0, 4.0}), NormKind::kHilbertSchmidt) ==
        Approx(5.0));
  CHECK(schatten_norm(ComplexMatrix::diagonal({3.0, -4.0}), NormKind::kOperator) ==
        Approx(4.0));

  SUBCASE("two equal singular values give n a") {
    // diag(a, -a): brute-force singular values are {|a|, |a|}.
    for (double a : {0.3, 1.7, 42.0}) {
      const ComplexMatrix m = ComplexMatrix::diagonal({a, -a});
      for (NormKind kind : kAllNorms) {
        CHECK(schatten_norm(m, kind) ==
              Approx(plateau_constant(kind) * a).epsilon(1e-14));
        // Same via the general Schatten formula with p = 1, 2, inf.
        const double p = schatten_index(kind);
        const double expected =
            std::isinf(p) ? a : std::pow(2.0 * std::pow(a, p), 1.0 / p);
        CHECK(schatten_norm(m, kind) == Approx(expected).epsilon(1e-14));
      }
    }
  }

  SUBCASE("plateau constants are 2^(1/p)") {
    CHECK(plateau_constant(NormKind::kOperator) == 1.0);
    CHECK(plateau_constant(NormKind::kHilbertSchmidt) == Approx(std::sqrt(2.0)));
    CHECK(plateau_constant(NormKind::kTrace) == 2.0);
    for (NormKind kind : kAllNorms) {
      CHECK(plateau_constant(kind) ==
            Approx(std::pow(2.0, 1.0 / schatten_index(kind))));
    }
  }

  SUBCASE("unsupported p") {
    CHECK_THROWS_AS(norm_kind_from_index(3.0), InvalidInput);
    CHECK_THROWS_AS(norm_kind_from_index(0.5), InvalidInput);
    CHECK(norm_kind_from_index(std::numeric_limits<double>::infinity()) ==
          NormKind::kOperator);
    CHECK(norm_kind_from_index(1.0) == NormKind::kTrace);
    CHECK_THROWS_AS(parse_norm_kind("p3"), InvalidInput);
    CHECK(parse_norm_kind("hs") == NormKind::kHilbertSchmidt);
  }
}

TEST_CASE("Schatten norm ordering and homogeneity") {
  for (std::size_t n : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexMatrix m = oracle::random_matrix(n, oracle::uniform(1e-3, 1e3));
      const double op = schatten_norm(m, NormKind::kOperator);
      const double hs = schatten_norm(m, NormKind::kHilbertSchmidt);
      const double tr = schatten_norm(m, NormKind::kTrace);
      CHECK(op <= hs + 1e-12 * hs);
      CHECK(hs <= tr + 1e-12 * tr);

      const Complex c{oracle::uniform(-3, 3), oracle::uniform(-3, 3)};
      for (NormKind kind : kAllNorms) {
        CHECK(schatten_norm(c * m, kind) ==
              Approx(std::abs(c) * schatten_norm(m, kind)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("Hermitian eigenvalues: examples") {
  auto check = [](const ComplexMatrix& m, std::vector<double> expected) {
    const auto ev = hermitian_eigenvalues(m);
    REQUIRE(ev.size() == expected.size());
    for (std::size_t i = 0; i < ev.size(); ++i) {
      CHECK(ev[i] == Approx(expected[i]).epsilon(1e-14));
    }
  };
  check(ComplexMatrix::diagonal({1.0, 0.0}), {1.0, 0.0});
  check(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}, {1.0, 0.0});
  check(ComplexMatrix{{0.0, -kI}, {kI, 0.0}}, {1.0, -1.0});
  check(ComplexMatrix::diagonal({0.0, 3.0, -2.0}), {3.0, 0.0, -2.0});
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}),
                  InvalidInput);
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix{{0.0, 1.0, 0.0},
                                                {0.0, 0.0, 0.0},
                                                {0.0, 0.0, 0.0}}),
                  InvalidInput);
}

TEST_CASE("Hermitian eigen-decomposition reconstructs the input") {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix m = oracle::random_hermitian(n);
      const HermitianEigen eig = hermitian_eigen(m);
      ComplexMatrix rebuilt =
          eig.vectors * ComplexMatrix::diagonal(eig.values) * adjoint(eig.vectors);
      const double hs = schatten_norm(m, NormKind::kHilbertSchmidt);
      CHECK(schatten_norm(m - rebuilt, NormKind::kHilbertSchmidt) <= 1e-10 * hs);
      CHECK((adjoint(eig.vectors) * eig.vectors - ComplexMatrix::identity(n)).max_abs() <=
            1e-12);
      for (std::size_t i = 0; i + 1 < n; ++i) CHECK(eig.values[i] >= eig.values[i + 1]);
      // 2x2 closed form agrees with the iterative solver.
      if (n == 2) {
        const auto closed = hermitian_eigenvalues(m);
        CHECK(closed[0] == Approx(eig.values[0]).epsilon(1e-12));
        CHECK(closed[1] == Approx(eig.values[1]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("Hermitian eigenvalues of a degenerate spectrum") {
  const ComplexMatrix u = oracle::random_unitary(4);
  const ComplexMatrix m = u * ComplexMatrix::diagonal({2.0, 2.0, -1.0, -1.0}) * adjoint(u);
  ComplexMatrix h = m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  }
  const auto ev = hermitian_eigenvalues(h);
  CHECK(ev[0] == Approx(2.0).epsilon(1e-12));
  CHECK(ev[1] == Approx(2.0).epsilon(1e-12));
  CHECK(ev[2] == Approx(-1.0).epsilon(1e-12));
  CHECK(ev[3] == Approx(-1.0).epsilon(1e-12));
}
