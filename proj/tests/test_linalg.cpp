// Copyright 2026 The spca authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spca/errors.hpp"
#include "spca/linalg.hpp"
#include "support/test_oracles.hpp"

using namespace spca;

namespace {

Matrix make_data(int m, int n, std::initializer_list<double> vals) {
  Matrix d(m, n);
  int k = 0;
  for (double v : vals) d.values[k++] = v;
  return d;
}

double residual(const SymMatrix& a, const EigenPair& e) {
  Vector av = a.multiply(e.vector);
  double r2 = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    double d = av[i] - e.value * e.vector[i];
    r2 += d * d;
  }
  return std::sqrt(r2);
}

}  // namespace

TEST_CASE("covariance_from_data") {
  SUBCASE("orthonormal rows give the identity") {
    SymMatrix a = covariance_from_data(make_data(2, 2, {1, 0, 0, 1}));
    CHECK(a.dim() == 2);
    CHECK(a(0, 0) == 1.0);
    CHECK(a(0, 1) == 0.0);
    CHECK(a(1, 1) == 1.0);
  }
  SUBCASE("hand-checked product") {
    SymMatrix a = covariance_from_data(make_data(2, 2, {1, 2, 3, 4}));
    CHECK(a(0, 0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(a(0, 1) == doctest::Approx(14.0).epsilon(1e-15));
    CHECK(a(1, 0) == a(0, 1));
    CHECK(a(1, 1) == doctest::Approx(20.0).epsilon(1e-15));
  }
  SUBCASE("NaN entry is rejected") {
    Matrix d = make_data(2, 2, {1, 2, 3, 4});
    d(1, 1) = std::nan("");
    CHECK_THROWS_AS(covariance_from_data(d), InputError);
  }
}

TEST_CASE("SymMatrix construction") {
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 3.0, 4.0}), InputError);
  CHECK_THROWS_AS(SymMatrix(0), InputError);
  CHECK_NOTHROW(SymMatrix(2, {1.0, 2.0, 2.0, 4.0}));
}

TEST_CASE("principal_eigenpair basics") {
  SUBCASE("diagonal matrix") {
    EigenPair e = principal_eigenpair(SymMatrix::diagonal({2.0, 0.5}));
    CHECK(e.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.vector[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(e.vector[1] == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("2x2 with known spectrum") {
    SymMatrix a(2, {10, 14, 14, 20});
    EigenPair e = principal_eigenpair(a);
    CHECK(e.value == doctest::Approx(15.0 + std::sqrt(221.0)).epsilon(1e-12));
    CHECK(residual(a, e) <= 1e-10 * std::max(1.0, e.value));
  }
  SUBCASE("identity: degenerate spectrum resolves to the start vector") {
    for (int n : {1, 3, 7}) {
      EigenPair e = principal_eigenpair(SymMatrix::diagonal(Vector(n, 1.0)));
      CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
      for (double v : e.vector) {
        CHECK(v == doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-12));
      }
    }
  }
  SUBCASE("negative correlation block: dominant eigenvector orthogonal to ones") {
    SymMatrix a(2, {1.0, -0.3, -0.3, 1.0});
    EigenPair e = principal_eigenpair(a);
    CHECK(e.value == doctest::Approx(1.3).epsilon(1e-12));
  }
  SUBCASE("zero matrix") {
    EigenPair e = principal_eigenpair(SymMatrix(3));
    CHECK(e.value == 0.0);
  }
  SUBCASE("sign convention: largest-magnitude coordinate positive") {
    SymMatrix a(2, {1.0, -0.3, -0.3, 2.0});
    EigenPair e = principal_eigenpair(a);
    CHECK(e.vector[1] > 0.0);
  }
}

TEST_CASE("principal_eigenpair matches the characteristic-polynomial oracle") {
  std::mt19937_64 gen(20260809);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(gen() % 4);
    SymMatrix a = testing::random_symmetric(gen, n, 2.0);
    double expect = testing::charpoly_lambda_max(a);
    EigenPair e = principal_eigenpair(a);
    CAPTURE(trial);
    CAPTURE(n);
    CHECK(std::abs(e.value - expect) <= 1e-8 * std::max(1.0, std::abs(expect)));
  }
  // Degenerate spectra.
  for (int n : {2, 3, 4}) {
    SymMatrix a = SymMatrix::diagonal(Vector(n, 1.5));
    CHECK(std::abs(principal_eigenpair(a).value -
                   testing::charpoly_lambda_max(a)) <= 1e-8);
  }
}

TEST_CASE("principal_eigenpair determinism: identical calls, identical bits") {
  std::mt19937_64 gen(7);
  SymMatrix a = testing::random_psd(gen, 12);
  EigenPair e1 = principal_eigenpair(a);
  EigenPair e2 = principal_eigenpair(a);
  CHECK(e1.value == e2.value);
  CHECK(e1.vector == e2.vector);
}

TEST_CASE("quad_form") {
  SymMatrix a = SymMatrix::diagonal({3.0, 5.0, 7.0});
  Vector e2{0.0, 1.0, 0.0};
  CHECK(quad_form(a, e2) == 5.0);

  // Worked diagonal instance: uniform vector on the small block.
  int n = 10, s = 3;
  Vector diag(n, 2.0);
  for (int i = n - s; i < n; ++i) diag[i] = 0.5;
  SymMatrix inst = SymMatrix::diagonal(diag);
  Vector x(n, 0.0);
  for (int i = n - s; i < n; ++i) x[i] = 1.0 / std::sqrt(3.0);
  CHECK(quad_form(inst, x) == doctest::Approx(0.5).epsilon(1e-14));

  Vector xs(n, 0.0);
  xs[n - s - 1] = 1.0 / std::sqrt(3.0);
  for (int i = n - s + 1; i < n; ++i) xs[i] = 1.0 / std::sqrt(3.0);
  CHECK(quad_form(inst, xs) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(quad_form(a, Vector{1.0, 2.0}), InputError);
}

TEST_CASE("gradient") {
  SymMatrix a = SymMatrix::diagonal({3.0, 5.0, 7.0});
  CHECK(gradient(a, Vector{0, 0, 0}) == Vector{0, 0, 0});

  int n = 10, s = 3;
  Vector diag(n, 2.0);
  for (int i = n - s; i < n; ++i) diag[i] = 0.5;
  SymMatrix inst = SymMatrix::diagonal(diag);
  Vector x(n, 0.0);
  for (int i = n - s; i < n; ++i) x[i] = 1.0 / std::sqrt(3.0);
  Vector g = gradient(inst, x);
  for (int i = 0; i < n - s; ++i) CHECK(g[i] == 0.0);
  for (int i = n - s; i < n; ++i) {
    CHECK(g[i] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  }

  CHECK_THROWS_AS(gradient(a, Vector{1.0}), InputError);
}

TEST_CASE("gradient matches central finite differences of quad_form") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double h = 1e-5;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(gen() % 19);
    SymMatrix a = testing::random_symmetric(gen, n);
    Vector x(n);
    for (double& v : x) v = u(gen);
    Vector g = gradient(a, x);
    for (int i = 0; i < n; ++i) {
      Vector xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      double fd = (quad_form(a, xp) - quad_form(a, xm)) / (2.0 * h);
      CHECK(std::abs(g[i] - fd) <= 1e-6);
    }
  }
}

TEST_CASE("submatrix") {
  SymMatrix a = SymMatrix::diagonal({1.0, 2.0, 3.0});
  SUBCASE("full index set returns the matrix") {
    SymMatrix s = submatrix(a, {0, 1, 2});
    CHECK(s.data() == a.data());
  }
  SUBCASE("diagonal selection") {
    SymMatrix s = submatrix(a, {1, 2});
    CHECK(s.dim() == 2);
    CHECK(s(0, 0) == 2.0);
    CHECK(s(1, 1) == 3.0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(submatrix(a, {}), InputError);
    CHECK_THROWS_AS(submatrix(a, {3}), InputError);
    CHECK_THROWS_AS(submatrix(a, {1, 1}), InputError);
  }
}
