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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "spca/errors.hpp"
#include "spca/sparsity.hpp"

using namespace spca;

namespace {

Vector random_vector_with_ties(std::mt19937_64& gen, int n) {
  // Small integer magnitudes make exact ties and zeros common.
  std::uniform_int_distribution<int> mag(0, 4);
  std::bernoulli_distribution flip(0.5);
  Vector x(n);
  for (double& v : x) v = (flip(gen) ? 1 : -1) * mag(gen);
  return x;
}

double norm2(const Vector& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("partition on the worked seven-vector") {
  Vector x{3, 2, 1, 1, 1, 0, 0};
  IndexPartition p = partition(x, 3);
  CHECK(p.gt == IndexSet{0, 1});
  CHECK(p.eq == IndexSet{2, 3, 4});
  CHECK(p.lt == IndexSet{5, 6});
  CHECK(p.ms == 1.0);
}

TEST_CASE("partition below the sparsity level") {
  Vector x{0, 0, 4, -3, 0, 0};
  IndexPartition p = partition(x, 3);
  CHECK(p.gt == IndexSet{2, 3});
  CHECK(p.eq.empty());
  CHECK(p.lt == IndexSet{0, 1, 4, 5});
  CHECK(p.ms == 0.0);
}

TEST_CASE("partition of the zero vector") {
  Vector x(5, 0.0);
  IndexPartition p = partition(x, 2);
  CHECK(p.gt.empty());
  CHECK(p.eq.empty());
  CHECK(p.lt == IndexSet{0, 1, 2, 3, 4});
}

TEST_CASE("partition rejects invalid sparsity levels") {
  Vector x{1, 2};
  CHECK_THROWS_AS(partition(x, 0), InputError);
  CHECK_THROWS_AS(partition(x, 3), InputError);
}

TEST_CASE("partition invariants on random vectors") {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(gen() % 12);
    int s = 1 + static_cast<int>(gen() % n);
    Vector x = random_vector_with_ties(gen, n);
    IndexPartition p = partition(x, s);

    // The three sets partition {0..n-1}.
    std::set<int> all;
    for (int i : p.gt) all.insert(i);
    for (int i : p.eq) all.insert(i);
    for (int i : p.lt) all.insert(i);
    CHECK(all.size() == static_cast<std::size_t>(n));
    CHECK(p.gt.size() + p.eq.size() + p.lt.size() == static_cast<std::size_t>(n));

    // Strict magnitude ordering across the partition classes.
    for (int i : p.gt) {
      for (int j : p.eq) CHECK(std::abs(x[i]) > std::abs(x[j]));
    }
    for (int j : p.eq) {
      for (int k : p.lt) CHECK(std::abs(x[j]) > std::abs(x[k]));
    }

    // |I_>=| < s forces zeros below.
    if (static_cast<int>(p.gt.size() + p.eq.size()) < s) {
      for (int k : p.lt) CHECK(x[k] == 0.0);
    }
  }
}

TEST_CASE("top_supports worked examples") {
  CHECK(top_supports(Vector{3, 2, 1, 1, 1, 0, 0}, 3).supports ==
        std::vector<IndexSet>{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK(top_supports(Vector{0, -5, 4, -3, 2, 0}, 3).supports ==
        std::vector<IndexSet>{{1, 2, 3}});
  CHECK(top_supports(Vector{0, 0, 4, -3, 0, 0}, 3).supports ==
        std::vector<IndexSet>{{2, 3}});
  CHECK(top_supports(Vector(4, 0.0), 2).supports.empty());
}

TEST_CASE("top_support_first agrees with the family head") {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(gen() % 10);
    int s = 1 + static_cast<int>(gen() % n);
    Vector x = random_vector_with_ties(gen, n);
    SupportFamily fam = top_supports(x, s);
    IndexSet first = top_support_first(x, s);
    if (fam.supports.empty()) {
      CHECK(first.empty());
    } else {
      CHECK(first == fam.supports.front());
    }
  }
}

TEST_CASE("hard_threshold worked example and tie pair") {
  auto hs = hard_threshold(Vector{3, 2, 1, 1, 1, 0, 0}, 3);
  REQUIRE(hs.size() == 3);
  CHECK(hs[0] == Vector{3, 2, 1, 0, 0, 0, 0});
  CHECK(hs[1] == Vector{3, 2, 0, 1, 0, 0, 0});
  CHECK(hs[2] == Vector{3, 2, 0, 0, 1, 0, 0});

  auto pair = hard_threshold(Vector{1, 1}, 1);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0] == Vector{1, 0});
  CHECK(pair[1] == Vector{0, 1});

  // Already sparse enough: the vector itself.
  auto self = hard_threshold(Vector{0, 2, 0, -1}, 3);
  REQUIRE(self.size() == 1);
  CHECK(self[0] == Vector{0, 2, 0, -1});
}

TEST_CASE("hard_threshold invariants on random vectors") {
  std::mt19937_64 gen(44);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(gen() % 10);
    int s = 1 + static_cast<int>(gen() % n);
    Vector x = random_vector_with_ties(gen, n);
    double xn = norm2(x);
    for (const Vector& y : hard_threshold(x, s)) {
      int nnz = 0;
      for (int i = 0; i < n; ++i) {
        if (y[i] != 0.0) {
          ++nnz;
          CHECK(y[i] == x[i]);
        }
      }
      CHECK(nnz <= s);
      CHECK(norm2(y) <= xn + 1e-15);
    }
  }
}

TEST_CASE("sqclp_solve worked examples") {
  SUBCASE("basis vector") {
    auto sol = sqclp_solve(Vector{1, 0, 0}, 1);
    CHECK(sol.value == 1.0);
    REQUIRE(sol.solutions.size() == 1);
    CHECK(sol.solutions[0] == Vector{1, 0, 0});
  }
  SUBCASE("single-support instance") {
    auto sol = sqclp_solve(Vector{0, -5, 4, -3, 2, 0}, 3);
    CHECK(sol.value == doctest::Approx(std::sqrt(50.0)).epsilon(1e-15));
    REQUIRE(sol.solutions.size() == 1);
    double r = std::sqrt(50.0);
    CHECK(sol.solutions[0][1] == doctest::Approx(-5.0 / r));
    CHECK(sol.solutions[0][2] == doctest::Approx(4.0 / r));
    CHECK(sol.solutions[0][3] == doctest::Approx(-3.0 / r));
    CHECK(sol.solutions[0][4] == 0.0);
  }
  SUBCASE("full symmetry: all two-subsets") {
    auto sol = sqclp_solve(Vector{1, 1, 1, 1}, 2);
    CHECK(sol.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sol.solutions.size() == 6);
  }
  SUBCASE("zero vector is degenerate") {
    CHECK_THROWS_AS(sqclp_solve(Vector(3, 0.0), 2), DegenerateInputError);
  }
}

TEST_CASE("sqclp value is constant over the support family") {
  std::mt19937_64 gen(45);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(gen() % 10);
    int s = 1 + static_cast<int>(gen() % n);
    Vector x = random_vector_with_ties(gen, n);
    SupportFamily fam = top_supports(x, s);
    if (fam.supports.empty()) continue;
    // The multiset of included magnitudes is the same for every member.
    std::multiset<double> ref;
    for (int i : fam.supports.front()) ref.insert(std::abs(x[i]));
    for (const IndexSet& t : fam.supports) {
      std::multiset<double> got;
      for (int i : t) got.insert(std::abs(x[i]));
      CHECK(got == ref);
    }
  }
}

TEST_CASE("sqclp_solve matches the brute-force oracle") {
  std::mt19937_64 gen(46);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int done = 0;
  while (done < 200) {
    int n = 1 + static_cast<int>(gen() % 10);
    int s = 1 + static_cast<int>(gen() % n);
    Vector p(n);
    for (double& v : p) v = u(gen);
    bool zero = std::all_of(p.begin(), p.end(), [](double v) { return v == 0.0; });
    if (zero) continue;
    CHECK(std::abs(sqclp_solve(p, s).value - sqclp_value_bruteforce(p, s)) <= 1e-12);
    ++done;
  }
  CHECK(sqclp_value_bruteforce(Vector{1, 0, 0}, 1) == 1.0);
  CHECK(sqclp_value_bruteforce(Vector{3, 4, 0}, 2) == 5.0);
  CHECK_THROWS_AS(sqclp_value_bruteforce(Vector(21, 1.0), 2), RefusalError);
}

TEST_CASE("s = n degenerates to plain norm maximization") {
  std::mt19937_64 gen(47);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(gen() % 8);
    Vector p(n);
    for (double& v : p) v = u(gen);
    if (std::all_of(p.begin(), p.end(), [](double v) { return v == 0.0; })) continue;
    auto sol = sqclp_solve(p, n);
    double pn = norm2(p);
    CHECK(sol.value == doctest::Approx(pn).epsilon(1e-15));
    REQUIRE(sol.solutions.size() == 1);
    for (int i = 0; i < n; ++i) {
      CHECK(sol.solutions[0][i] == doctest::Approx(p[i] / pn).epsilon(1e-15));
    }
  }
}

TEST_CASE("solutions of sqclp are unit-norm and s-sparse") {
  std::mt19937_64 gen(48);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(gen() % 10);
    int s = 1 + static_cast<int>(gen() % n);
    Vector x = random_vector_with_ties(gen, n);
    if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) continue;
    for (const Vector& y : sqclp_solve(x, s).solutions) {
      CHECK(norm2(y) == doctest::Approx(1.0).epsilon(1e-12));
      int nnz = 0;
      for (double v : y) nnz += (v != 0.0);
      CHECK(nnz <= s);
    }
  }
}

TEST_CASE("top_supports refuses combinatorial blowups") {
  Vector x(50, 1.0);
  CHECK_THROWS_AS(top_supports(x, 25), RefusalError);
}
