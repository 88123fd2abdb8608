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

#include "spca/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "spca/errors.hpp"

namespace spca {

namespace {

constexpr std::uint64_t kFamilyCap = 1000000;

int l0_norm(std::span<const double> x) {
  int c = 0;
  for (double v : x) c += (v != 0.0);
  return c;
}

/// C(n, k) saturating at cap+1.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap) return cap + 1;
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return std::min(r, cap + 1);
}

}  // namespace

IndexPartition partition(std::span<const double> x, int s) {
  const int n = static_cast<int>(x.size());
  if (s < 1) throw InputError("partition: sparsity level must be at least 1");
  if (s > n) throw InputError("partition: sparsity level exceeds dimension");

  IndexPartition p;
  const int nnz = l0_norm(x);
  if (nnz < s || s == n) {
    for (int i = 0; i < n; ++i) {
      (x[i] != 0.0 ? p.gt : p.lt).push_back(i);
    }
    p.ms = 0.0;
    return p;
  }

  std::vector<double> mag(n);
  for (int i = 0; i < n; ++i) mag[i] = std::abs(x[i]);
  std::vector<double> tmp = mag;
  std::nth_element(tmp.begin(), tmp.begin() + (s - 1), tmp.end(),
                   std::greater<double>());
  p.ms = tmp[s - 1];
  for (int i = 0; i < n; ++i) {
    if (mag[i] > p.ms) {
      p.gt.push_back(i);
    } else if (mag[i] == p.ms) {
      p.eq.push_back(i);
    } else {
      p.lt.push_back(i);
    }
  }
  return p;
}

IndexSet top_support_first(std::span<const double> x, int s) {
  if (l0_norm(x) == 0) return {};
  IndexPartition p = partition(x, s);
  const int take = std::min<int>(s, static_cast<int>(p.gt.size() + p.eq.size()));
  IndexSet t = p.gt;
  for (int i = 0; static_cast<int>(t.size()) < take; ++i) t.push_back(p.eq[i]);
  std::sort(t.begin(), t.end());
  return t;
}

SupportFamily top_supports(std::span<const double> x, int s) {
  SupportFamily fam;
  if (l0_norm(x) == 0) return fam;
  IndexPartition p = partition(x, s);
  const int take = std::min<int>(s, static_cast<int>(p.gt.size() + p.eq.size()));
  const int free = take - static_cast<int>(p.gt.size());

  std::uint64_t count =
      binomial_capped(static_cast<int>(p.eq.size()), free, kFamilyCap);
  if (count > kFamilyCap) {
    throw RefusalError("top_supports: family exceeds " +
                           std::to_string(kFamilyCap) + " members",
                       count);
  }

  // Combinations of eq-indices in lexicographic order.
  std::vector<int> pick(free);
  for (int i = 0; i < free; ++i) pick[i] = i;
  const int m = static_cast<int>(p.eq.size());
  while (true) {
    IndexSet t = p.gt;
    for (int i : pick) t.push_back(p.eq[i]);
    std::sort(t.begin(), t.end());
    fam.supports.push_back(std::move(t));
    if (free == 0) break;
    int i = free - 1;
    while (i >= 0 && pick[i] == m - free + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < free; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(fam.supports.begin(), fam.supports.end());
  return fam;
}

std::vector<Vector> hard_threshold(std::span<const double> x, int s) {
  SupportFamily fam = top_supports(x, s);
  std::vector<Vector> out;
  out.reserve(fam.supports.size());
  for (const IndexSet& t : fam.supports) {
    Vector y(x.size(), 0.0);
    for (int i : t) y[i] = x[i];
    out.push_back(std::move(y));
  }
  return out;
}

SqclpSolution sqclp_solve(std::span<const double> p, int s) {
  if (l0_norm(p) == 0) {
    throw DegenerateInputError("sqclp_solve: zero objective vector");
  }
  SqclpSolution sol;
  sol.solutions = hard_threshold(p, s);
  double nrm = 0.0;
  for (double v : sol.solutions.front()) nrm += v * v;
  sol.value = std::sqrt(nrm);
  for (Vector& y : sol.solutions) {
    for (double& v : y) v /= sol.value;
  }
  return sol;
}

double sqclp_value_bruteforce(std::span<const double> p, int s) {
  const int n = static_cast<int>(p.size());
  if (n > 20) {
    throw RefusalError("sqclp_value_bruteforce: dimension above 20",
                       static_cast<std::uint64_t>(n));
  }
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > s) continue;
    double nrm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) nrm2 += p[i] * p[i];
    }
    best = std::max(best, nrm2);
  }
  return std::sqrt(best);
}

}  // namespace spca
