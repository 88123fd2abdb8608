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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spca/linalg.hpp"

namespace spca {

/// Partition of {0..n-1} induced by the s-th largest absolute value ms of a
/// vector: gt holds indices strictly above ms, eq those equal to it, lt the
/// rest.  When the vector has fewer than s nonzeros (and for s == n, by
/// convention), gt is the support, eq is empty, lt the co-support and ms = 0.
/// Comparisons are exact; near-ties in the data are the caller's concern.
struct IndexPartition {
  IndexSet gt;
  IndexSet eq;
  IndexSet lt;
  double ms = 0.0;
};

/// All supports of the s largest-in-absolute-value nonzero components:
/// every member T satisfies gt subseteq T subseteq gt u eq with
/// |T| = min(s, |gt u eq|).  Members are sorted lexicographically.
struct SupportFamily {
  std::vector<IndexSet> supports;
};

IndexPartition partition(std::span<const double> x, int s);

/// Empty family for x == 0; exactly {support(x)} when x has at most s
/// nonzeros.  Throws RefusalError when the family would exceed 10^6 members.
SupportFamily top_supports(std::span<const double> x, int s);

/// The lexicographically first member of top_supports(x, s) without
/// enumerating the family; empty set for x == 0.
IndexSet top_support_first(std::span<const double> x, int s);

/// Hard thresholding: for each support T of the family, x restricted to T.
std::vector<Vector> hard_threshold(std::span<const double> x, int s);

/// Closed-form solution of  max { p.x : ||x||_0 <= s, ||x||_2 <= 1 }.
/// value = ||p_T||_2 (identical over all members of the family); solutions
/// are the normalized hard-thresholdings of p, in family order.
struct SqclpSolution {
  double value = 0.0;
  std::vector<Vector> solutions;
};

/// Throws DegenerateInputError for p == 0 (every feasible point is optimal).
SqclpSolution sqclp_solve(std::span<const double> p, int s);

/// Independent oracle: the same optimal value by explicit enumeration of all
/// supports of size <= s.  Refuses dimensions above 20.
double sqclp_value_bruteforce(std::span<const double> p, int s);

}  // namespace spca
