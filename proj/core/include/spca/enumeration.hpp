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
#include <iosfwd>
#include <vector>

#include "spca/linalg.hpp"
#include "spca/solvers.hpp"

namespace spca {

/// Classification of every support-optimal point at one sparsity level.
/// Rows are sorted by value descending, ties by support ascending; the
/// CW-maximal rows are always a subset of the co-stationary ones.
struct EnumerationReport {
  struct Row {
    IndexSet support;  // 0-based
    double value = 0.0;
    bool co_stationary = false;
    bool cw_maximal = false;
  };

  std::vector<Row> rows;
  std::uint64_t total = 0;
  std::uint64_t co_stationary = 0;
  std::uint64_t cw_maximal = 0;
  int s = 0;
  int n = 0;
};

struct EnumerateOptions {
  double tol = 1e-9;       // verifier tolerance
  bool sizes_up_to_s = false;  // include supports smaller than s
  int threads = 1;         // 0 = hardware concurrency
};

/// Every support of size exactly s (or 1..s) gets its SO point, which is
/// classified: co-stationarity first, and the CW verifier only on rows that
/// pass it (CW-maximal points are co-stationary, so nothing is missed while
/// the expensive check runs on a fraction of the rows).  Refuses instances
/// with more than 10^7 supports, carrying the count.
EnumerationReport enumerate_so(const SymMatrix& a, int s,
                               const EnumerateOptions& opts = {});

/// The top row of enumerate_so as a solver result: the certified global
/// optimum at sparsity level s.
SolveResult global_bruteforce(const SymMatrix& a, int s,
                              const EnumerateOptions& opts = {});

/// CSV with header: rank,support,value,co_stationary,cw_maximal (support is
/// space-separated 1-based indices).
void write_csv(const EnumerationReport& report, std::ostream& os);

}  // namespace spca
