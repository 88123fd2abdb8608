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

#include "spca/enumeration.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "spca/conditions.hpp"
#include "spca/errors.hpp"
#include "spca/oracle.hpp"
#include "spca/parallel.hpp"

namespace spca {

namespace {

constexpr std::uint64_t kSupportCap = 10000000;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (r > kSaturated / factor) return kSaturated;
    r = r * factor / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// rank-th (0-based) k-combination of {0..n-1} in lexicographic order.
IndexSet unrank_combination(int n, int k, std::uint64_t rank) {
  IndexSet c;
  c.reserve(k);
  int next = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = next;; ++v) {
      std::uint64_t below = binomial_saturating(n - 1 - v, k - 1 - pos);
      if (rank < below) {
        c.push_back(v);
        next = v + 1;
        break;
      }
      rank -= below;
    }
  }
  return c;
}

}  // namespace

EnumerationReport enumerate_so(const SymMatrix& a, int s,
                               const EnumerateOptions& opts) {
  const int n = a.dim();
  if (s < 1 || s > n) throw InputError("enumerate_so: invalid sparsity level");

  std::vector<int> sizes;
  if (opts.sizes_up_to_s) {
    for (int k = 1; k <= s; ++k) sizes.push_back(k);
  } else {
    sizes.push_back(s);
  }
  std::uint64_t total = 0;
  for (int k : sizes) {
    std::uint64_t c = binomial_saturating(n, k);
    total = (total > kSaturated - c) ? kSaturated : total + c;
  }
  if (total > kSupportCap) {
    throw RefusalError("enumerate_so: " + std::to_string(total) +
                           " supports exceed the cap of " +
                           std::to_string(kSupportCap),
                       total);
  }

  EnumerationReport rep;
  rep.s = s;
  rep.n = n;
  rep.total = total;
  rep.rows.resize(total);

  std::uint64_t offset = 0;
  for (int k : sizes) {
    std::uint64_t count = binomial_saturating(n, k);
    parallel_ranges(count, opts.threads, [&, k, offset](std::uint64_t b,
                                                        std::uint64_t e) {
      IndexSet t = unrank_combination(n, k, b);
      for (std::uint64_t r = b; r < e; ++r) {
        SoPoint p = so_point(a, t);
        auto& row = rep.rows[offset + r];
        row.support = t;
        row.value = p.value;
        row.co_stationary = is_co_stationary(a, p.x, s, opts.tol).holds;
        if (row.co_stationary) {
          row.cw_maximal = is_cw_maximal(a, p.x, s, opts.tol).holds;
        }
        // Advance to the next combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && t[i] == n - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
      }
    });
    offset += count;
  }

  std::sort(rep.rows.begin(), rep.rows.end(), [](const auto& l, const auto& r) {
    if (l.value != r.value) return l.value > r.value;
    return l.support < r.support;
  });
  for (const auto& row : rep.rows) {
    rep.co_stationary += row.co_stationary;
    rep.cw_maximal += row.cw_maximal;
  }
  return rep;
}

SolveResult global_bruteforce(const SymMatrix& a, int s,
                              const EnumerateOptions& opts) {
  EnumerationReport rep = enumerate_so(a, s, opts);
  const auto& top = rep.rows.front();
  SoPoint p = so_point(a, top.support);
  SolveResult res;
  res.x = std::move(p.x);
  res.value = quad_form(a, res.x);
  res.support.clear();
  for (int i = 0; i < a.dim(); ++i) {
    if (res.x[i] != 0.0) res.support.push_back(i);
  }
  res.trace.push_back({0, res.value, MoveKind::kInit});
  res.co_stationary = top.co_stationary;
  res.cw_maximal = top.cw_maximal;
  return res;
}

void write_csv(const EnumerationReport& report, std::ostream& os) {
  os << "rank,support,value,co_stationary,cw_maximal\n";
  char buf[64];
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    const auto& row = report.rows[r];
    os << (r + 1) << ",";
    for (std::size_t i = 0; i < row.support.size(); ++i) {
      if (i) os << ' ';
      os << (row.support[i] + 1);
    }
    std::snprintf(buf, sizeof(buf), "%.12g", row.value);
    os << ',' << buf << ',' << (row.co_stationary ? "true" : "false") << ','
       << (row.cw_maximal ? "true" : "false") << "\n";
  }
}

}  // namespace spca
