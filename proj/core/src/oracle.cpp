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

#include "spca/oracle.hpp"

#include <algorithm>

#include "spca/errors.hpp"

namespace spca {

SoPoint so_point(const SymMatrix& a, const IndexSet& t) {
  IndexSet sorted = t;
  std::sort(sorted.begin(), sorted.end());
  EigenPair e = principal_eigenpair(submatrix(a, sorted));
  SoPoint p;
  p.x.assign(a.dim(), 0.0);
  for (std::size_t k = 0; k < sorted.size(); ++k) p.x[sorted[k]] = e.vector[k];
  p.support = std::move(sorted);
  p.value = e.value;
  return p;
}

SoPoint renormalize(const SymMatrix& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.dim()) {
    throw InputError("renormalize: dimension mismatch");
  }
  IndexSet supp;
  for (int i = 0; i < a.dim(); ++i) {
    if (x[i] != 0.0) supp.push_back(i);
  }
  if (supp.empty()) throw InputError("renormalize: zero vector");
  return so_point(a, supp);
}

}  // namespace spca
