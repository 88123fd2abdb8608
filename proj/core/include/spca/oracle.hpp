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

#include "spca/linalg.hpp"

namespace spca {

/// Maximizer of x^T A x over the unit ball restricted to a support:
/// the principal eigenvector of A_TT embedded into full dimension.
/// support is the requested set T; the nonzeros of x are contained in it.
struct SoPoint {
  Vector x;
  IndexSet support;
  double value = 0.0;
};

/// Support-optimal point for T.  Deterministic: the embedded eigenvector
/// inherits the eigensolver's fixed start and sign rules, so ties in the
/// spectrum of A_TT resolve the same way on every call.
SoPoint so_point(const SymMatrix& a, const IndexSet& t);

/// Variational renormalization: the SO point on the support of x, i.e. any
/// sparse candidate is replaced by the best vector with its own sparsity
/// pattern.  Throws InputError for x == 0.
SoPoint renormalize(const SymMatrix& a, std::span<const double> x);

}  // namespace spca
