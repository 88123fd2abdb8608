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
#include <optional>
#include <vector>

#include "spca/linalg.hpp"

namespace spca {

enum class MoveKind { kInit, kAdd, kSwap, kStep };

struct TraceEntry {
  int iteration = 0;
  double value = 0.0;
  MoveKind kind = MoveKind::kInit;
};

/// Output of every solver.  The trace starts with the init entry and is
/// strictly increasing afterwards; value always equals the quadratic form of
/// the returned point; support is its exact nonzero set.  The optimality
/// flags are left unset by the solvers and filled post hoc by the verifiers.
struct SolveResult {
  Vector x;
  double value = 0.0;
  IndexSet support;
  int iterations = 0;
  std::vector<TraceEntry> trace;
  double elapsed_ms = 0.0;
  std::optional<bool> co_stationary;
  std::optional<bool> cw_maximal;
  std::uint64_t swap_evals = 0;    // f_{i,j} evaluations
  std::uint64_t oracle_calls = 0;  // eigen-solves (SO oracle and scoring)
  bool converged = true;           // false only if the iteration cap was hit
  bool degenerate = false;         // conditional gradient met a zero gradient
  bool support_revisited = false;  // invariant violation tripwire
};

struct SolverConfig {
  enum class Init { kThresholding, kSupport, kVector };

  int s = 1;
  double tol_improve = 1e-10;  // strict-improvement acceptance threshold
  int max_iter = 10000;        // safety valve; finite termination is expected
  Init init = Init::kThresholding;
  IndexSet init_support;  // 0-based, used when init == kSupport
  Vector init_vector;     // used when init == kVector
};

/// Threshold the smallest-magnitude entries of the principal eigenvector
/// (lexicographically first support on ties) and renormalize on the kept
/// support.  An already-computed eigenpair of A can be supplied to avoid the
/// dominant eigensolve when sweeping sparsity levels.
SolveResult thresholding_solve(const SymMatrix& a, int s,
                               const EigenPair* precomputed = nullptr);

/// Conditional gradient with unit step size: each iteration jumps to the
/// feasible maximizer of the linearized objective (the normalized hard
/// thresholding of the gradient), stopping when the improvement drops to
/// tol_improve; the output is renormalized through the SO oracle.  Fixed
/// points are co-stationary.
SolveResult congradu_solve(const SymMatrix& a, const SolverConfig& config);

/// Greedy coordinate-wise maximization.  While the support is below s, add
/// the index whose grown-support optimum is largest; otherwise take the best
/// of all (remove i, place the freed mass on j with a sign) swaps, re-solving
/// on the swapped support, until no move improves by more than tol_improve.
/// The output is a coordinate-wise maximum point.
SolveResult gcw_solve(const SymMatrix& a, const SolverConfig& config);

/// Partial coordinate-wise variant: swap candidates are examined one removal
/// index at a time in increasing |x_i| order (lower index on ties) and the
/// first improving removal index is taken, so an improving iteration rarely
/// prices every pair; termination still requires exhausting all of them.
SolveResult pcw_solve(const SymMatrix& a, const SolverConfig& config);

/// One PCW run per sparsity level (strictly increasing levels).  Cold mode
/// initializes every level from thresholding; warm mode reuses the support
/// of the previous level's solution (continuation).
std::vector<SolveResult> pcw_path(const SymMatrix& a,
                                  const std::vector<int>& s_list, bool warm,
                                  const SolverConfig& base = {});

/// x^T A x / lambda_1(A), the fraction of the leading eigenvalue captured.
/// Throws InputError when lambda_1 <= 0.  The overload avoids recomputing
/// lambda_1 across calls.
double explained_variability(const SymMatrix& a, std::span<const double> x);
double explained_variability(const SymMatrix& a, std::span<const double> x,
                             double lambda1);

}  // namespace spca
