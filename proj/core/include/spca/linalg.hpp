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

#include <span>
#include <vector>

namespace spca {

using Vector = std::vector<double>;
/// Sorted ascending, 0-based, duplicate-free.
using IndexSet = std::vector<int>;

/// Dense rectangular matrix, row-major.  Used for data matrices (rows are
/// observations, columns are variables).
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // rows * cols entries

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, 0.0) {}

  double operator()(int i, int j) const {
    return values[static_cast<std::size_t>(i) * cols + j];
  }
  double& operator()(int i, int j) {
    return values[static_cast<std::size_t>(i) * cols + j];
  }
};

/// Dense symmetric matrix.  Construction validates symmetry
/// (|a_ij - a_ji| <= 1e-12 * max(1, |a_ij|)) and finiteness of every entry;
/// positive semidefiniteness is not enforced.  Immutable after construction.
class SymMatrix {
 public:
  SymMatrix() = default;

  /// Zero matrix of dimension n (n >= 1).
  explicit SymMatrix(int n);

  /// From a full row-major entry list of length n*n; throws InputError on
  /// asymmetry or non-finite entries.
  SymMatrix(int n, std::vector<double> entries);

  static SymMatrix diagonal(const Vector& diag);

  int dim() const { return n_; }
  double operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& data() const { return entries_; }

  /// y = A x.
  Vector multiply(std::span<const double> x) const;

  double frobenius_norm() const;

 private:
  struct Unchecked {};
  SymMatrix(Unchecked, int n, std::vector<double> entries)
      : n_(n), entries_(std::move(entries)) {}

  friend SymMatrix covariance_from_data(const Matrix& d);
  friend SymMatrix submatrix(const SymMatrix& a, const IndexSet& t);

  int n_ = 0;
  std::vector<double> entries_;
};

/// Largest eigenvalue with a unit eigenvector.  The vector satisfies
/// ||A v - value v|| <= tol * max(1, |value|) and carries a fixed sign
/// convention: the coordinate of largest absolute value (lowest index on
/// ties) is positive.
struct EigenPair {
  double value = 0.0;
  Vector vector;
};

/// A = D^T D, symmetric positive semidefinite by construction (the upper
/// triangle is computed once and mirrored, so symmetry is exact).
SymMatrix covariance_from_data(const Matrix& d);

/// Principal (largest) eigenpair of a symmetric matrix.
///
/// Deterministic power iteration: start vector is the normalized all-ones
/// vector, iterating on A + cI with c = max(0, -n * min_i a_ii) so a large
/// negative eigenvalue of a nominally-PSD input cannot dominate; convergence
/// is declared on the Rayleigh-quotient residual.  Two refinements keep the
/// output well defined where the plain scheme is degenerate:
///   * if a cheap Rayleigh certificate (largest diagonal entry, one graded
///     probe vector) exceeds the converged value, the iteration restarts
///     from that better start -- the all-ones vector is exactly orthogonal
///     to the dominant eigenvector of e.g. [[1,b],[b,1]] with b < 0;
///   * after convergence a short extra phase drives the residual towards the
///     rounding floor when progress stays geometric, then snaps components
///     below 64*n*eps to exact zero, so eigenvectors that are exactly sparse
///     (diagonal matrices, decoupled blocks) come out with true zeros.
/// Both refinements are deterministic.  For adversarial matrices where every
/// deterministic start used is orthogonal to the dominant eigenspace the
/// result can still be a lower eigenpair; such inputs do not arise from
/// covariance data.
///
/// max_iter == 0 selects the default budget (10 * n + 150000; near-degenerate
/// spectra need O(lambda1 / gap) iterations at tight tolerances).  Throws
/// ConvergenceError carrying the last residual when the budget is exhausted.
EigenPair principal_eigenpair(const SymMatrix& a, double tol = 1e-10,
                              int max_iter = 0);

/// f(x) = x^T A x, evaluated over the support of x (O(s^2) for s-sparse x).
double quad_form(const SymMatrix& a, std::span<const double> x);

/// grad f(x) = 2 A x.
Vector gradient(const SymMatrix& a, std::span<const double> x);

/// A_TT with rows/columns in ascending index order; t must be nonempty,
/// in range and duplicate-free.
SymMatrix submatrix(const SymMatrix& a, const IndexSet& t);

}  // namespace spca
