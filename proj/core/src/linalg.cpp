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

#include "spca/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "spca/errors.hpp"

namespace spca {

namespace {

constexpr double kSymTol = 1e-12;

double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InputError(std::string(what) + ": non-finite entry");
  }
}

/// Positive sign on the largest-absolute coordinate, lowest index on ties.
void fix_sign(Vector& v) {
  int k = 0;
  double best = -1.0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      k = i;
    }
  }
  if (v[k] < 0.0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace

SymMatrix::SymMatrix(int n) {
  if (n < 1) throw InputError("SymMatrix: dimension must be positive");
  n_ = n;
  entries_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

SymMatrix::SymMatrix(int n, std::vector<double> entries) {
  if (n < 1) throw InputError("SymMatrix: dimension must be positive");
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("SymMatrix: entry count does not match dimension");
  }
  check_finite(entries, "SymMatrix");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double a = entries[static_cast<std::size_t>(i) * n + j];
      double b = entries[static_cast<std::size_t>(j) * n + i];
      if (std::abs(a - b) > kSymTol * std::max(1.0, std::abs(a))) {
        throw InputError("SymMatrix: entries (" + std::to_string(i) + "," +
                         std::to_string(j) + ") break symmetry");
      }
    }
  }
  n_ = n;
  entries_ = std::move(entries);
}

SymMatrix SymMatrix::diagonal(const Vector& diag) {
  if (diag.empty()) throw InputError("SymMatrix::diagonal: empty diagonal");
  check_finite(diag, "SymMatrix::diagonal");
  int n = static_cast<int>(diag.size());
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = diag[i];
  return SymMatrix(Unchecked{}, n, std::move(e));
}

Vector SymMatrix::multiply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw InputError("SymMatrix::multiply: dimension mismatch");
  }
  Vector y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    const double* row = entries_.data() + static_cast<std::size_t>(i) * n_;
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : entries_) s += x * x;
  return std::sqrt(s);
}

SymMatrix covariance_from_data(const Matrix& d) {
  if (d.rows < 1 || d.cols < 1) throw InputError("covariance_from_data: empty matrix");
  check_finite(d.values, "covariance_from_data");
  int n = d.cols;
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < d.rows; ++k) s += d(k, i) * d(k, j);
      e[static_cast<std::size_t>(i) * n + j] = s;
      e[static_cast<std::size_t>(j) * n + i] = s;
    }
  }
  return SymMatrix(SymMatrix::Unchecked{}, n, std::move(e));
}

double quad_form(const SymMatrix& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.dim()) {
    throw InputError("quad_form: dimension mismatch");
  }
  // x_T^T A_TT x_T over the support T of x.
  std::vector<int> supp;
  for (int i = 0; i < a.dim(); ++i) {
    if (x[i] != 0.0) supp.push_back(i);
  }
  double s = 0.0;
  for (int i : supp) {
    double row = 0.0;
    for (int j : supp) row += a(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

Vector gradient(const SymMatrix& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.dim()) {
    throw InputError("gradient: dimension mismatch");
  }
  std::vector<int> supp;
  for (int i = 0; i < a.dim(); ++i) {
    if (x[i] != 0.0) supp.push_back(i);
  }
  Vector g(a.dim(), 0.0);
  for (int i = 0; i < a.dim(); ++i) {
    double s = 0.0;
    for (int j : supp) s += a(i, j) * x[j];
    g[i] = 2.0 * s;
  }
  return g;
}

SymMatrix submatrix(const SymMatrix& a, const IndexSet& t) {
  if (t.empty()) throw InputError("submatrix: empty index set");
  IndexSet s = t;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError("submatrix: duplicate index");
  }
  if (s.front() < 0 || s.back() >= a.dim()) {
    throw InputError("submatrix: index out of range");
  }
  int k = static_cast<int>(s.size());
  std::vector<double> e(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(i) * k + j] = a(s[i], s[j]);
  }
  return SymMatrix(SymMatrix::Unchecked{}, k, std::move(e));
}

namespace {

struct PowerResult {
  double value = 0.0;   // eigenvalue of A (shift removed)
  double residual = 0.0;
  Vector v;
  bool converged = false;
};

/// Power iteration on A + shift*I from a given unit start vector.
PowerResult power_iterate(const SymMatrix& a, double shift, Vector v,
                          double tol, int max_iter) {
  const int n = a.dim();
  PowerResult out;
  double lam_shifted = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, a.frobenius_norm() + std::abs(shift));

  int iter = 0;
  int extra = 0;  // post-convergence refinement budget
  bool converged = false;
  double checkpoint = std::numeric_limits<double>::infinity();
  while (true) {
    Vector w = a.multiply(v);
    if (shift != 0.0) {
      for (int i = 0; i < n; ++i) w[i] += shift * v[i];
    }
    lam_shifted = dot(w, v);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = w[i] - lam_shifted * v[i];
      r2 += d * d;
    }
    residual = std::sqrt(r2);
    double value = lam_shifted - shift;
    if (!converged && residual <= tol * std::max(1.0, std::abs(value))) {
      converged = true;
      checkpoint = residual;
    }
    if (converged) {
      // Keep iterating towards the rounding floor while progress stays
      // geometric, so exactly-sparse eigenvectors can be snapped below.
      if (residual <= floor) break;
      ++extra;
      if (extra > 1000) break;
      if (extra % 50 == 0) {
        if (residual > 0.5 * checkpoint) break;
        checkpoint = residual;
      }
    }
    if (++iter >= max_iter) break;
    double wn = l2_norm(w);
    if (wn == 0.0) break;  // only reachable when already converged (lam == 0)
    for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
  }

  out.value = lam_shifted - shift;
  out.residual = residual;
  out.converged = converged;
  out.v = std::move(v);
  return out;
}

/// Zero components indistinguishable from rounding noise, keeping the
/// residual bound intact (the snap is rejected if it degrades it).
void purify(const SymMatrix& a, double tol, PowerResult& r) {
  const int n = a.dim();
  const double snap = 64.0 * std::numeric_limits<double>::epsilon() * n;
  bool any = false;
  Vector w = r.v;
  for (int i = 0; i < n; ++i) {
    if (w[i] != 0.0 && std::abs(w[i]) < snap) {
      w[i] = 0.0;
      any = true;
    }
  }
  if (!any) return;
  double nrm = l2_norm(w);
  if (nrm == 0.0) return;
  for (double& x : w) x /= nrm;
  Vector aw = a.multiply(w);
  double lam = dot(aw, w);
  double r2 = 0.0;
  for (int i = 0; i < n; ++i) {
    double d = aw[i] - lam * w[i];
    r2 += d * d;
  }
  double res = std::sqrt(r2);
  if (res <= tol * std::max(1.0, std::abs(lam))) {
    r.v = std::move(w);
    r.value = lam;
    r.residual = res;
  }
}

}  // namespace

EigenPair principal_eigenpair(const SymMatrix& a, double tol, int max_iter) {
  const int n = a.dim();
  if (n < 1) throw InputError("principal_eigenpair: empty matrix");
  if (max_iter <= 0) max_iter = 10 * n + 150000;

  double min_diag = a(0, 0);
  int argmax_diag = 0;
  for (int i = 1; i < n; ++i) {
    min_diag = std::min(min_diag, a(i, i));
    if (a(i, i) > a(argmax_diag, argmax_diag)) argmax_diag = i;
  }
  const double shift = std::max(0.0, -min_diag * n);

  Vector ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
  PowerResult best = power_iterate(a, shift, std::move(ones), tol, max_iter);
  if (best.converged) purify(a, tol, best);

  // Rayleigh certificates: restart if a cheap probe beats the converged
  // value (the all-ones start can be exactly orthogonal to the dominant
  // eigenvector).
  const double margin = 4e-12 * std::max(1.0, std::abs(best.value));
  Vector probes[2];
  probes[0] = Vector(n, 0.0);
  probes[0][argmax_diag] = 1.0;
  probes[1] = Vector(n);
  for (int i = 0; i < n; ++i) probes[1][i] = 1.0 + (i + 1) / (2.0 * n);
  {
    double nrm = l2_norm(probes[1]);
    for (double& x : probes[1]) x /= nrm;
  }
  for (auto& p : probes) {
    double q = dot(a.multiply(p), p);
    if (!best.converged || q > best.value + margin) {
      PowerResult alt = power_iterate(a, shift, p, tol, max_iter);
      if (alt.converged) purify(a, tol, alt);
      bool better = alt.converged &&
                    (!best.converged || alt.value > best.value);
      if (better) best = std::move(alt);
    }
  }

  if (!best.converged) {
    throw ConvergenceError(
        "principal_eigenpair: no convergence after " + std::to_string(max_iter) +
            " iterations (residual " + std::to_string(best.residual) + ")",
        best.residual);
  }
  fix_sign(best.v);
  return EigenPair{best.value, std::move(best.v)};
}

}  // namespace spca
