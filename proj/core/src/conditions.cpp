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

#include "spca/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spca/errors.hpp"
#include "spca/oracle.hpp"
#include "spca/rng.hpp"
#include "spca/sparsity.hpp"

namespace spca {

namespace {

double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

IndexSet support_of(std::span<const double> x) {
  IndexSet t;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i] != 0.0) t.push_back(i);
  }
  return t;
}

void check_dim(const SymMatrix& a, std::span<const double> x, const char* who) {
  if (static_cast<int>(x.size()) != a.dim()) {
    throw InputError(std::string(who) + ": dimension mismatch");
  }
}

}  // namespace

ConditionReport is_support_optimal(const SymMatrix& a, std::span<const double> x,
                                   double tol) {
  check_dim(a, x, "is_support_optimal");
  IndexSet t = support_of(x);
  if (t.empty()) throw InputError("is_support_optimal: zero vector");
  double nrm = l2_norm(x);
  if (nrm > 1.0 + tol) throw InputError("is_support_optimal: ||x||_2 exceeds 1");

  SoPoint best = so_point(a, t);
  double fx = quad_form(a, x);
  ConditionReport rep;
  rep.slack = fx - best.value;
  rep.holds = fx >= best.value - tol && nrm >= 1.0 - tol;
  if (!rep.holds) {
    Witness w;
    w.kind = Witness::Kind::kVector;
    w.value = best.value;
    w.z = std::move(best.x);
    rep.witness = std::move(w);
  }
  return rep;
}

ConditionReport is_co_stationary(const SymMatrix& a, std::span<const double> x,
                                 int s, double tol) {
  check_dim(a, x, "is_co_stationary");
  if (s < 1 || s > a.dim()) throw InputError("is_co_stationary: invalid sparsity level");
  if (l2_norm(x) > 1.0 + tol) {
    throw InputError("is_co_stationary: infeasible point, ||x||_2 > 1");
  }
  IndexSet supp = support_of(x);
  if (static_cast<int>(supp.size()) > s) {
    throw InputError("is_co_stationary: infeasible point, ||x||_0 > s");
  }

  Vector g = gradient(a, x);
  ConditionReport rep;
  if (support_of(g).empty()) {
    rep.holds = true;
    rep.slack = 0.0;
    return rep;
  }

  // max over feasible v of g.v equals ||g_T||_2, attained by the normalized
  // hard thresholding of g.
  IndexSet t = top_support_first(g, s);
  double gt_norm = 0.0;
  for (int i : t) gt_norm += g[i] * g[i];
  gt_norm = std::sqrt(gt_norm);
  double gx = 0.0;
  for (int i : supp) gx += g[i] * x[i];

  rep.slack = gx - gt_norm;
  rep.holds = gt_norm <= gx + tol;
  if (!rep.holds) {
    Witness w;
    w.kind = Witness::Kind::kVector;
    w.z.assign(x.size(), 0.0);
    for (int i : t) w.z[i] = g[i] / gt_norm;
    w.value = quad_form(a, w.z);
    rep.witness = std::move(w);
  }
  return rep;
}

SwapValue swap_value(const SymMatrix& a, std::span<const double> x, int i, int j) {
  check_dim(a, x, "swap_value");
  if (i < 0 || i >= a.dim() || x[i] == 0.0) {
    throw InputError("swap_value: index i is not in the support");
  }
  if (j < 0 || j >= a.dim() || x[j] != 0.0) {
    throw InputError("swap_value: index j is not in the co-support");
  }
  IndexSet supp = support_of(x);
  double fx = quad_form(a, x);
  double gi = 0.0, gj = 0.0;  // (A x)_i and (A x)_j
  for (int k : supp) {
    gi += a(i, k) * x[k];
    gj += a(j, k) * x[k];
  }
  const double xi = x[i];
  const double base = fx - 2.0 * xi * gi + a(i, i) * xi * xi;
  const double lin = gj - a(j, i) * xi;
  const double alpha = std::abs(xi);
  const double quad = a(j, j) * alpha * alpha;
  double plus = base + 2.0 * alpha * lin + quad;
  double minus = base - 2.0 * alpha * lin + quad;
  if (plus >= minus) return {plus, 1};
  return {minus, -1};
}

ConditionReport is_cw_maximal(const SymMatrix& a, std::span<const double> x,
                              int s, double tol) {
  check_dim(a, x, "is_cw_maximal");
  if (s < 1 || s > a.dim()) throw InputError("is_cw_maximal: invalid sparsity level");
  ConditionReport so = is_support_optimal(a, x, tol);
  if (!so.holds) {
    throw InputError("is_cw_maximal: input is not a unit-norm SO point");
  }
  IndexSet supp = support_of(x);
  if (static_cast<int>(supp.size()) > s) {
    throw InputError("is_cw_maximal: infeasible point, ||x||_0 > s");
  }

  const int n = a.dim();
  const double fx = quad_form(a, x);
  Vector ax = a.multiply(x);

  std::vector<bool> in_supp(n, false);
  for (int i : supp) in_supp[i] = true;
  IndexSet cosupp;
  for (int i = 0; i < n; ++i) {
    if (!in_supp[i]) cosupp.push_back(i);
  }

  ConditionReport rep;
  double best_move = -std::numeric_limits<double>::infinity();

  // Single-index augmentations, relevant only below the sparsity budget.
  if (static_cast<int>(supp.size()) < s) {
    for (int j : cosupp) {
      IndexSet grown = supp;
      grown.insert(std::lower_bound(grown.begin(), grown.end(), j), j);
      SoPoint cand = so_point(a, grown);
      best_move = std::max(best_move, cand.value);
      if (cand.value > fx + tol && !rep.witness) {
        Witness w;
        w.kind = Witness::Kind::kAdd;
        w.j = j;
        w.value = cand.value;
        w.z = std::move(cand.x);
        rep.witness = std::move(w);
      }
    }
  }

  // Swaps: extreme points of every feasible two-coordinate transfer.
  for (int i : supp) {
    const double xi = x[i];
    const double base = fx - 2.0 * xi * ax[i] + a(i, i) * xi * xi;
    const double alpha = std::abs(xi);
    for (int j : cosupp) {
      const double lin = ax[j] - a(j, i) * xi;
      const double quad = a(j, j) * alpha * alpha;
      double plus = base + 2.0 * alpha * lin + quad;
      double minus = base - 2.0 * alpha * lin + quad;
      double val = std::max(plus, minus);
      best_move = std::max(best_move, val);
      if (val > fx + tol && !rep.witness) {
        Witness w;
        w.kind = Witness::Kind::kSwap;
        w.i = i;
        w.j = j;
        w.sigma = plus >= minus ? 1 : -1;
        w.value = val;
        w.z.assign(x.begin(), x.end());
        w.z[i] = 0.0;
        w.z[j] = w.sigma * alpha;
        rep.witness = std::move(w);
      }
    }
  }

  // Within-support moves are dominated by support optimality, whose margin is
  // already established; fold it into the reported slack.
  best_move = std::max(best_move, fx - so.slack);
  rep.slack = fx - best_move;
  rep.holds = !rep.witness.has_value();
  if (rep.holds) rep.witness.reset();
  return rep;
}

ConditionReport cw_check_bruteforce(const SymMatrix& a, std::span<const double> x,
                                    int s, int samples, double tol,
                                    std::uint64_t seed) {
  check_dim(a, x, "cw_check_bruteforce");
  if (samples < 1) throw InputError("cw_check_bruteforce: samples must be positive");
  if (s < 1 || s > a.dim()) throw InputError("cw_check_bruteforce: invalid sparsity level");

  const int n = a.dim();
  const double fx = quad_form(a, x);
  const double nrm2 = [&] {
    double t = 0.0;
    for (double v : x) t += v * v;
    return t;
  }();
  IndexSet supp = support_of(x);
  const int nnz = static_cast<int>(supp.size());

  ConditionReport rep;
  rep.holds = true;
  double best = fx;
  Vector best_z;

  auto consider = [&](const Vector& z) {
    int z_nnz = 0;
    double zn = 0.0;
    for (double v : z) {
      z_nnz += (v != 0.0);
      zn += v * v;
    }
    if (z_nnz > s || zn > 1.0 + 1e-12) return;
    double fz = quad_form(a, z);
    if (fz > best) {
      best = fz;
      best_z = z;
    }
  };

  // Deterministic extreme-point candidates: directed transfers and removals.
  for (int i : supp) {
    for (int j = 0; j < n; ++j) {
      if (j == i || x[j] != 0.0) continue;
      for (int sigma : {1, -1}) {
        Vector z(x.begin(), x.end());
        z[i] = 0.0;
        z[j] = sigma * std::abs(x[i]);
        consider(z);
      }
    }
    Vector z(x.begin(), x.end());
    z[i] = 0.0;
    consider(z);
  }

  rng::Stream stream(seed);
  for (int k = 0; k < samples; ++k) {
    int i = static_cast<int>(stream.next_below(n));
    int j = static_cast<int>(stream.next_below(n - 1));
    if (j >= i) ++j;
    double rho2 = 1.0 - nrm2 + x[i] * x[i] + x[j] * x[j];
    if (rho2 < 0.0) rho2 = 0.0;
    double rho = std::sqrt(rho2);
    // Uniform point of the induced disk by rejection.
    double u, v;
    do {
      u = 2.0 * stream.next_uniform() - 1.0;
      v = 2.0 * stream.next_uniform() - 1.0;
    } while (u * u + v * v > 1.0);
    Vector z(x.begin(), x.end());
    z[i] = u * rho;
    z[j] = v * rho;
    consider(z);
    // Sparsity-respecting projections of the same draw.
    if (nnz >= s - 1) {
      z[i] = 0.0;
      consider(z);
      z[i] = u * rho;
      z[j] = 0.0;
      consider(z);
    }
  }

  if (best > fx + tol) {
    rep.holds = false;
    Witness w;
    w.kind = Witness::Kind::kVector;
    w.value = best;
    w.z = std::move(best_z);
    rep.witness = std::move(w);
  }
  rep.slack = fx - best;
  return rep;
}

}  // namespace spca
