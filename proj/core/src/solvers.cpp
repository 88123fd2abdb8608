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

#include "spca/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>

#include "spca/errors.hpp"
#include "spca/oracle.hpp"
#include "spca/sparsity.hpp"

namespace spca {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

IndexSet support_of(std::span<const double> x) {
  IndexSet t;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i] != 0.0) t.push_back(i);
  }
  return t;
}

void validate_config(const SymMatrix& a, const SolverConfig& c) {
  if (c.s < 1 || c.s > a.dim()) {
    throw InputError("solver: sparsity level out of range");
  }
  if (!(c.tol_improve > 0.0)) {
    throw InputError("solver: tol_improve must be positive");
  }
  if (c.max_iter < 1) throw InputError("solver: max_iter must be positive");
}

/// Shared state of the coordinate-wise solvers: the current SO point with
/// its cached value and A*x, plus counters and the revisit tripwire.
struct CwState {
  const SymMatrix& a;
  const SolverConfig& cfg;
  SolveResult res;
  Vector ax;
  std::set<IndexSet> visited;

  CwState(const SymMatrix& a_, const SolverConfig& cfg_) : a(a_), cfg(cfg_) {}

  double f() const { return res.value; }

  /// Installs the SO point of t as the current iterate; returns false when
  /// the support was seen before (cycling would contradict strict ascent).
  bool move_to(const IndexSet& t, MoveKind kind) {
    SoPoint p = so_point(a, t);
    ++res.oracle_calls;
    res.x = std::move(p.x);
    res.value = quad_form(a, res.x);
    res.support = support_of(res.x);
    ax = a.multiply(res.x);
    if (kind != MoveKind::kInit) {
      ++res.iterations;
    }
    res.trace.push_back({res.iterations, res.value, kind});
    if (!visited.insert(res.support).second) {
      res.support_revisited = true;
      return false;
    }
    return true;
  }
};

IndexSet initial_support(const SymMatrix& a, const SolverConfig& c) {
  switch (c.init) {
    case SolverConfig::Init::kThresholding: {
      SolveResult t = thresholding_solve(a, c.s);
      return t.support;
    }
    case SolverConfig::Init::kSupport: {
      if (c.init_support.empty() ||
          static_cast<int>(c.init_support.size()) > c.s) {
        throw InputError("solver: initial support must satisfy 1 <= |T| <= s");
      }
      IndexSet t = c.init_support;
      std::sort(t.begin(), t.end());
      if (std::adjacent_find(t.begin(), t.end()) != t.end() || t.front() < 0 ||
          t.back() >= a.dim()) {
        throw InputError("solver: invalid initial support");
      }
      return t;
    }
    case SolverConfig::Init::kVector: {
      IndexSet t = support_of(c.init_vector);
      if (t.empty() || static_cast<int>(t.size()) > c.s ||
          static_cast<int>(c.init_vector.size()) != a.dim()) {
        throw InputError("solver: initial vector must be nonzero and s-sparse");
      }
      return t;
    }
  }
  throw InputError("solver: unknown init mode");
}

/// Approximate lambda_1 of A_TT for candidate scoring: power iteration warm
/// started from the current iterate plus a kick on the new coordinate.  The
/// Rayleigh quotient never overshoots the true eigenvalue, so acceptance
/// decisions made on scores are conservative.
double score_grown_support(const SymMatrix& a, const IndexSet& grown,
                           const Vector& x, int new_index) {
  SymMatrix sub = submatrix(a, grown);
  const int k = sub.dim();
  Vector v(k);
  double nrm = 0.0;
  for (int r = 0; r < k; ++r) {
    v[r] = grown[r] == new_index ? 0.5 : x[grown[r]];
    nrm += v[r] * v[r];
  }
  nrm = std::sqrt(nrm);
  for (double& e : v) e /= nrm;

  double lam = 0.0;
  for (int it = 0; it < 2000; ++it) {
    Vector w = sub.multiply(v);
    lam = 0.0;
    for (int r = 0; r < k; ++r) lam += w[r] * v[r];
    double r2 = 0.0;
    for (int r = 0; r < k; ++r) {
      double d = w[r] - lam * v[r];
      r2 += d * d;
    }
    if (std::sqrt(r2) <= 1e-11 * std::max(1.0, std::abs(lam))) break;
    double wn = 0.0;
    for (double e : w) wn += e * e;
    wn = std::sqrt(wn);
    if (wn == 0.0) break;
    for (int r = 0; r < k; ++r) v[r] = w[r] / wn;
  }
  return lam;
}

/// Upper bound on lambda_1 of the support grown by j: the top eigenvalue of
/// the 2x2 envelope [[lambda_1(A_TT), ||A_Tj||], [||A_Tj||, A_jj]].
double grown_support_bound(const SymMatrix& a, const IndexSet& t, double lam_t,
                           int j) {
  double b2 = 0.0;
  for (int i : t) b2 += a(i, j) * a(i, j);
  double d = a(j, j);
  double mid = 0.5 * (lam_t + d);
  double rad = std::sqrt(0.25 * (lam_t - d) * (lam_t - d) + b2);
  return mid + rad;
}

/// Step 1 of both coordinate-wise algorithms: greedy augmentation while the
/// support is below the sparsity budget.  Candidates are pruned with an
/// envelope bound (a candidate whose bound cannot beat the incumbent is never
/// priced), which preserves the argmax and its lowest-index tie rule.
/// Returns false if the iteration cap was hit.
bool augment_greedily(CwState& st) {
  const int n = st.a.dim();
  while (static_cast<int>(st.res.support.size()) < st.cfg.s) {
    if (st.res.iterations >= st.cfg.max_iter) {
      st.res.converged = false;
      return false;
    }
    const IndexSet& supp = st.res.support;
    double best_val = -std::numeric_limits<double>::infinity();
    int best_j = -1;
    std::vector<bool> in_supp(n, false);
    for (int i : supp) in_supp[i] = true;
    for (int j = 0; j < n; ++j) {
      if (in_supp[j]) continue;
      if (best_j >= 0 &&
          grown_support_bound(st.a, supp, st.f(), j) <= best_val) {
        continue;
      }
      IndexSet grown = supp;
      grown.insert(std::lower_bound(grown.begin(), grown.end(), j), j);
      double val = score_grown_support(st.a, grown, st.res.x, j);
      ++st.res.oracle_calls;
      if (val > best_val) {
        best_val = val;
        best_j = j;
      }
    }
    if (best_j < 0 || best_val <= st.f() + st.cfg.tol_improve) {
      return true;  // no improving augmentation; fall through to swaps
    }
    IndexSet grown = supp;
    grown.insert(std::lower_bound(grown.begin(), grown.end(), best_j), best_j);
    if (!st.move_to(grown, MoveKind::kAdd)) return false;
  }
  return true;
}

/// f_{i,j} for the current iterate from cached f(x) and A*x.
double swap_candidate_value(const CwState& st, int i, int j) {
  const double xi = st.res.x[i];
  const double base =
      st.f() - 2.0 * xi * st.ax[i] + st.a(i, i) * xi * xi;
  const double alpha = std::abs(xi);
  const double lin = st.ax[j] - st.a(j, i) * xi;
  const double quad = st.a(j, j) * alpha * alpha;
  return base + 2.0 * alpha * std::abs(lin) + quad;
}

IndexSet swapped_support(const IndexSet& supp, int i, int j) {
  IndexSet t;
  t.reserve(supp.size());
  for (int k : supp) {
    if (k != i) t.push_back(k);
  }
  t.insert(std::lower_bound(t.begin(), t.end(), j), j);
  return t;
}

SolveResult run_cw(const SymMatrix& a, const SolverConfig& cfg, bool partial) {
  validate_config(a, cfg);
  auto t0 = Clock::now();
  CwState st(a, cfg);
  if (!st.move_to(initial_support(a, cfg), MoveKind::kInit)) {
    st.res.elapsed_ms = elapsed_ms_since(t0);
    return std::move(st.res);
  }

  const int n = a.dim();
  bool running = true;
  while (running) {
    if (!augment_greedily(st)) break;
    if (st.res.iterations >= cfg.max_iter) {
      st.res.converged = false;
      break;
    }

    const IndexSet supp = st.res.support;
    std::vector<bool> in_supp(n, false);
    for (int i : supp) in_supp[i] = true;
    IndexSet cosupp;
    cosupp.reserve(n - supp.size());
    for (int j = 0; j < n; ++j) {
      if (!in_supp[j]) cosupp.push_back(j);
    }

    bool accepted = false;
    if (!partial) {
      // GCW: price every (i, j) pair, take the best, lowest pair on ties.
      double best = -std::numeric_limits<double>::infinity();
      int bi = -1, bj = -1;
      for (int i : supp) {
        for (int j : cosupp) {
          double val = swap_candidate_value(st, i, j);
          ++st.res.swap_evals;
          if (val > best) {
            best = val;
            bi = i;
            bj = j;
          }
        }
      }
      if (bi >= 0 && best > st.f() + cfg.tol_improve) {
        if (!st.move_to(swapped_support(supp, bi, bj), MoveKind::kSwap)) break;
        accepted = true;
      }
    } else {
      // PCW: examine removal candidates in increasing |x_i| (index on ties)
      // and take the first one whose best swap improves.
      IndexSet order = supp;
      std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
        return std::abs(st.res.x[l]) < std::abs(st.res.x[r]);
      });
      for (int i : order) {
        double best = -std::numeric_limits<double>::infinity();
        int bj = -1;
        for (int j : cosupp) {
          double val = swap_candidate_value(st, i, j);
          ++st.res.swap_evals;
          if (val > best) {
            best = val;
            bj = j;
          }
        }
        if (bj >= 0 && best > st.f() + cfg.tol_improve) {
          if (!st.move_to(swapped_support(supp, i, bj), MoveKind::kSwap)) {
            running = false;
          }
          accepted = true;
          break;
        }
      }
      if (!running) break;
    }

    if (!accepted) break;  // all swaps exhausted: CW-maximal
    if (st.res.iterations >= cfg.max_iter) {
      st.res.converged = false;
      break;
    }
  }

  st.res.elapsed_ms = elapsed_ms_since(t0);
  return std::move(st.res);
}

}  // namespace

SolveResult thresholding_solve(const SymMatrix& a, int s,
                               const EigenPair* precomputed) {
  if (s < 1 || s > a.dim()) throw InputError("thresholding_solve: invalid s");
  auto t0 = Clock::now();
  SolveResult res;
  EigenPair e = precomputed ? *precomputed : principal_eigenpair(a);
  if (!precomputed) ++res.oracle_calls;
  IndexSet t = top_support_first(e.vector, s);
  SoPoint p = so_point(a, t);
  ++res.oracle_calls;
  res.x = std::move(p.x);
  res.value = quad_form(a, res.x);
  res.support = support_of(res.x);
  res.trace.push_back({0, res.value, MoveKind::kInit});
  res.elapsed_ms = elapsed_ms_since(t0);
  return res;
}

SolveResult congradu_solve(const SymMatrix& a, const SolverConfig& cfg) {
  validate_config(a, cfg);
  auto t0 = Clock::now();
  SolveResult res;

  Vector x;
  if (cfg.init == SolverConfig::Init::kVector) {
    x = cfg.init_vector;
    IndexSet supp = support_of(x);
    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    if (supp.empty() || static_cast<int>(supp.size()) > cfg.s ||
        static_cast<int>(x.size()) != a.dim() || nrm > 1.0 + 1e-9) {
      throw InputError("congradu_solve: infeasible initial vector");
    }
  } else {
    SoPoint p = so_point(a, initial_support(a, cfg));
    ++res.oracle_calls;
    x = std::move(p.x);
  }

  double f = quad_form(a, x);
  res.trace.push_back({0, f, MoveKind::kInit});
  while (true) {
    if (res.iterations >= cfg.max_iter) {
      res.converged = false;
      break;
    }
    Vector g = gradient(a, x);
    if (support_of(g).empty()) {
      res.degenerate = true;
      break;
    }
    IndexSet t = top_support_first(g, cfg.s);
    double gt = 0.0;
    for (int i : t) gt += g[i] * g[i];
    gt = std::sqrt(gt);
    Vector y(a.dim(), 0.0);
    for (int i : t) y[i] = g[i] / gt;
    double fy = quad_form(a, y);
    if (fy <= f + cfg.tol_improve) break;
    x = std::move(y);
    f = fy;
    ++res.iterations;
    res.trace.push_back({res.iterations, f, MoveKind::kStep});
  }

  SoPoint p = renormalize(a, x);
  ++res.oracle_calls;
  res.x = std::move(p.x);
  res.value = quad_form(a, res.x);
  res.support = support_of(res.x);
  if (res.value > res.trace.back().value) {
    res.trace.push_back({res.iterations, res.value, MoveKind::kStep});
  } else {
    // The oracle cannot do worse than the point it renormalizes; keep the
    // better of the two in pathological rounding cases.
    if (res.value < f) {
      res.x = std::move(x);
      res.value = quad_form(a, res.x);
      res.support = support_of(res.x);
    }
  }
  res.elapsed_ms = elapsed_ms_since(t0);
  return res;
}

SolveResult gcw_solve(const SymMatrix& a, const SolverConfig& cfg) {
  return run_cw(a, cfg, /*partial=*/false);
}

SolveResult pcw_solve(const SymMatrix& a, const SolverConfig& cfg) {
  return run_cw(a, cfg, /*partial=*/true);
}

std::vector<SolveResult> pcw_path(const SymMatrix& a,
                                  const std::vector<int>& s_list, bool warm,
                                  const SolverConfig& base) {
  if (s_list.empty()) throw InputError("pcw_path: empty sparsity list");
  for (std::size_t i = 1; i < s_list.size(); ++i) {
    if (s_list[i] <= s_list[i - 1]) {
      throw InputError("pcw_path: sparsity levels must be strictly increasing");
    }
  }
  std::vector<SolveResult> out;
  out.reserve(s_list.size());
  // One dominant eigensolve serves every cold thresholding init.
  EigenPair top = principal_eigenpair(a);
  IndexSet prev_support;
  for (int s : s_list) {
    SolverConfig cfg = base;
    cfg.s = s;
    if (warm && !prev_support.empty()) {
      cfg.init = SolverConfig::Init::kSupport;
      cfg.init_support = prev_support;
    } else {
      SolveResult thr = thresholding_solve(a, s, &top);
      cfg.init = SolverConfig::Init::kSupport;
      cfg.init_support = thr.support;
    }
    out.push_back(pcw_solve(a, cfg));
    prev_support = out.back().support;
  }
  return out;
}

double explained_variability(const SymMatrix& a, std::span<const double> x,
                             double lambda1) {
  if (!(lambda1 > 0.0)) {
    throw InputError("explained_variability: lambda_1 must be positive");
  }
  return quad_form(a, x) / lambda1;
}

double explained_variability(const SymMatrix& a, std::span<const double> x) {
  return explained_variability(a, x, principal_eigenpair(a).value);
}

}  // namespace spca
