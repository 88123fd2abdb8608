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
#include <span>

#include "spca/linalg.hpp"

namespace spca {

/// Default absolute tolerance for function-value comparisons in the
/// verifiers.  Callers should scale it for data whose objective values are
/// far from O(1).
inline constexpr double kConditionTol = 1e-9;

/// A concrete feasible move that certifies a condition failure.  The vector z
/// is always populated and independently re-checkable: f(z) exceeds f(x) for
/// every emitted witness.
struct Witness {
  enum class Kind {
    kVector,  // a better feasible point (linear-subproblem maximizer, SO point)
    kAdd,     // the SO point on support(x) u {j}
    kSwap,    // move the mass of coordinate i onto coordinate j with sign
  };
  Kind kind = Kind::kVector;
  Vector z;
  int i = -1;          // kSwap only
  int j = -1;          // kAdd, kSwap
  int sigma = 0;       // kSwap only: +1 or -1
  double value = 0.0;  // objective value achieved by the move
};

/// Outcome of a condition check.  slack is the margin by which the condition
/// holds (negative when it fails); holds == false implies a witness.
struct ConditionReport {
  bool holds = false;
  double slack = 0.0;
  std::optional<Witness> witness;
};

/// Support optimality: f(x) matches the best value attainable on the support
/// of x, and x sits on the unit sphere.  Requires x != 0 and ||x|| <= 1+tol.
ConditionReport is_support_optimal(const SymMatrix& a, std::span<const double> x,
                                   double tol = kConditionTol);

/// Co-stationarity: <grad f(x), v - x> <= 0 for every feasible v, checked in
/// closed form as ||grad_T f(x)|| <= grad f(x).x + tol with T a support of
/// the s largest gradient magnitudes (the norm is identical over all such
/// supports, so one suffices).  A zero gradient is trivially co-stationary.
/// Throws InputError naming the violated constraint for infeasible x.
ConditionReport is_co_stationary(const SymMatrix& a, std::span<const double> x,
                                 int s, double tol = kConditionTol);

/// Best objective value obtainable by zeroing coordinate i of x and placing
/// mass +-|x_i| on coordinate j, together with the achieving sign.  Requires
/// x_i != 0 and x_j == 0.  O(s) on top of one quadratic form.
struct SwapValue {
  double value = 0.0;
  int sigma = 1;
};
SwapValue swap_value(const SymMatrix& a, std::span<const double> x, int i, int j);

/// Coordinate-wise maximality for a unit-norm SO point x (the precondition is
/// checked and violated inputs are rejected): no feasible change of at most
/// two coordinates improves f.  Verified over the three move classes --
/// within-support changes are covered by support optimality, single-index
/// augmentations by the eigenvalue of the grown support (only when
/// ||x||_0 < s), swaps by the extreme-point values of swap_value.  The
/// witness is the lexicographically first violating move; slack is
/// f(x) minus the best move value over the full sweep.
ConditionReport is_cw_maximal(const SymMatrix& a, std::span<const double> x,
                              int s, double tol = kConditionTol);

/// Sampling check of the same neighbourhood: evaluates `samples` random
/// feasible two-coordinate changes plus all sign/extreme-point candidates and
/// reports the best found.  May miss a violation (sampling), never invents
/// one.  Deterministic for a fixed seed.
ConditionReport cw_check_bruteforce(const SymMatrix& a, std::span<const double> x,
                                    int s, int samples,
                                    double tol = kConditionTol,
                                    std::uint64_t seed = 0x5ca5ca);

}  // namespace spca
