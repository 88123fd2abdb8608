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
#include <string>
#include <vector>

#include "spca/linalg.hpp"

namespace spca {

enum class DatasetKind { kCovariance, kDataMatrix };

/// A loaded or generated problem datum: either a square symmetric covariance
/// (or correlation) matrix, or an observations-by-variables data matrix.
struct Dataset {
  DatasetKind kind = DatasetKind::kCovariance;
  Matrix matrix;
  std::vector<std::string> names;  // optional variable labels
  std::string source;

  /// The covariance matrix this dataset denotes: itself (symmetrized) for
  /// covariance kind, D^T D for data-matrix kind.
  SymMatrix to_covariance() const;
};

/// Parameters of the synthetic Gaussian data protocol: an m-by-n matrix of
/// i.i.d. N(0, 1/m) entries drawn from the counter-based stream in rng.hpp,
/// so one seed yields the same matrix on every platform.
struct RandomSpec {
  int m = 150;
  int n = 1;
  std::uint64_t seed = 0;
};

/// Numeric CSV, one optional header row of labels (detected by any
/// non-numeric token in the first row).  Covariance kind is validated for
/// symmetry within 1e-9 and symmetrized by averaging; asymmetry beyond the
/// tolerance, ragged rows and non-numeric cells raise ParseError with the
/// 1-based line and column.
Dataset load_csv(const std::string& path, DatasetKind kind);

/// Full-precision serialization (17 significant digits): load_csv of the
/// written file reproduces the entries exactly.
void save_csv(const Dataset& dataset, const std::string& path);

Dataset generate_gaussian(const RandomSpec& spec);

/// A small diagonal instance with a known co-stationary point that is not
/// coordinate-wise maximal: diag(2 ... 2, 0.5 ... 0.5) with n - s twos, the
/// uniform unit vector x on the 0.5-block, and the neighbour x_swap obtained
/// by moving one block coordinate onto the last 2-entry.  f(x) = 1/2 and
/// f(x_swap) = (s + 3) / (2 s).
struct Example1 {
  Dataset dataset;
  Vector x;
  Vector x_swap;
};
Example1 example1_instance(int n, int s);

}  // namespace spca
