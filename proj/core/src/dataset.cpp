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

#include "spca/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "spca/errors.hpp"
#include "spca/rng.hpp"

namespace spca {

namespace {

constexpr double kSymmetryTol = 1e-9;

bool parse_double(const std::string& token, double& out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end != begin && *end == '\0' && std::isfinite(out);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    std::size_t b = f.find_first_not_of(" \t");
    std::size_t e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return fields;
}

}  // namespace

SymMatrix Dataset::to_covariance() const {
  if (kind == DatasetKind::kDataMatrix) return covariance_from_data(matrix);
  // Symmetrize by averaging; load_csv already rejected asymmetry beyond
  // tolerance, and generated covariance matrices are exactly symmetric.
  const int n = matrix.rows;
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      e[static_cast<std::size_t>(i) * n + j] =
          0.5 * (matrix(i, j) + matrix(j, i));
    }
  }
  return SymMatrix(n, std::move(e));
}

Dataset load_csv(const std::string& path, DatasetKind kind) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path, 0, 0);

  Dataset ds;
  ds.kind = kind;
  ds.source = path;

  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  bool first_content_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (first_content_row) {
      bool numeric = true;
      double v;
      for (const auto& f : fields) {
        if (!parse_double(f, v)) {
          numeric = false;
          break;
        }
      }
      first_content_row = false;
      if (!numeric) {
        ds.names = fields;
        continue;  // header row of labels
      }
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double v;
      if (!parse_double(fields[c], v)) {
        throw ParseError("non-numeric cell '" + fields[c] + "'", lineno,
                         static_cast<int>(c + 1));
      }
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged row: expected " +
                           std::to_string(rows.front().size()) + " fields, got " +
                           std::to_string(row.size()),
                       lineno, 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no numeric rows in " + path, lineno, 0);

  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.front().size());
  ds.matrix = Matrix(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) ds.matrix(i, j) = rows[i][j];
  }

  if (kind == DatasetKind::kCovariance) {
    if (m != n) {
      throw ParseError("covariance matrix must be square, got " +
                           std::to_string(m) + "x" + std::to_string(n),
                       ds.names.empty() ? 1 : 2, 1);
    }
    const int header = ds.names.empty() ? 0 : 1;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double a = ds.matrix(i, j), b = ds.matrix(j, i);
        if (std::abs(a - b) > kSymmetryTol * std::max({1.0, std::abs(a), std::abs(b)})) {
          throw ParseError("asymmetric covariance entry", header + i + 1, j + 1);
        }
      }
    }
  }
  return ds;
}

void save_csv(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path, 0, 0);
  char buf[40];
  if (!dataset.names.empty()) {
    for (std::size_t i = 0; i < dataset.names.size(); ++i) {
      if (i) out << ',';
      out << dataset.names[i];
    }
    out << '\n';
  }
  for (int i = 0; i < dataset.matrix.rows; ++i) {
    for (int j = 0; j < dataset.matrix.cols; ++j) {
      if (j) out << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", dataset.matrix(i, j));
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw ParseError("write failed: " + path, 0, 0);
}

Dataset generate_gaussian(const RandomSpec& spec) {
  if (spec.m < 1 || spec.n < 1) throw InputError("generate_gaussian: invalid shape");
  Dataset ds;
  ds.kind = DatasetKind::kDataMatrix;
  ds.matrix = Matrix(spec.m, spec.n);
  ds.source = "gaussian(m=" + std::to_string(spec.m) +
              ",n=" + std::to_string(spec.n) +
              ",seed=" + std::to_string(spec.seed) + ")";
  const double sigma = 1.0 / std::sqrt(static_cast<double>(spec.m));
  for (int i = 0; i < spec.m; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      std::uint64_t k =
          static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(spec.n) + j;
      ds.matrix(i, j) = sigma * rng::normal(spec.seed, k);
    }
  }
  return ds;
}

Example1 example1_instance(int n, int s) {
  if (!(n > s && s > 0)) {
    throw InputError("example1_instance: need n > s > 0");
  }
  Example1 ex;
  ex.dataset.kind = DatasetKind::kCovariance;
  ex.dataset.source = "example1(n=" + std::to_string(n) + ",s=" + std::to_string(s) + ")";
  ex.dataset.matrix = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    ex.dataset.matrix(i, i) = i < n - s ? 2.0 : 0.5;
  }
  const double c = 1.0 / std::sqrt(static_cast<double>(s));
  ex.x.assign(n, 0.0);
  for (int i = n - s; i < n; ++i) ex.x[i] = c;
  ex.x_swap.assign(n, 0.0);
  ex.x_swap[n - s - 1] = c;
  for (int i = n - s + 1; i < n; ++i) ex.x_swap[i] = c;
  return ex;
}

}  // namespace spca
