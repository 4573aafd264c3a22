// Copyright 2026 The Putlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "putlab/matrix.h"

#include <cassert>

namespace putlab {

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const size_t r = rows.size();
  const size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i) {
    assert(rows[i].size() == c);
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<double> Matrix::RowSums() const {
  std::vector<double> sums(rows_, 0.0);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
  }
  return sums;
}

std::vector<double> Matrix::ColSums() const {
  std::vector<double> sums(cols_, 0.0);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) sums[j] += (*this)(i, j);
  }
  return sums;
}

double Matrix::Sum() const {
  double total = 0.0;
  for (double v : data_) total += v;
  return total;
}

std::vector<std::vector<double>> Matrix::ToRows() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::Multiply(const Matrix& other) const {
  assert(cols_ == other.rows_);
  Matrix out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

}  // namespace putlab
