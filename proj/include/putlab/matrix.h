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

#ifndef PUTLAB_MATRIX_H_
#define PUTLAB_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace putlab {

// Dense row-major matrix of doubles. Small by construction (alphabets in
// this library have at most a few dozen symbols), so no expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Builds from nested rows; every row must have the same length (checked by
  // the callers that validate user input, asserted in debug builds here).
  static Matrix FromRows(const std::vector<std::vector<double>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t size() const { return data_.size(); }

  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  std::vector<double> RowSums() const;
  std::vector<double> ColSums() const;
  double Sum() const;

  std::vector<std::vector<double>> ToRows() const;

  // this (r x k) times other (k x c).
  Matrix Multiply(const Matrix& other) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace putlab

#endif  // PUTLAB_MATRIX_H_
