// Copyright 2026 The mginv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace mginv {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

// Shape (η1, η2, η3) of an order-3 tensor: rows, columns, frontal slices.
struct Dims {
  Index rows = 0;
  Index cols = 0;
  Index tubes = 0;

  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Dense complex order-3 tensor stored as η3 frontal slices of size η1×η2.
///
/// Entry (i, j, k) lives in row i, column j of frontal slice k. All indices
/// are 0-based. Every dimension is strictly positive.
class Tensor3 {
 public:
  Tensor3() = default;

  // Zero tensor of the given shape.
  Tensor3(Index rows, Index cols, Index tubes);
  explicit Tensor3(Dims dims) : Tensor3(dims.rows, dims.cols, dims.tubes) {}

  // Builds a tensor from frontal slices; all slices must share a shape.
  static Tensor3 from_slices(std::vector<Matrix> slices);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index tubes() const { return static_cast<Index>(slices_.size()); }
  Dims dims() const { return {rows_, cols_, tubes()}; }
  Index size() const { return rows_ * cols_ * tubes(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return slices_.empty(); }

  Complex& operator()(Index i, Index j, Index k) { return slices_[k](i, j); }
  const Complex& operator()(Index i, Index j, Index k) const {
    return slices_[k](i, j);
  }

  const Matrix& slice(Index k) const { return slices_[k]; }
  Matrix& slice(Index k) { return slices_[k]; }
  std::span<const Matrix> slices() const { return slices_; }

  double frobenius_norm() const;

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  Tensor3& operator*=(Complex scale);

  friend Tensor3 operator+(Tensor3 lhs, const Tensor3& rhs) { return lhs += rhs; }
  friend Tensor3 operator-(Tensor3 lhs, const Tensor3& rhs) { return lhs -= rhs; }
  friend Tensor3 operator*(Complex s, Tensor3 t) { return t *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b);

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Matrix> slices_;
};

// ‖lhs − rhs‖_F / (1 + ‖rhs‖_F). Throws DimensionError on shape mismatch.
double relative_residual(const Tensor3& lhs, const Tensor3& rhs);
double relative_residual(const Matrix& lhs, const Matrix& rhs);

/// Mode-3 unfolding: an η3 × (η1·η2) matrix with
/// result(k, j·η1 + i) = a(i, j, k), i.e. lateral slices squeezed,
/// transposed, and concatenated left to right.
Matrix mode3_unfold(const Tensor3& a);

// Inverse of mode3_unfold for a tensor with the given row/column counts.
Tensor3 mode3_fold(const Matrix& unfolded, Index rows, Index cols);

// a ×₃ n: every mode-3 fiber a(i, j, :) is left-multiplied by n (J×η3).
Tensor3 mode3_product(const Tensor3& a, const Matrix& n);

}  // namespace mginv
