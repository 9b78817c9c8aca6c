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

#include "mginv/tensor.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "mginv/errors.hpp"

namespace mginv {

namespace {

std::string shape_string(const Dims& d) {
  return std::to_string(d.rows) + "x" + std::to_string(d.cols) + "x" +
         std::to_string(d.tubes);
}

void require_same_dims(const Tensor3& a, const Tensor3& b, const char* what) {
  if (a.dims() != b.dims()) {
    throw DimensionError(std::string(what) + ": shape " + shape_string(a.dims()) +
                         " does not match " + shape_string(b.dims()));
  }
}

}  // namespace

Tensor3::Tensor3(Index rows, Index cols, Index tubes) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0 || tubes <= 0) {
    throw DimensionError("tensor dimensions must be positive, got " +
                         shape_string({rows, cols, tubes}));
  }
  slices_.assign(static_cast<std::size_t>(tubes), Matrix::Zero(rows, cols));
}

Tensor3 Tensor3::from_slices(std::vector<Matrix> slices) {
  if (slices.empty()) throw DimensionError("tensor needs at least one frontal slice");
  const Index rows = slices.front().rows();
  const Index cols = slices.front().cols();
  if (rows <= 0 || cols <= 0) throw DimensionError("frontal slices must be non-empty");
  for (const auto& s : slices) {
    if (s.rows() != rows || s.cols() != cols) {
      throw DimensionError("frontal slices differ in shape");
    }
  }
  Tensor3 t;
  t.rows_ = rows;
  t.cols_ = cols;
  t.slices_ = std::move(slices);
  return t;
}

double Tensor3::frobenius_norm() const {
  double sq = 0.0;
  for (const auto& s : slices_) sq += s.squaredNorm();
  return std::sqrt(sq);
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  require_same_dims(*this, other, "tensor addition");
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k] += other.slices_[k];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  require_same_dims(*this, other, "tensor subtraction");
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k] -= other.slices_[k];
  return *this;
}

Tensor3& Tensor3::operator*=(Complex scale) {
  for (auto& s : slices_) s *= scale;
  return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  if (a.dims() != b.dims()) return false;
  for (Index k = 0; k < a.tubes(); ++k) {
    if (a.slice(k) != b.slice(k)) return false;
  }
  return true;
}

double relative_residual(const Tensor3& lhs, const Tensor3& rhs) {
  require_same_dims(lhs, rhs, "residual");
  return (lhs - rhs).frobenius_norm() / (1.0 + rhs.frobenius_norm());
}

double relative_residual(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionError("residual: matrix shapes differ");
  }
  return (lhs - rhs).norm() / (1.0 + rhs.norm());
}

Matrix mode3_unfold(const Tensor3& a) {
  Matrix out(a.tubes(), a.rows() * a.cols());
  for (Index k = 0; k < a.tubes(); ++k) {
    for (Index j = 0; j < a.cols(); ++j) {
      for (Index i = 0; i < a.rows(); ++i) out(k, j * a.rows() + i) = a(i, j, k);
    }
  }
  return out;
}

Tensor3 mode3_fold(const Matrix& unfolded, Index rows, Index cols) {
  if (rows <= 0 || cols <= 0 || unfolded.cols() != rows * cols) {
    throw DimensionError("mode3_fold: column count must equal rows*cols");
  }
  Tensor3 out(rows, cols, unfolded.rows());
  for (Index k = 0; k < unfolded.rows(); ++k) {
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) out(i, j, k) = unfolded(k, j * rows + i);
    }
  }
  return out;
}

Tensor3 mode3_product(const Tensor3& a, const Matrix& n) {
  if (n.cols() != a.tubes()) {
    throw DimensionError("mode3_product: matrix has " + std::to_string(n.cols()) +
                         " columns, tensor has " + std::to_string(a.tubes()) +
                         " frontal slices");
  }
  std::vector<Matrix> slices(static_cast<std::size_t>(n.rows()),
                             Matrix::Zero(a.rows(), a.cols()));
  for (Index r = 0; r < n.rows(); ++r) {
    for (Index l = 0; l < a.tubes(); ++l) {
      if (n(r, l) != Complex(0.0)) slices[r] += n(r, l) * a.slice(l);
    }
  }
  return Tensor3::from_slices(std::move(slices));
}

}  // namespace mginv
