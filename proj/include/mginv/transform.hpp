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

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "mginv/tensor.hpp"

namespace mginv {

/// Invertible η3×η3 transform matrix with its inverse cached at construction.
///
/// Construction rejects matrices whose smallest singular value is at most
/// 1e-12 times the largest.
class TransformMatrix {
 public:
  explicit TransformMatrix(Matrix m);

  static TransformMatrix identity(Index n);
  // Unitary DFT matrix F(r, c) = exp(−2πi·r·c/n) / √n.
  static TransformMatrix normalized_dft(Index n);

  Index size() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Matrix& inverse() const { return m_inverse_; }
  // Ratio of extreme singular values of the matrix.
  double condition_estimate() const { return condition_; }

 private:
  Matrix m_;
  Matrix m_inverse_;
  double condition_ = 1.0;
};

/// A tensor in the transform domain: slice i holds L(𝒜)⁽ⁱ⁾ = (𝒜 ×₃ M)⁽ⁱ⁾.
class TransformedTensor {
 public:
  TransformedTensor() = default;
  explicit TransformedTensor(std::vector<Matrix> slices);

  Index rows() const { return slices_.empty() ? 0 : slices_.front().rows(); }
  Index cols() const { return slices_.empty() ? 0 : slices_.front().cols(); }
  Index tubes() const { return static_cast<Index>(slices_.size()); }
  Dims dims() const { return {rows(), cols(), tubes()}; }

  const Matrix& slice(Index i) const { return slices_[i]; }
  Matrix& slice(Index i) { return slices_[i]; }
  std::span<const Matrix> slices() const { return slices_; }

  // Block-diagonal matrix diag(Â⁽¹⁾, …, Â⁽η3⁾).
  Matrix matt() const;
  // Reads the diagonal blocks of a block-diagonal matrix back into slices.
  static TransformedTensor from_matt(const Matrix& block_diagonal, Index rows,
                                     Index cols, Index tubes);

 private:
  std::vector<Matrix> slices_;
};

TransformedTensor transform(const Tensor3& a, const TransformMatrix& m);
Tensor3 inverse_transform(const TransformedTensor& a_hat, const TransformMatrix& m);

// Slice-wise product: slice i of the result is a⁽ⁱ⁾·b⁽ⁱ⁾.
Tensor3 facewise_product(const Tensor3& a, const Tensor3& b);
TransformedTensor facewise_product(const TransformedTensor& a,
                                   const TransformedTensor& b);

// a ⋆_M b = L⁻¹(L(a) △ L(b)).
Tensor3 m_product(const Tensor3& a, const Tensor3& b, const TransformMatrix& m);

// Left-to-right M-product of a chain of at least one tensor.
Tensor3 m_product(std::initializer_list<std::reference_wrapper<const Tensor3>> chain,
                  const TransformMatrix& m);

// n×n×η3 tensor whose every transformed slice is the identity.
Tensor3 identity_tensor(Index n, Index tubes, const TransformMatrix& m);

// 𝒜*: transformed slices are conjugate transposes of those of 𝒜.
Tensor3 conj_transpose(const Tensor3& a, const TransformMatrix& m);

// 𝒜ᵖ under ⋆_M; p = 0 gives the identity tensor.
Tensor3 tensor_power(const Tensor3& a, int p, const TransformMatrix& m);

// Applies fn to every transformed slice and folds the results back.
Tensor3 map_slices(const Tensor3& a, const TransformMatrix& m,
                   const std::function<Matrix(const Matrix&, Index)>& fn);

}  // namespace mginv
