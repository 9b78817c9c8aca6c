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

#include "mginv/transform.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "mginv/errors.hpp"

namespace mginv {

TransformMatrix::TransformMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw DimensionError("transform matrix must be square and non-empty");
  }
  Eigen::JacobiSVD<Matrix> svd(m_);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smax > 0.0) || smin <= 1e-12 * smax) {
    throw SingularError("transform matrix is numerically singular (sigma_min/sigma_max = " +
                        std::to_string(smax > 0.0 ? smin / smax : 0.0) + ")");
  }
  condition_ = smax / smin;
  m_inverse_ = m_.partialPivLu().inverse();
  const Matrix check = m_ * m_inverse_ - Matrix::Identity(size(), size());
  if (check.cwiseAbs().maxCoeff() > 1e-10 * condition_) {
    throw NumericalError("transform matrix inverse failed its identity check");
  }
}

TransformMatrix TransformMatrix::identity(Index n) {
  return TransformMatrix(Matrix::Identity(n, n));
}

TransformMatrix TransformMatrix::normalized_dft(Index n) {
  if (n <= 0) throw DimensionError("DFT size must be positive");
  Matrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      // Reduce r*c modulo n first so large sizes keep full phase accuracy.
      const double phase = -2.0 * std::numbers::pi *
                           static_cast<double>((r * c) % n) / static_cast<double>(n);
      f(r, c) = std::polar(scale, phase);
    }
  }
  return TransformMatrix(std::move(f));
}

TransformedTensor::TransformedTensor(std::vector<Matrix> slices)
    : slices_(std::move(slices)) {
  for (const auto& s : slices_) {
    if (s.rows() != slices_.front().rows() || s.cols() != slices_.front().cols()) {
      throw DimensionError("transformed slices differ in shape");
    }
  }
}

Matrix TransformedTensor::matt() const {
  Matrix out = Matrix::Zero(rows() * tubes(), cols() * tubes());
  for (Index i = 0; i < tubes(); ++i) {
    out.block(i * rows(), i * cols(), rows(), cols()) = slices_[i];
  }
  return out;
}

TransformedTensor TransformedTensor::from_matt(const Matrix& block_diagonal,
                                               Index rows, Index cols, Index tubes) {
  if (block_diagonal.rows() != rows * tubes || block_diagonal.cols() != cols * tubes) {
    throw DimensionError("from_matt: block-diagonal matrix has the wrong shape");
  }
  std::vector<Matrix> slices;
  slices.reserve(static_cast<std::size_t>(tubes));
  for (Index i = 0; i < tubes; ++i) {
    slices.emplace_back(block_diagonal.block(i * rows, i * cols, rows, cols));
  }
  return TransformedTensor(std::move(slices));
}

namespace {

void require_transform_size(Index tubes, const TransformMatrix& m) {
  if (tubes != m.size()) {
    throw DimensionError("tensor has " + std::to_string(tubes) +
                         " frontal slices but the transform has size " +
                         std::to_string(m.size()));
  }
}

std::vector<Matrix> combine_slices(std::span<const Matrix> in, const Matrix& n) {
  std::vector<Matrix> out(static_cast<std::size_t>(n.rows()),
                          Matrix::Zero(in.front().rows(), in.front().cols()));
  for (Index r = 0; r < n.rows(); ++r) {
    for (Index l = 0; l < n.cols(); ++l) {
      if (n(r, l) != Complex(0.0)) out[r] += n(r, l) * in[l];
    }
  }
  return out;
}

void require_facewise(Dims a, Dims b) {
  if (a.tubes != b.tubes) throw DimensionError("facewise product: slice counts differ");
  if (a.cols != b.rows) throw DimensionError("facewise product: inner dimensions differ");
}

}  // namespace

TransformedTensor transform(const Tensor3& a, const TransformMatrix& m) {
  require_transform_size(a.tubes(), m);
  return TransformedTensor(combine_slices(a.slices(), m.matrix()));
}

Tensor3 inverse_transform(const TransformedTensor& a_hat, const TransformMatrix& m) {
  require_transform_size(a_hat.tubes(), m);
  return Tensor3::from_slices(combine_slices(a_hat.slices(), m.inverse()));
}

Tensor3 facewise_product(const Tensor3& a, const Tensor3& b) {
  require_facewise(a.dims(), b.dims());
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(a.tubes()));
  for (Index i = 0; i < a.tubes(); ++i) out.emplace_back(a.slice(i) * b.slice(i));
  return Tensor3::from_slices(std::move(out));
}

TransformedTensor facewise_product(const TransformedTensor& a, const TransformedTensor& b) {
  require_facewise(a.dims(), b.dims());
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(a.tubes()));
  for (Index i = 0; i < a.tubes(); ++i) out.emplace_back(a.slice(i) * b.slice(i));
  return TransformedTensor(std::move(out));
}

Tensor3 m_product(const Tensor3& a, const Tensor3& b, const TransformMatrix& m) {
  require_facewise(a.dims(), b.dims());
  return inverse_transform(facewise_product(transform(a, m), transform(b, m)), m);
}

Tensor3 m_product(std::initializer_list<std::reference_wrapper<const Tensor3>> chain,
                  const TransformMatrix& m) {
  if (chain.size() == 0) throw DimensionError("m_product: empty chain");
  auto it = chain.begin();
  TransformedTensor acc = transform(it->get(), m);
  for (++it; it != chain.end(); ++it) {
    const Tensor3& next = it->get();
    require_facewise(acc.dims(), next.dims());
    acc = facewise_product(acc, transform(next, m));
  }
  return inverse_transform(acc, m);
}

Tensor3 identity_tensor(Index n, Index tubes, const TransformMatrix& m) {
  require_transform_size(tubes, m);
  std::vector<Matrix> hat(static_cast<std::size_t>(tubes), Matrix::Identity(n, n));
  return inverse_transform(TransformedTensor(std::move(hat)), m);
}

Tensor3 map_slices(const Tensor3& a, const TransformMatrix& m,
                   const std::function<Matrix(const Matrix&, Index)>& fn) {
  const TransformedTensor a_hat = transform(a, m);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(a_hat.tubes()));
  for (Index i = 0; i < a_hat.tubes(); ++i) out.push_back(fn(a_hat.slice(i), i));
  return inverse_transform(TransformedTensor(std::move(out)), m);
}

Tensor3 conj_transpose(const Tensor3& a, const TransformMatrix& m) {
  return map_slices(a, m, [](const Matrix& s, Index) -> Matrix { return s.adjoint(); });
}

Tensor3 tensor_power(const Tensor3& a, int p, const TransformMatrix& m) {
  if (!a.is_square()) throw DimensionError("tensor_power: tensor must be square");
  if (p < 0) throw DimensionError("tensor_power: exponent must be nonnegative");
  return map_slices(a, m, [p](const Matrix& s, Index) -> Matrix {
    Matrix acc = Matrix::Identity(s.rows(), s.cols());
    Matrix base = s;
    for (int e = p; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      if (e > 1) base = base * base;
    }
    return acc;
  });
}

}  // namespace mginv
