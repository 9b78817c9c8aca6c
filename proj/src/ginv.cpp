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

#include "mginv/ginv.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include <Eigen/LU>

#include "mginv/errors.hpp"

namespace mginv {

namespace {

void require_square(const Tensor3& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionError(std::string(what) + ": tensor must have square frontal slices");
  }
}

// Rank decisions on every slice are scaled by the largest slice, so a slice
// that is zero up to transform rounding counts as zero.
double slice_scale(const TransformedTensor& a_hat, double floor) {
  double scale = floor;
  for (const auto& s : a_hat.slices()) scale = std::max(scale, spectral_norm(s));
  return scale;
}

int index_of_slices(const TransformedTensor& a_hat, const ToleranceConfig& tol, double scale) {
  int k = 0;
  for (const auto& s : a_hat.slices()) k = std::max(k, matrix_index(s, tol, scale));
  return k;
}

std::vector<CoreNilpotentFactors> split_slices(const TransformedTensor& a_hat,
                                               const ToleranceConfig& tol, int& k) {
  const double scale = slice_scale(a_hat, tol.reference_norm);
  k = index_of_slices(a_hat, tol, scale);
  std::vector<CoreNilpotentFactors> factors;
  factors.reserve(static_cast<std::size_t>(a_hat.tubes()));
  for (Index i = 0; i < a_hat.tubes(); ++i) {
    try {
      factors.push_back(core_nilpotent_decompose(a_hat.slice(i), tol, k, scale));
    } catch (const NumericalError& e) {
      throw NumericalError("slice " + std::to_string(i) + ": " + e.what());
    }
  }
  return factors;
}

// Canonical GD inverse of every transformed slice.
std::vector<Matrix> gd_slices(const TransformedTensor& a_hat, const ToleranceConfig& tol) {
  int k = 0;
  const auto factors = split_slices(a_hat, tol, k);
  std::vector<Matrix> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(gd_from_factors(f, tol));
  return out;
}

std::vector<Matrix> mp_slices(const TransformedTensor& a_hat, const ToleranceConfig& tol) {
  const double scale = slice_scale(a_hat, tol.reference_norm);
  std::vector<Matrix> out;
  for (const auto& s : a_hat.slices()) out.push_back(mp_inverse_matrix(s, tol, scale));
  return out;
}

}  // namespace

Tensor3 TensorCoreNilpotent::block_tensor(const TransformMatrix& m) const {
  std::vector<Matrix> blocks;
  blocks.reserve(factors.size());
  for (const auto& f : factors) {
    const Index n = f.p.rows();
    Matrix d = Matrix::Zero(n, n);
    d.topLeftCorner(f.u.rows(), f.u.cols()) = f.u;
    d.bottomRightCorner(f.n_part.rows(), f.n_part.cols()) = f.n_part;
    blocks.push_back(std::move(d));
  }
  return inverse_transform(TransformedTensor(std::move(blocks)), m);
}

Tensor3 TensorCoreNilpotent::reconstruct(const TransformMatrix& m) const {
  const Tensor3 mid = block_tensor(m);
  return m_product({p, mid, p_inverse}, m);
}

double transform_scale(const Tensor3& a, const TransformMatrix& m) {
  return slice_scale(transform(a, m), 0.0);
}

int tensor_index(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol) {
  require_square(a, "tensor_index");
  const TransformedTensor a_hat = transform(a, m);
  return index_of_slices(a_hat, tol, slice_scale(a_hat, tol.reference_norm));
}

TensorCoreNilpotent tensor_core_nilpotent(const Tensor3& a, const TransformMatrix& m,
                                          const ToleranceConfig& tol) {
  require_square(a, "tensor_core_nilpotent");
  TensorCoreNilpotent out;
  out.factors = split_slices(transform(a, m), tol, out.k);
  std::vector<Matrix> p_hat;
  std::vector<Matrix> p_inv_hat;
  for (const auto& f : out.factors) {
    p_hat.push_back(f.p);
    p_inv_hat.push_back(f.p_inverse);
  }
  out.p = inverse_transform(TransformedTensor(std::move(p_hat)), m);
  out.p_inverse = inverse_transform(TransformedTensor(std::move(p_inv_hat)), m);
  return out;
}

Tensor3 mp_inverse(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol) {
  return inverse_transform(TransformedTensor(mp_slices(transform(a, m), tol)), m);
}

Tensor3 drazin_inverse(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol) {
  require_square(a, "drazin_inverse");
  int k = 0;
  const auto factors = split_slices(transform(a, m), tol, k);
  std::vector<Matrix> out;
  for (const auto& f : factors) out.push_back(drazin_from_factors(f));
  return inverse_transform(TransformedTensor(std::move(out)), m);
}

Tensor3 gd_inverse(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol) {
  require_square(a, "gd_inverse");
  return inverse_transform(TransformedTensor(gd_slices(transform(a, m), tol)), m);
}

Tensor3 gdmp_inverse(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol) {
  require_square(a, "gdmp_inverse");
  const TransformedTensor a_hat = transform(a, m);
  std::vector<Matrix> out = gd_slices(a_hat, tol);
  const std::vector<Matrix> pinv = mp_slices(a_hat, tol);
  for (Index i = 0; i < a_hat.tubes(); ++i) out[i] = out[i] * a_hat.slice(i) * pinv[i];
  return inverse_transform(TransformedTensor(std::move(out)), m);
}

Tensor3 gdstar_inverse(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol) {
  require_square(a, "gdstar_inverse");
  const TransformedTensor a_hat = transform(a, m);
  std::vector<Matrix> out = gd_slices(a_hat, tol);
  for (Index i = 0; i < a_hat.tubes(); ++i) {
    out[i] = out[i] * a_hat.slice(i) * a_hat.slice(i).adjoint();
  }
  return inverse_transform(TransformedTensor(std::move(out)), m);
}

Tensor3 tensor_inverse(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol) {
  require_square(a, "tensor_inverse");
  const TransformedTensor a_hat = transform(a, m);
  const double scale = slice_scale(a_hat, tol.reference_norm);
  std::vector<Matrix> out;
  for (Index i = 0; i < a_hat.tubes(); ++i) {
    const Matrix& s = a_hat.slice(i);
    if (numerical_rank(s, tol, scale) < s.rows()) {
      throw SingularError("transformed slice " + std::to_string(i) + " is singular", i);
    }
    out.push_back(s.partialPivLu().inverse());
  }
  return inverse_transform(TransformedTensor(std::move(out)), m);
}

}  // namespace mginv
