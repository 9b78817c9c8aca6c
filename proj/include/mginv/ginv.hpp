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

#include <vector>

#include "mginv/matrix_kernels.hpp"
#include "mginv/tensor.hpp"
#include "mginv/transform.hpp"

namespace mginv {

/// Tensor core-nilpotent decomposition 𝒜 = 𝒫 ⋆ matt⁻¹[diag(U⁽ⁱ⁾, N⁽ⁱ⁾)] ⋆ 𝒫⁻¹.
///
/// factors[i] holds the split of transformed slice i; every slice uses the
/// tensor index k as the exponent for its range/null-space bases.
struct TensorCoreNilpotent {
  Tensor3 p;
  Tensor3 p_inverse;
  std::vector<CoreNilpotentFactors> factors;
  int k = 0;

  // The middle tensor matt⁻¹[diag(diag(U⁽ⁱ⁾, N⁽ⁱ⁾))].
  Tensor3 block_tensor(const TransformMatrix& m) const;
  // 𝒫 ⋆ block_tensor ⋆ 𝒫⁻¹.
  Tensor3 reconstruct(const TransformMatrix& m) const;
};

// max over transformed slices of matrix_index.
// Largest spectral norm over the transformed slices. Rank decisions on every
// slice are relative to this, or to tol.reference_norm when that is larger.
double transform_scale(const Tensor3& a, const TransformMatrix& m);

int tensor_index(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol = {});

TensorCoreNilpotent tensor_core_nilpotent(const Tensor3& a, const TransformMatrix& m,
                                          const ToleranceConfig& tol = {});

Tensor3 mp_inverse(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol = {});
Tensor3 drazin_inverse(const Tensor3& a, const TransformMatrix& m,
                       const ToleranceConfig& tol = {});

// Canonical GD inverse: nilpotent blocks get N⁻ = N†.
Tensor3 gd_inverse(const Tensor3& a, const TransformMatrix& m, const ToleranceConfig& tol = {});
// 𝒜^{GD} ⋆ 𝒜 ⋆ 𝒜†, formed slice-wise in the transform domain.
Tensor3 gdmp_inverse(const Tensor3& a, const TransformMatrix& m,
                     const ToleranceConfig& tol = {});
// 𝒜^{GD} ⋆ 𝒜 ⋆ 𝒜*, formed slice-wise in the transform domain.
Tensor3 gdstar_inverse(const Tensor3& a, const TransformMatrix& m,
                       const ToleranceConfig& tol = {});

// Ordinary inverse. Throws SingularError naming the first singular slice.
Tensor3 tensor_inverse(const Tensor3& a, const TransformMatrix& m,
                       const ToleranceConfig& tol = {});

}  // namespace mginv
