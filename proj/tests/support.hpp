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

// Random generators and independent oracles shared by the test binaries.
// Oracles here avoid the library's transform and decomposition code paths.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mginv/tensor.hpp"
#include "mginv/transform.hpp"

namespace mginv::testing {

using Rng = std::mt19937_64;

Tensor3 load_fixture_tensor(const std::string& name);
Matrix load_fixture_matrix(const std::string& name);
std::string fixture_path(const std::string& name);

Matrix random_matrix(Index rows, Index cols, Rng& rng);
Tensor3 random_tensor(Index rows, Index cols, Index tubes, Rng& rng);
// Q·diag(s)·R with unitary Q, R and s uniform in [1, 3].
Matrix well_conditioned(Index n, Rng& rng);
Matrix random_unitary(Index n, Rng& rng);

// Loop-based mode-3 transform: hat[i] = Σ_l m(i, l)·a⁽ˡ⁾.
std::vector<Matrix> naive_hat(const Tensor3& a, const Matrix& m);
Tensor3 naive_unhat(const std::vector<Matrix>& hat, const Matrix& m);
Tensor3 naive_m_product(const Tensor3& a, const Tensor3& b, const Matrix& m);

// Tube-wise circular convolution, C⁽ᵏ⁾ = Σ_l A⁽ˡ⁾·B⁽⁽ᵏ⁻ˡ⁾ ᵐᵒᵈ ⁿ⁾.
Tensor3 circular_tproduct(const Tensor3& a, const Tensor3& b);

// Pseudoinverse via complete orthogonal decomposition.
Matrix cod_pinv(const Matrix& a, double threshold = 1e-10);
// Drazin inverse from the limit formula Aᵏ·(A^{2k+1})†·Aᵏ.
Matrix drazin_limit(const Matrix& a, int k);
Tensor3 drazin_limit(const Tensor3& a, const Matrix& m, int k);

// A matrix P·diag(U, N)·P⁻¹ with known factors; N has nilpotency index
// exactly `index` (0 means no nilpotent block).
struct KnownSplit {
  Matrix a, p, u, n;
  int index = 0;
};
KnownSplit matrix_with_index(Index size, int index, Rng& rng);

// Tensor whose transformed slices are KnownSplits; slice 0 attains `index`,
// the others have index in [0, index].
struct KnownTensor {
  Tensor3 a;
  std::vector<KnownSplit> slices;
  int index = 0;
};
KnownTensor tensor_with_index(Index size, Index tubes, int index, const Matrix& m, Rng& rng);

// P·diag(U⁻¹, N⁻)·P⁻¹ with a random {1}-inverse N⁻ = N† + W − N†·N·W·N·N†.
Matrix random_gd_candidate(const KnownSplit& s, Rng& rng, double w_scale = 0.5);
Tensor3 random_gd_candidate(const KnownTensor& t, const Matrix& m, Rng& rng,
                            double w_scale = 0.5);

// c[0]·ℐ + c[1]·𝒜 + c[2]·𝒜² + …
Tensor3 polynomial(const Tensor3& a, const std::vector<Complex>& c, const TransformMatrix& m);

// V·diag(s)·V^H with unitary V and s drawn from {−1, 0, 1}; equals its own
// pseudoinverse.
Matrix hermitian_tripotent(Index n, Rng& rng, bool allow_zero = true);

// Pair whose transformed slices are Q·diag(C, 0)·Q^H and Q·diag(0, D)·Q^H for
// a unitary Q per slice. With hermitian set, C and D are Hermitian tripotent;
// otherwise they have index at most max_index.
std::pair<Tensor3, Tensor3> block_disjoint_pair(Index n, Index tubes, const Matrix& m,
                                                int max_index, bool hermitian, Rng& rng);

// Commuting Hermitian tripotent pair V·diag(s)·V^H, V·diag(t)·V^H per slice.
// With involutions set, s and t have no zeros.
std::pair<Tensor3, Tensor3> commuting_hermitian_pair(Index n, Index tubes, const Matrix& m,
                                                     bool involutions, Rng& rng);

}  // namespace mginv::testing
