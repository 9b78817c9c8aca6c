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

#include "support.hpp"

#include <algorithm>
#include <Eigen/Dense>
#include <Eigen/QR>

#include "mginv/io.hpp"

namespace mginv::testing {

std::string fixture_path(const std::string& name) {
  return std::string(MGINV_TEST_DATA_DIR) + "/" + name + ".json";
}

Tensor3 load_fixture_tensor(const std::string& name) {
  return io::read_tensor_file(fixture_path(name));
}

Matrix load_fixture_matrix(const std::string& name) {
  return io::read_matrix_file(fixture_path(name));
}

Matrix random_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix out(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) out(i, j) = Complex(g(rng), g(rng));
  }
  return out;
}

Tensor3 random_tensor(Index rows, Index cols, Index tubes, Rng& rng) {
  std::vector<Matrix> slices;
  for (Index k = 0; k < tubes; ++k) slices.push_back(random_matrix(rows, cols, rng));
  return Tensor3::from_slices(std::move(slices));
}

Matrix random_unitary(Index n, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, rng));
  return qr.householderQ() * Matrix::Identity(n, n);
}

Matrix well_conditioned(Index n, Rng& rng) {
  std::uniform_real_distribution<double> s(1.0, 3.0);
  Matrix d = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = s(rng);
  return random_unitary(n, rng) * d * random_unitary(n, rng);
}

std::vector<Matrix> naive_hat(const Tensor3& a, const Matrix& m) {
  std::vector<Matrix> hat;
  for (Index i = 0; i < m.rows(); ++i) {
    Matrix s = Matrix::Zero(a.rows(), a.cols());
    for (Index l = 0; l < a.tubes(); ++l) {
      for (Index c = 0; c < a.cols(); ++c) {
        for (Index r = 0; r < a.rows(); ++r) s(r, c) += m(i, l) * a(r, c, l);
      }
    }
    hat.push_back(std::move(s));
  }
  return hat;
}

Tensor3 naive_unhat(const std::vector<Matrix>& hat, const Matrix& m) {
  const Matrix minv = m.fullPivLu().inverse();
  const Tensor3 stacked = Tensor3::from_slices(hat);
  return Tensor3::from_slices(naive_hat(stacked, minv));
}

Tensor3 naive_m_product(const Tensor3& a, const Tensor3& b, const Matrix& m) {
  const auto ha = naive_hat(a, m);
  const auto hb = naive_hat(b, m);
  std::vector<Matrix> hc;
  for (std::size_t i = 0; i < ha.size(); ++i) {
    Matrix c = Matrix::Zero(ha[i].rows(), hb[i].cols());
    for (Index r = 0; r < c.rows(); ++r) {
      for (Index q = 0; q < c.cols(); ++q) {
        for (Index t = 0; t < ha[i].cols(); ++t) c(r, q) += ha[i](r, t) * hb[i](t, q);
      }
    }
    hc.push_back(std::move(c));
  }
  return naive_unhat(hc, m);
}

Tensor3 circular_tproduct(const Tensor3& a, const Tensor3& b) {
  const Index n = a.tubes();
  Tensor3 c(a.rows(), b.cols(), n);
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) c.slice(k) += a.slice(l) * b.slice(((k - l) % n + n) % n);
  }
  return c;
}

Matrix cod_pinv(const Matrix& a, double threshold) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  cod.setThreshold(threshold);
  return cod.pseudoInverse();
}

Matrix drazin_limit(const Matrix& a, int k) {
  Matrix ak = Matrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) ak = ak * a;
  const Matrix a2k1 = ak * ak * a;
  return ak * cod_pinv(a2k1) * ak;
}

Tensor3 drazin_limit(const Tensor3& a, const Matrix& m, int k) {
  auto hat = naive_hat(a, m);
  for (auto& s : hat) s = drazin_limit(s, k);
  return naive_unhat(hat, m);
}

namespace {

// Jordan-form nilpotent matrix of the given size whose largest block has
// exactly `index` rows.
Matrix jordan_nilpotent(Index size, int index) {
  Matrix j = Matrix::Zero(size, size);
  Index start = 0;
  while (start < size) {
    const Index block = std::min<Index>(index, size - start);
    for (Index i = 0; i + 1 < block; ++i) j(start + i, start + i + 1) = 1.0;
    start += block;
  }
  return j;
}

}  // namespace

KnownSplit matrix_with_index(Index size, int index, Rng& rng) {
  KnownSplit s;
  s.index = index;
  const Index nil = index == 0 ? 0 : std::max<Index>(index, 1);
  const Index core = size - nil;
  s.p = well_conditioned(size, rng);
  s.u = core > 0 ? well_conditioned(core, rng) : Matrix(0, 0);
  if (nil > 0) {
    const Matrix t = well_conditioned(nil, rng);
    s.n = t * jordan_nilpotent(nil, index) * t.inverse();
  } else {
    s.n = Matrix(0, 0);
  }
  Matrix block = Matrix::Zero(size, size);
  block.topLeftCorner(core, core) = s.u;
  block.bottomRightCorner(nil, nil) = s.n;
  s.a = s.p * block * s.p.inverse();
  return s;
}

KnownTensor tensor_with_index(Index size, Index tubes, int index, const Matrix& m, Rng& rng) {
  KnownTensor t;
  t.index = index;
  std::uniform_int_distribution<int> pick(0, index);
  std::vector<Matrix> hat;
  for (Index i = 0; i < tubes; ++i) {
    const int slice_index = i == 0 ? index : pick(rng);
    t.slices.push_back(matrix_with_index(size, slice_index, rng));
    hat.push_back(t.slices.back().a);
  }
  t.a = naive_unhat(hat, m);
  return t;
}

Matrix random_gd_candidate(const KnownSplit& s, Rng& rng, double w_scale) {
  const Index core = s.u.rows();
  const Index nil = s.n.rows();
  Matrix block = Matrix::Zero(core + nil, core + nil);
  if (core > 0) block.topLeftCorner(core, core) = s.u.inverse();
  if (nil > 0) {
    const Matrix np = cod_pinv(s.n);
    const Matrix w = w_scale * random_matrix(nil, nil, rng);
    block.bottomRightCorner(nil, nil) = np + w - np * s.n * w * s.n * np;
  }
  return s.p * block * s.p.inverse();
}

Tensor3 random_gd_candidate(const KnownTensor& t, const Matrix& m, Rng& rng, double w_scale) {
  std::vector<Matrix> hat;
  for (const auto& s : t.slices) hat.push_back(random_gd_candidate(s, rng, w_scale));
  return naive_unhat(hat, m);
}

Tensor3 polynomial(const Tensor3& a, const std::vector<Complex>& c, const TransformMatrix& m) {
  Tensor3 out(a.dims());
  Tensor3 power = identity_tensor(a.rows(), a.tubes(), m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) power = m_product(power, a, m);
    out += c[i] * power;
  }
  return out;
}

namespace {

Matrix diag_signs(Index n, Rng& rng, bool allow_zero) {
  std::uniform_int_distribution<int> pick(allow_zero ? -1 : 0, 1);
  Matrix d = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const int v = pick(rng);
    d(i, i) = allow_zero ? v : (v == 0 ? -1 : 1);
  }
  return d;
}

}  // namespace

Matrix hermitian_tripotent(Index n, Rng& rng, bool allow_zero) {
  const Matrix v = random_unitary(n, rng);
  return v * diag_signs(n, rng, allow_zero) * v.adjoint();
}

std::pair<Tensor3, Tensor3> block_disjoint_pair(Index n, Index tubes, const Matrix& m,
                                                int max_index, bool hermitian, Rng& rng) {
  std::uniform_int_distribution<Index> split(1, n - 1);
  std::vector<Matrix> ha, hb;
  for (Index i = 0; i < tubes; ++i) {
    const Index n1 = split(rng);
    const Index n2 = n - n1;
    auto block = [&](Index size) {
      if (hermitian) return hermitian_tripotent(size, rng);
      std::uniform_int_distribution<int> pick(0, std::min<int>(max_index, static_cast<int>(size)));
      return matrix_with_index(size, pick(rng), rng).a;
    };
    const Matrix q = random_unitary(n, rng);
    Matrix a = Matrix::Zero(n, n);
    Matrix b = Matrix::Zero(n, n);
    a.topLeftCorner(n1, n1) = block(n1);
    b.bottomRightCorner(n2, n2) = block(n2);
    ha.push_back(q * a * q.adjoint());
    hb.push_back(q * b * q.adjoint());
  }
  return {naive_unhat(ha, m), naive_unhat(hb, m)};
}

std::pair<Tensor3, Tensor3> commuting_hermitian_pair(Index n, Index tubes, const Matrix& m,
                                                     bool involutions, Rng& rng) {
  std::vector<Matrix> ha, hb;
  for (Index i = 0; i < tubes; ++i) {
    const Matrix v = random_unitary(n, rng);
    ha.push_back(v * diag_signs(n, rng, !involutions) * v.adjoint());
    hb.push_back(v * diag_signs(n, rng, !involutions) * v.adjoint());
  }
  return {naive_unhat(ha, m), naive_unhat(hb, m)};
}

}  // namespace mginv::testing
