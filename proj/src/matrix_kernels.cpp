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

#include "mginv/matrix_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "mginv/errors.hpp"

namespace mginv {

namespace {

Index max_dim(const Matrix& a) { return std::max(a.rows(), a.cols()); }

// Columns of U whose singular values exceed cutoff.
Matrix range_basis_with_cutoff(const Matrix& a, double cutoff) {
  if (a.size() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of range(a^power), iterating Q ← basis(a·Q).
Matrix power_range_basis(const Matrix& a, int power, double cutoff) {
  Matrix q = Matrix::Identity(a.rows(), a.rows());
  for (int p = 0; p < power; ++p) {
    const Index before = q.cols();
    q = range_basis_with_cutoff(a * q, cutoff);
    if (q.cols() == before) break;  // range is invariant from here on
  }
  return q;
}

// Orthonormal basis of the orthogonal complement of range(q), q orthonormal.
Matrix orthogonal_complement(const Matrix& q, Index n) {
  if (q.cols() == 0) return Matrix::Identity(n, n);
  if (q.cols() == n) return Matrix(n, 0);
  Eigen::JacobiSVD<Matrix> svd(q, Eigen::ComputeFullU);
  return svd.matrixU().rightCols(n - q.cols());
}

double rank_cutoff(const Matrix& a, const ToleranceConfig& tol, double scale) {
  return tol.rank_tol_factor * static_cast<double>(max_dim(a)) *
         std::max(scale, tol.reference_norm);
}

Matrix block_diagonal(const Matrix& top, const Matrix& bottom) {
  const Index n = top.rows() + bottom.rows();
  Matrix out = Matrix::Zero(n, n);
  out.topLeftCorner(top.rows(), top.cols()) = top;
  out.bottomRightCorner(bottom.rows(), bottom.cols()) = bottom;
  return out;
}

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw DimensionError(std::string(what) + ": matrix must be square");
  }
}

}  // namespace

void ToleranceConfig::validate() const {
  if (!(rank_tol_factor > 0.0) || !(residual_tol > 0.0) || !(golden_tol > 0.0)) {
    throw ContractError("tolerances must be strictly positive");
  }
  if (!(reference_norm >= 0.0) || !std::isfinite(reference_norm)) {
    throw ContractError("reference norm must be finite and non-negative");
  }
}

Matrix CoreNilpotentFactors::reconstruct() const {
  return p * block_diagonal(u, n_part) * p_inverse;
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

Index numerical_rank(const Matrix& a, const ToleranceConfig& tol, double reference_norm) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_cutoff(a, tol, std::max(sv(0), reference_norm));
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

Matrix range_basis(const Matrix& a, const ToleranceConfig& tol, double reference_norm) {
  return range_basis_with_cutoff(
      a, rank_cutoff(a, tol, std::max(spectral_norm(a), reference_norm)));
}

std::vector<Index> power_ranks(const Matrix& a, int max_power, const ToleranceConfig& tol,
                               double reference_norm) {
  require_square(a, "power_ranks");
  std::vector<Index> ranks{a.rows()};
  const double cutoff = rank_cutoff(a, tol, std::max(spectral_norm(a), reference_norm));
  Matrix q = Matrix::Identity(a.rows(), a.rows());
  for (int p = 1; p <= max_power; ++p) {
    if (q.cols() > 0) q = range_basis_with_cutoff(a * q, cutoff);
    ranks.push_back(q.cols());
  }
  return ranks;
}

int matrix_index(const Matrix& a, const ToleranceConfig& tol, double reference_norm) {
  require_square(a, "matrix_index");
  const int n = static_cast<int>(a.rows());
  const auto ranks = power_ranks(a, n + 1, tol, reference_norm);
  for (int k = 0; k <= n; ++k) {
    if (ranks[k] == ranks[k + 1]) return k;
  }
  return n;
}

CoreNilpotentFactors core_nilpotent_decompose(const Matrix& a, const ToleranceConfig& tol,
                                              std::optional<int> power,
                                              double reference_norm) {
  require_square(a, "core_nilpotent_decompose");
  const Index n = a.rows();
  CoreNilpotentFactors f;
  f.k = matrix_index(a, tol, reference_norm);
  f.power = std::max(f.k, power.value_or(f.k));
  f.source_norm = std::max(spectral_norm(a), reference_norm);
  const double cutoff = rank_cutoff(a, tol, f.source_norm);

  const Matrix x = power_range_basis(a, f.power, cutoff);
  // N(A^k) is the orthogonal complement of R((A*)^k).
  const Matrix x_adj = power_range_basis(a.adjoint(), f.power, cutoff);
  if (x.cols() != x_adj.cols()) {
    throw NumericalError("core-nilpotent split: rank of A^k and (A*)^k disagree");
  }
  const Matrix y = orthogonal_complement(x_adj, n);
  const Index r = x.cols();

  f.p.resize(n, n);
  f.p << x, y;
  Eigen::FullPivLU<Matrix> lu(f.p);
  if (!lu.isInvertible()) {
    throw NumericalError("core-nilpotent split: range and null space bases are dependent");
  }
  f.p_inverse = lu.inverse();
  const Matrix t = f.p_inverse * a * f.p;
  f.u = t.topLeftCorner(r, r);
  f.n_part = t.bottomRightCorner(n - r, n - r);

  const double recon = relative_residual(f.reconstruct(), a);
  if (recon > tol.residual_tol) {
    throw NumericalError("core-nilpotent split: reconstruction residual " +
                         std::to_string(recon) + " exceeds tolerance");
  }
  if (r > 0) {
    Eigen::JacobiSVD<Matrix> svd(f.u);
    const double umin = svd.singularValues()(r - 1);
    if (umin <= cutoff) {
      throw NumericalError("core-nilpotent split: core block is numerically singular");
    }
  }
  if (n - r > 0 && f.power > 0) {
    Matrix np = Matrix::Identity(n - r, n - r);
    for (int e = 0; e < f.power; ++e) np = np * f.n_part;
    if (np.norm() > tol.residual_tol * (1.0 + std::max(a.norm(), f.source_norm))) {
      throw NumericalError("core-nilpotent split: nilpotent block is not nilpotent");
    }
  }
  return f;
}

Matrix mp_inverse_matrix(const Matrix& a, const ToleranceConfig& tol, double reference_norm) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_cutoff(a, tol, std::max(sv(0), reference_norm));
  Matrix out = Matrix::Zero(a.cols(), a.rows());
  for (Index i = 0; i < sv.size() && sv(i) > cutoff; ++i) {
    out += (svd.matrixV().col(i) / sv(i)) * svd.matrixU().col(i).adjoint();
  }
  return out;
}

Matrix one_inverse_nilpotent(const Matrix& n_part, const ToleranceConfig& tol,
                             double reference_norm) {
  require_square(n_part, "one_inverse_nilpotent");
  const Index d = n_part.rows();
  if (d == 0) return Matrix(0, 0);
  const double scale = std::max(reference_norm, spectral_norm(n_part));
  Matrix np = Matrix::Identity(d, d);
  for (Index e = 0; e < d; ++e) np = np * n_part;
  if (np.norm() > tol.residual_tol * (1.0 + std::pow(scale, static_cast<double>(d)))) {
    throw ContractError("one_inverse_nilpotent: block is not nilpotent");
  }
  return mp_inverse_matrix(n_part, tol, reference_norm);
}

Matrix gd_from_factors(const CoreNilpotentFactors& f, const ToleranceConfig& tol) {
  const Matrix u_inv = f.u.size() == 0 ? Matrix(0, 0) : Matrix(f.u.partialPivLu().inverse());
  return f.p * block_diagonal(u_inv, one_inverse_nilpotent(f.n_part, tol, f.source_norm)) *
         f.p_inverse;
}

Matrix drazin_from_factors(const CoreNilpotentFactors& f) {
  const Matrix u_inv = f.u.size() == 0 ? Matrix(0, 0) : Matrix(f.u.partialPivLu().inverse());
  return f.p * block_diagonal(u_inv, Matrix::Zero(f.n_part.rows(), f.n_part.cols())) *
         f.p_inverse;
}

Matrix matrix_gd_inverse(const Matrix& a, const ToleranceConfig& tol) {
  return gd_from_factors(core_nilpotent_decompose(a, tol), tol);
}

Matrix matrix_drazin_inverse(const Matrix& a, const ToleranceConfig& tol) {
  return drazin_from_factors(core_nilpotent_decompose(a, tol));
}

}  // namespace mginv
