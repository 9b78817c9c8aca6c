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

#include <optional>

#include "mginv/tensor.hpp"

namespace mginv {

/// Numerical thresholds shared by every kernel.
struct ToleranceConfig {
  // Singular values at or below rank_tol_factor · max(m, n) · σ_max count as zero.
  double rank_tol_factor = 1e-12;
  // Bound on relative residuals of defining equations.
  double residual_tol = 1e-8;
  // Bound used when checking values printed to four decimals.
  double golden_tol = 5e-3;
  // Floor on the scale that rank decisions are relative to. Set it to the
  // operands' scale when the input is a computed sum or product that may vanish.
  double reference_norm = 0.0;

  // Throws ContractError unless the tolerances are strictly positive and
  // reference_norm is finite and non-negative.
  void validate() const;
};

/// Core-nilpotent split A = P · diag(U, N) · P⁻¹ with U invertible and N
/// nilpotent. P = [X | Y] where X and Y are orthonormal bases of the range and
/// null space of A^k.
struct CoreNilpotentFactors {
  Matrix p;
  Matrix p_inverse;
  Matrix u;       // r×r, r = rank(A^k)
  Matrix n_part;  // (n−r)×(n−r)
  int k = 0;      // matrix index of A
  int power = 0;  // exponent whose range/null space built P (≥ k)
  double source_norm = 0.0;  // max(σ_max(A), reference norm)

  Index core_rank() const { return u.rows(); }
  Matrix reconstruct() const;
};

// Every rank decision below uses the cutoff
//   rank_tol_factor · max(m, n) · max(σ_max(a), reference_norm).
// A positive reference_norm sets the scale for a matrix cut from a larger
// object, so that a block that is zero up to rounding has rank 0.

Index numerical_rank(const Matrix& a, const ToleranceConfig& tol = {},
                     double reference_norm = 0.0);

// Orthonormal basis of range(a) using the numerical_rank cutoff.
Matrix range_basis(const Matrix& a, const ToleranceConfig& tol = {},
                   double reference_norm = 0.0);

/// Ranks of a⁰, a¹, …, a^max_power.
///
/// Each rank is taken from the product a·Q where Q spans the previous range,
/// which keeps rounding noise at the scale of a instead of a^p.
std::vector<Index> power_ranks(const Matrix& a, int max_power,
                               const ToleranceConfig& tol = {}, double reference_norm = 0.0);

// Smallest k ≥ 0 with rank(a^k) = rank(a^{k+1}); never exceeds n.
int matrix_index(const Matrix& a, const ToleranceConfig& tol = {}, double reference_norm = 0.0);

/// Splits a square matrix into core and nilpotent parts.
///
/// The bases are taken from a^power, where power defaults to the matrix index
/// and is raised to it when smaller. Throws NumericalError if the split fails
/// to reproduce a within tol.residual_tol.
CoreNilpotentFactors core_nilpotent_decompose(const Matrix& a,
                                              const ToleranceConfig& tol = {},
                                              std::optional<int> power = {},
                                              double reference_norm = 0.0);

/// Moore–Penrose inverse via SVD with rank truncation.
///
Matrix mp_inverse_matrix(const Matrix& a, const ToleranceConfig& tol = {},
                         double reference_norm = 0.0);

// Canonical {1}-inverse N⁻ = N† of a nilpotent block. Throws ContractError if
// N is not nilpotent within tolerance.
Matrix one_inverse_nilpotent(const Matrix& n_part, const ToleranceConfig& tol = {},
                             double reference_norm = 0.0);

// P · diag(U⁻¹, N⁻) · P⁻¹ from precomputed factors.
Matrix gd_from_factors(const CoreNilpotentFactors& f, const ToleranceConfig& tol = {});
// P · diag(U⁻¹, 0) · P⁻¹ from precomputed factors.
Matrix drazin_from_factors(const CoreNilpotentFactors& f);

Matrix matrix_gd_inverse(const Matrix& a, const ToleranceConfig& tol = {});
Matrix matrix_drazin_inverse(const Matrix& a, const ToleranceConfig& tol = {});

// Spectral norm (largest singular value).
double spectral_norm(const Matrix& a);

}  // namespace mginv
