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

#include <cstdint>
#include <optional>

#include "mginv/laws.hpp"
#include "mginv/tensor.hpp"
#include "mginv/transform.hpp"

namespace mginv {

enum class SolveKind { kGd, kGdmp, kGdstar };

// b is η1×c×η3, one system per lateral column; z matches b when present.
struct SolveRequest {
  Tensor3 a;
  Tensor3 b;
  std::optional<Tensor3> z;
  SolveKind kind = SolveKind::kGd;
};

struct SolveResult {
  Tensor3 x;
  // Residual of 𝒜⋆𝒳 against the kind's consistent target.
  double residual = 0.0;
  Tensor3 inverse_used;
  // Residual of 𝒜⋆𝒳 against 𝒜⋆ℬ itself; small iff ℬ is already consistent.
  double rhs_residual = 0.0;
};

// Inverses a solution is assembled from. gd drives the projector ℐ − 𝒢⋆𝒜.
struct SolveInverses {
  Tensor3 selected;
  Tensor3 gd;
};

// Computes the canonical inverses for req.kind.
SolveInverses solve_inverses(const SolveRequest& req, const TransformMatrix& m,
                             const ToleranceConfig& tol);

// 𝒳 = selected⋆ℬ + (ℐ − gd⋆𝒜)⋆𝒵, from caller-supplied inverses.
// tol only feeds the pseudoinverse in the GDMP target.
SolveResult assemble_solution(const SolveRequest& req, const SolveInverses& inv,
                              const TransformMatrix& m, const ToleranceConfig& tol = {});

// Throws NumericalError when the residual exceeds tol.residual_tol.
SolveResult solve(const SolveRequest& req, const TransformMatrix& m,
                  const ToleranceConfig& tol);

// One entry per random 𝒵 plus the residual of the particular (𝒵 = 0) solution.
ResidualReport solution_family_check(const SolveRequest& req, const TransformMatrix& m,
                                     const ToleranceConfig& tol, int trials,
                                     std::uint64_t seed = 0x5eed);

}  // namespace mginv
