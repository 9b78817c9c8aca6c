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

#include "mginv/solver.hpp"

#include <random>
#include <string>

#include "mginv/errors.hpp"
#include "mginv/ginv.hpp"

namespace mginv {

namespace {

void check_request(const SolveRequest& req) {
  const Tensor3& a = req.a;
  const Tensor3& b = req.b;
  if (a.empty() || !a.is_square()) throw DimensionError("solve: A must be square");
  if (b.rows() != a.rows() || b.tubes() != a.tubes()) {
    throw DimensionError("solve: B must have A's row count and tube count");
  }
  if (req.z && req.z->dims() != b.dims()) {
    throw DimensionError("solve: Z must have the same shape as B");
  }
}

Tensor3 consistent_target(const SolveRequest& req, const Tensor3& gd, const TransformMatrix& m,
                          const ToleranceConfig& tol) {
  switch (req.kind) {
    case SolveKind::kGd:
      return m_product({req.a, gd, req.b}, m);
    case SolveKind::kGdmp: {
      const Tensor3 a_mp = mp_inverse(req.a, m, tol);
      return m_product({req.a, a_mp, req.b}, m);
    }
    case SolveKind::kGdstar: {
      const Tensor3 a_star = conj_transpose(req.a, m);
      return m_product({req.a, a_star, req.b}, m);
    }
  }
  throw ContractError("solve: unknown kind");
}

}  // namespace

SolveInverses solve_inverses(const SolveRequest& req, const TransformMatrix& m,
                             const ToleranceConfig& tol) {
  check_request(req);
  SolveInverses inv;
  inv.gd = gd_inverse(req.a, m, tol);
  switch (req.kind) {
    case SolveKind::kGd:
      inv.selected = inv.gd;
      break;
    case SolveKind::kGdmp:
      inv.selected = gdmp_inverse(req.a, m, tol);
      break;
    case SolveKind::kGdstar:
      inv.selected = gdstar_inverse(req.a, m, tol);
      break;
  }
  return inv;
}

SolveResult assemble_solution(const SolveRequest& req, const SolveInverses& inv,
                              const TransformMatrix& m, const ToleranceConfig& tol) {
  check_request(req);
  if (inv.selected.dims() != req.a.dims() || inv.gd.dims() != req.a.dims()) {
    throw DimensionError("solve: inverses must have A's shape");
  }
  SolveResult out;
  out.inverse_used = inv.selected;
  out.x = m_product(inv.selected, req.b, m);
  if (req.z) {
    const Tensor3 projector =
        identity_tensor(req.a.rows(), req.a.tubes(), m) - m_product(inv.gd, req.a, m);
    out.x += m_product(projector, *req.z, m);
  }
  const Tensor3 ax = m_product(req.a, out.x, m);
  out.residual = relative_residual(ax, consistent_target(req, inv.gd, m, tol));
  out.rhs_residual = relative_residual(ax, req.b);
  return out;
}

SolveResult solve(const SolveRequest& req, const TransformMatrix& m,
                  const ToleranceConfig& tol) {
  tol.validate();
  const SolveInverses inv = solve_inverses(req, m, tol);
  SolveResult out = assemble_solution(req, inv, m, tol);
  if (!(out.residual <= tol.residual_tol)) {
    throw NumericalError("solve: residual " + std::to_string(out.residual) +
                         " exceeds tolerance");
  }
  return out;
}

ResidualReport solution_family_check(const SolveRequest& req, const TransformMatrix& m,
                                     const ToleranceConfig& tol, int trials,
                                     std::uint64_t seed) {
  if (trials <= 0) throw ContractError("solution_family_check: trials must be positive");
  tol.validate();
  const SolveInverses inv = solve_inverses(req, m, tol);
  const Tensor3 target = consistent_target(req, inv.gd, m, tol);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  ResidualReport report(tol.residual_tol);
  SolveRequest trial = req;
  trial.z.reset();
  report.add("Z = 0", relative_residual(m_product(req.a, assemble_solution(trial, inv, m, tol).x, m),
                                        target));
  for (int t = 0; t < trials; ++t) {
    Tensor3 z(req.b.dims());
    for (Index k = 0; k < z.tubes(); ++k) {
      for (Index j = 0; j < z.cols(); ++j) {
        for (Index i = 0; i < z.rows(); ++i) z(i, j, k) = Complex(gauss(rng), gauss(rng));
      }
    }
    trial.z = std::move(z);
    const Tensor3 x = assemble_solution(trial, inv, m, tol).x;
    report.add("random Z #" + std::to_string(t + 1),
               relative_residual(m_product(req.a, x, m), target));
  }
  return report;
}

}  // namespace mginv
