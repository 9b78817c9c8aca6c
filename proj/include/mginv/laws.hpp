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

#include <string>
#include <utility>
#include <vector>

#include "mginv/matrix_kernels.hpp"
#include "mginv/tensor.hpp"
#include "mginv/transform.hpp"

namespace mginv {

/// Named equation residuals checked against one tolerance.
///
/// Every residual is ‖LHS − RHS‖_F / (1 + ‖RHS‖_F); the report passes iff
/// every residual is at most tol.
class ResidualReport {
 public:
  struct Entry {
    std::string label;
    double residual = 0.0;
  };

  ResidualReport() = default;
  explicit ResidualReport(double tol) : tol_(tol) {}

  void add(std::string label, double residual);
  // Records the residual of lhs against rhs.
  void add(std::string label, const Tensor3& lhs, const Tensor3& rhs);
  // Appends all entries of another report.
  void append(const ResidualReport& other, const std::string& prefix = "");

  const std::vector<Entry>& entries() const { return entries_; }
  double tol() const { return tol_; }
  bool pass() const;
  double max_residual() const;
  // Entries whose residual exceeds tol.
  std::vector<Entry> failures() const;

 private:
  std::vector<Entry> entries_;
  double tol_ = 0.0;
};

/// Result of checking one law: the conclusion is only evaluated when every
/// hypothesis holds.
struct LawOutcome {
  ResidualReport hypotheses;
  ResidualReport conclusion;
  bool applicable = false;
  std::string note;

  // True unless the hypotheses held and the conclusion did not.
  bool consistent() const { return !applicable || conclusion.pass(); }
};

enum class InverseKind { kGd, kGdmp, kGdstar };
enum class ReverseOrderVariant { kT5, kT6, kTt7 };
enum class ProductDirection { kReverse, kForward };

// All verify_* operations evaluate at tol.residual_tol and derive k from
// tensor_index(a).

// 𝒜⋆𝒳⋆𝒜 = 𝒜, 𝒳⋆𝒜^{k+1} = 𝒜ᵏ, 𝒜^{k+1}⋆𝒳 = 𝒜ᵏ.
ResidualReport verify_gd(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                         const ToleranceConfig& tol);

/// The four equivalent descriptions of 𝒜{GD}, in order: "definition",
/// "power-commuting", "drazin-projector", "drazin-square". They either all
/// pass or all fail for any candidate.
std::vector<std::pair<std::string, ResidualReport>> characterize_gd(
    const Tensor3& a, const Tensor3& x, const TransformMatrix& m, const ToleranceConfig& tol);

// The three-equation GDMP system followed by the four-equation system.
// gd, when given, is the GD inverse the candidate was built from; otherwise
// the canonical one is used.
ResidualReport verify_gdmp(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                           const ToleranceConfig& tol, const Tensor3* gd = nullptr);

/// The three-equation GD-Star system (with c = 1 and c = k) followed
/// by the property list (a)–(f).
///
/// The equation 𝒳⋆(𝒜†)* = 𝒜^{GD}⋆𝒜 depends on which GD inverse built 𝒳
/// (it is choice-free whenever ind(𝒜) ≤ 1); pass that inverse as gd.
ResidualReport verify_gdstar(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                             const ToleranceConfig& tol, const Tensor3* gd = nullptr);

// The four Penrose equations.
ResidualReport verify_mp(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                         const ToleranceConfig& tol);

// 𝒳⋆𝒜^{k+1} = 𝒜ᵏ, 𝒳⋆𝒜⋆𝒳 = 𝒳, 𝒳⋆𝒜 = 𝒜⋆𝒳.
ResidualReport verify_drazin(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                             const ToleranceConfig& tol);

// Properties (a)–(g) of a GDMP inverse x of a, with c ∈ {1, k+1}.
ResidualReport gdmp_properties(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                               const ToleranceConfig& tol, const Tensor3* gd = nullptr);

// GD reverse/forward-order laws. T5 and T6 conclude (𝒜⋆ℬ)^{GD} = ℬ^{GD}⋆𝒜^{GD};
// tt7 concludes (𝒜⋆ℬ)^{GD} = 𝒜^{GD}⋆ℬ^{GD}. Hypotheses use canonical GD inverses.
LawOutcome check_gd_reverse_order(const Tensor3& a, const Tensor3& b, const TransformMatrix& m,
                                  const ToleranceConfig& tol, ReverseOrderVariant variant);

// (𝒜+ℬ)^{…} = 𝒜^{…} + ℬ^{…} under the annihilation hypotheses.
LawOutcome check_additive_law(const Tensor3& a, const Tensor3& b, const TransformMatrix& m,
                              const ToleranceConfig& tol, InverseKind kind);

LawOutcome check_gdmp_product_laws(const Tensor3& a, const Tensor3& b,
                                   const TransformMatrix& m, const ToleranceConfig& tol,
                                   ProductDirection direction);

LawOutcome check_gdstar_product_laws(const Tensor3& a, const Tensor3& b,
                                     const TransformMatrix& m, const ToleranceConfig& tol,
                                     ProductDirection direction);

}  // namespace mginv
