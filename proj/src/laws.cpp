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

#include "mginv/laws.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "mginv/errors.hpp"
#include "mginv/ginv.hpp"

namespace mginv {

void ResidualReport::add(std::string label, double residual) {
  entries_.push_back({std::move(label), residual});
}

void ResidualReport::add(std::string label, const Tensor3& lhs, const Tensor3& rhs) {
  add(std::move(label), relative_residual(lhs, rhs));
}

void ResidualReport::append(const ResidualReport& other, const std::string& prefix) {
  for (const auto& e : other.entries()) add(prefix + e.label, e.residual);
}

bool ResidualReport::pass() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [this](const Entry& e) { return e.residual <= tol_; });
}

double ResidualReport::max_residual() const {
  double worst = 0.0;
  for (const auto& e : entries_) worst = std::max(worst, e.residual);
  return worst;
}

std::vector<ResidualReport::Entry> ResidualReport::failures() const {
  std::vector<Entry> out;
  for (const auto& e : entries_) {
    if (!(e.residual <= tol_)) out.push_back(e);
  }
  return out;
}

namespace {

// Shorthand for chains of M-products under one transform.
class Algebra {
 public:
  explicit Algebra(const TransformMatrix& m) : m_(m) {}

  Tensor3 operator()(const Tensor3& a, const Tensor3& b) const { return m_product(a, b, m_); }
  Tensor3 operator()(const Tensor3& a, const Tensor3& b, const Tensor3& c) const {
    return m_product({a, b, c}, m_);
  }
  Tensor3 operator()(const Tensor3& a, const Tensor3& b, const Tensor3& c,
                     const Tensor3& d) const {
    return m_product({a, b, c, d}, m_);
  }
  Tensor3 pow(const Tensor3& a, int p) const { return tensor_power(a, p, m_); }
  Tensor3 star(const Tensor3& a) const { return conj_transpose(a, m_); }
  Tensor3 zero(const Tensor3& like) const { return Tensor3(like.dims()); }

 private:
  const TransformMatrix& m_;
};

void require_square_pair(const Tensor3& a, const Tensor3& x, const char* what) {
  if (!a.is_square() || a.dims() != x.dims()) {
    throw DimensionError(std::string(what) +
                         ": tensors must be square with identical shapes");
  }
}

}  // namespace

ResidualReport verify_gd(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                         const ToleranceConfig& tol) {
  require_square_pair(a, x, "verify_gd");
  const Algebra mul(m);
  const int k = tensor_index(a, m, tol);
  const Tensor3 ak = mul.pow(a, k);
  const Tensor3 ak1 = mul.pow(a, k + 1);
  ResidualReport r(tol.residual_tol);
  r.add("A*X*A = A", mul(a, x, a), a);
  r.add("X*A^(k+1) = A^k", mul(x, ak1), ak);
  r.add("A^(k+1)*X = A^k", mul(ak1, x), ak);
  return r;
}

std::vector<std::pair<std::string, ResidualReport>> characterize_gd(
    const Tensor3& a, const Tensor3& x, const TransformMatrix& m, const ToleranceConfig& tol) {
  require_square_pair(a, x, "characterize_gd");
  const Algebra mul(m);
  const int k = tensor_index(a, m, tol);
  const Tensor3 ak = mul.pow(a, k);
  const Tensor3 a2 = mul.pow(a, 2);
  const Tensor3 ad = drazin_inverse(a, m, tol);
  const Tensor3 axa = mul(a, x, a);

  std::vector<std::pair<std::string, ResidualReport>> out;
  out.emplace_back("definition", verify_gd(a, x, m, tol));

  ResidualReport commuting(tol.residual_tol);
  commuting.add("A*X*A = A", axa, a);
  commuting.add("A^k*X = X*A^k", mul(ak, x), mul(x, ak));
  out.emplace_back("power-commuting", std::move(commuting));

  ResidualReport projector(tol.residual_tol);
  projector.add("A*X*A = A", axa, a);
  projector.add("A^D*A*X = X*A^D*A", mul(ad, a, x), mul(x, ad, a));
  out.emplace_back("drazin-projector", std::move(projector));

  const Tensor3 a_ad = mul(a, ad);
  ResidualReport square(tol.residual_tol);
  square.add("A*X*A = A", axa, a);
  square.add("A^D*A^2*X = A*A^D", mul(ad, a2, x), a_ad);
  square.add("X*A^D*A^2 = A*A^D", mul(x, ad, a2), a_ad);
  out.emplace_back("drazin-square", std::move(square));
  return out;
}

ResidualReport verify_gdmp(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                           const ToleranceConfig& tol, const Tensor3* gd) {
  require_square_pair(a, x, "verify_gdmp");
  const Algebra mul(m);
  const int k = tensor_index(a, m, tol);
  const Tensor3 ak = mul.pow(a, k);
  const Tensor3 ak1 = mul.pow(a, k + 1);
  const Tensor3 a_gd = gd ? *gd : gd_inverse(a, m, tol);
  const Tensor3 a_mp = mp_inverse(a, m, tol);
  const Tensor3 ax = mul(a, x);
  ResidualReport r(tol.residual_tol);
  r.add("X*A*X = X", mul(x, a, x), x);
  r.add("A*X = A*A^dag", ax, mul(a, a_mp));
  r.add("X*A^k = A^GD*A^k", mul(x, ak), mul(a_gd, ak));
  r.add("A*X*A = A", mul(ax, a), a);
  r.add("(A*X)^* = A*X", mul.star(ax), ax);
  r.add("X*A^(k+1) = A^k", mul(x, ak1), ak);
  return r;
}

ResidualReport verify_gdstar(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                             const ToleranceConfig& tol, const Tensor3* gd) {
  require_square_pair(a, x, "verify_gdstar");
  const Algebra mul(m);
  const int k = tensor_index(a, m, tol);
  const Tensor3 ak = mul.pow(a, k);
  const Tensor3 a_gd = gd ? *gd : gd_inverse(a, m, tol);
  const Tensor3 a_mp = mp_inverse(a, m, tol);
  const Tensor3 a_star = mul.star(a);
  const Tensor3 a_mp_star = mul.star(a_mp);
  const Tensor3 ax = mul(a, x);
  const Tensor3 x2 = mul(x, x);
  const Tensor3 star_x = mul(a_star, x);

  ResidualReport r(tol.residual_tol);
  r.add("X*(A^dag)^**X = X", mul(x, a_mp_star, x), x);
  r.add("A*X = A*A^*", ax, mul(a, a_star));
  r.add("A^k*X = A^k*A^*", mul(ak, x), mul(ak, a_star));
  r.add("X*(A^dag)^* = A^GD*A", mul(x, a_mp_star), mul(a_gd, a));
  r.add("(a) A*X*(A^dag)^* = A", mul(a, x, a_mp_star), a);
  r.add("(b) A^dag*A*X = A^*", mul(a_mp, a, x), a_star);
  r.add("(c) A^k*X*(A^dag)^* = A^k", mul(ak, x, a_mp_star), ak);
  r.add("(c) X*(A^dag)^**A^k = A^k", mul(x, a_mp_star, ak), ak);
  r.add("(d) A^dag*A*X^2 = A^**X", mul(a_mp, a, x2), star_x);
  r.add("(d) A^dag*A*X^2*A*A^dag = A^**X", mul(mul(a_mp, a, x2), a, a_mp), star_x);
  r.add("(e) (A*X)^* = A*X", mul.star(ax), ax);
  r.add("(f) (A^dag)^**X*(A^dag)^* = (A^dag)^*", mul(a_mp_star, x, a_mp_star), a_mp_star);
  return r;
}

ResidualReport verify_mp(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                         const ToleranceConfig& tol) {
  if (x.rows() != a.cols() || x.cols() != a.rows() || x.tubes() != a.tubes()) {
    throw DimensionError("verify_mp: candidate must have transposed shape");
  }
  const Algebra mul(m);
  const Tensor3 ax = mul(a, x);
  const Tensor3 xa = mul(x, a);
  ResidualReport r(tol.residual_tol);
  r.add("A*X*A = A", mul(ax, a), a);
  r.add("X*A*X = X", mul(xa, x), x);
  r.add("(A*X)^* = A*X", mul.star(ax), ax);
  r.add("(X*A)^* = X*A", mul.star(xa), xa);
  return r;
}

ResidualReport verify_drazin(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                             const ToleranceConfig& tol) {
  require_square_pair(a, x, "verify_drazin");
  const Algebra mul(m);
  const int k = tensor_index(a, m, tol);
  ResidualReport r(tol.residual_tol);
  r.add("X*A^(k+1) = A^k", mul(x, mul.pow(a, k + 1)), mul.pow(a, k));
  r.add("X*A*X = X", mul(x, a, x), x);
  r.add("X*A = A*X", mul(x, a), mul(a, x));
  return r;
}

ResidualReport gdmp_properties(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                               const ToleranceConfig& tol, const Tensor3* gd) {
  require_square_pair(a, x, "gdmp_properties");
  const Algebra mul(m);
  const int k = tensor_index(a, m, tol);
  const Tensor3 a_gd = gd ? *gd : gd_inverse(a, m, tol);
  const Tensor3 a_mp = mp_inverse(a, m, tol);
  const Tensor3 ak = mul.pow(a, k);
  const Tensor3 ak1 = mul.pow(a, k + 1);
  const Tensor3 ak2 = mul.pow(a, k + 2);
  ResidualReport r(tol.residual_tol);
  r.add("(a) X = A^GD*A*X", mul(a_gd, a, x), x);
  r.add("(b) A*X*A = A", mul(a, x, a), a);
  r.add("(b) X*A*X = X", mul(x, a, x), x);
  for (int c : {1, k + 1}) {
    const Tensor3 ac = mul.pow(a, c);
    const std::string tag = " (c=" + std::to_string(c) + ")";
    r.add("(c) A^c*X = A^c*A^dag" + tag, mul(ac, x), mul(ac, a_mp));
    r.add("(c) X*A^c = A^GD*A^c" + tag, mul(x, ac), mul(a_gd, ac));
  }
  r.add("(d) X*A^(k+1) = A^k", mul(x, ak1), ak);
  r.add("(e) A*X*A^(k+1) = A^(k+1)", mul(a, x, ak1), ak1);
  r.add("(f) A^(k+1)*X = A^k*A*A^dag", mul(ak1, x), mul(ak, a, a_mp));
  r.add("(g) X*A^(k+2)*X = A^(k+1)*A^dag", mul(x, ak2, x), mul(ak1, a_mp));
  return r;
}

namespace {

LawOutcome conclude(ResidualReport hypotheses, const ToleranceConfig& tol,
                    const std::function<ResidualReport()>& conclusion) {
  LawOutcome out;
  out.applicable = hypotheses.pass();
  out.hypotheses = std::move(hypotheses);
  out.conclusion = ResidualReport(tol.residual_tol);
  if (out.applicable) out.conclusion = conclusion();
  out.note = "hypotheses are evaluated with canonical GD inverses (N^- = N^dag)";
  return out;
}

// Tolerances for checking an inverse of a computed sum or product. Its ranks
// are judged against the operands' scale so that a vanishing result counts as
// zero rather than as full-rank rounding noise.
ToleranceConfig operand_scaled(ToleranceConfig tol, double scale) {
  tol.reference_norm = std::max(tol.reference_norm, scale);
  return tol;
}

double product_scale(const Tensor3& a, const Tensor3& b, const TransformMatrix& m) {
  return transform_scale(a, m) * transform_scale(b, m);
}

double sum_scale(const Tensor3& a, const Tensor3& b, const TransformMatrix& m) {
  return transform_scale(a, m) + transform_scale(b, m);
}

}  // namespace

LawOutcome check_gd_reverse_order(const Tensor3& a, const Tensor3& b, const TransformMatrix& m,
                                  const ToleranceConfig& tol, ReverseOrderVariant variant) {
  require_square_pair(a, b, "check_gd_reverse_order");
  const Algebra mul(m);
  const Tensor3 a_gd = gd_inverse(a, m, tol);
  const Tensor3 b_gd = gd_inverse(b, m, tol);
  const Tensor3 ab = mul(a, b);

  ResidualReport hyp(tol.residual_tol);
  switch (variant) {
    case ReverseOrderVariant::kT5: {
      const Tensor3 b2 = mul.pow(b, 2);
      const Tensor3 b2a = mul(b2, a);
      hyp.add("A*B^2 = B^2*A", mul(a, b2), b2a);
      hyp.add("B^2*A = B*A*B", b2a, mul(b, a, b));
      hyp.add("A*B*B^GD = B*B^GD*A", mul(a, b, b_gd), mul(b, b_gd, a));
      hyp.add("B*B^GD*A^GD = A^GD*B*B^GD", mul(b, b_gd, a_gd), mul(a_gd, b, b_gd));
      break;
    }
    case ReverseOrderVariant::kT6:
      hyp.add("A*B = B*A", ab, mul(b, a));
      hyp.add("B*B^GD*A^GD = A^GD*B*B^GD", mul(b, b_gd, a_gd), mul(a_gd, b, b_gd));
      break;
    case ReverseOrderVariant::kTt7:
      hyp.add("A*B = B*A", ab, mul(b, a));
      hyp.add("B^GD*B*A = A*B^GD*B", mul(b_gd, b, a), mul(a, b_gd, b));
      break;
  }
  return conclude(std::move(hyp), tol, [&] {
    const Tensor3 candidate =
        variant == ReverseOrderVariant::kTt7 ? mul(a_gd, b_gd) : mul(b_gd, a_gd);
    ResidualReport r(tol.residual_tol);
    const ToleranceConfig ab_tol = operand_scaled(tol, product_scale(a, b, m));
    r.append(verify_gd(ab, candidate, m, ab_tol), "(A*B)^GD: ");
    return r;
  });
}

LawOutcome check_additive_law(const Tensor3& a, const Tensor3& b, const TransformMatrix& m,
                              const ToleranceConfig& tol, InverseKind kind) {
  require_square_pair(a, b, "check_additive_law");
  const Algebra mul(m);
  const Tensor3 a_gd = gd_inverse(a, m, tol);
  const Tensor3 b_gd = gd_inverse(b, m, tol);
  const Tensor3 zero = mul.zero(a);

  ResidualReport hyp(tol.residual_tol);
  hyp.add("A*B = O", mul(a, b), zero);
  hyp.add("B*A = O", mul(b, a), zero);
  if (kind == InverseKind::kGdmp) {
    hyp.add("A^dag = A", mp_inverse(a, m, tol), a);
    hyp.add("B^dag = B", mp_inverse(b, m, tol), b);
  }
  if (kind == InverseKind::kGdstar) hyp.add("B*A^* = O", mul(b, mul.star(a)), zero);
  hyp.add("A^GD*B = O", mul(a_gd, b), zero);
  hyp.add("B*A^GD = O", mul(b, a_gd), zero);
  hyp.add("B^GD*A = O", mul(b_gd, a), zero);
  hyp.add("A*B^GD = O", mul(a, b_gd), zero);

  return conclude(std::move(hyp), tol, [&] {
    const Tensor3 sum = a + b;
    const Tensor3 sum_gd = a_gd + b_gd;
    const ToleranceConfig sum_tol = operand_scaled(tol, sum_scale(a, b, m));
    ResidualReport r(tol.residual_tol);
    switch (kind) {
      case InverseKind::kGd:
        r.append(verify_gd(sum, sum_gd, m, sum_tol), "(A+B)^GD: ");
        break;
      case InverseKind::kGdmp: {
        const Tensor3 x = gdmp_inverse(a, m, tol) + gdmp_inverse(b, m, tol);
        r.append(verify_gdmp(sum, x, m, sum_tol, &sum_gd), "(A+B)^GD,dag: ");
        break;
      }
      case InverseKind::kGdstar: {
        const Tensor3 x = gdstar_inverse(a, m, tol) + gdstar_inverse(b, m, tol);
        r.append(verify_gdstar(sum, x, m, sum_tol, &sum_gd), "(A+B)^GD,*: ");
        break;
      }
    }
    return r;
  });
}

LawOutcome check_gdmp_product_laws(const Tensor3& a, const Tensor3& b,
                                   const TransformMatrix& m, const ToleranceConfig& tol,
                                   ProductDirection direction) {
  require_square_pair(a, b, "check_gdmp_product_laws");
  const Algebra mul(m);
  const Tensor3 a_gd = gd_inverse(a, m, tol);
  const Tensor3 b_gd = gd_inverse(b, m, tol);
  const Tensor3 ab = mul(a, b);

  ResidualReport hyp(tol.residual_tol);
  hyp.add("A^dag = A", mp_inverse(a, m, tol), a);
  hyp.add("B^dag = B", mp_inverse(b, m, tol), b);
  hyp.add("A*B = B*A", ab, mul(b, a));
  if (direction == ProductDirection::kReverse) {
    hyp.add("A^GD*A*B = B*A^GD*A", mul(a_gd, a, b), mul(b, a_gd, a));
    hyp.add("B*B^GD*A^GD = A^GD*B*B^GD", mul(b, b_gd, a_gd), mul(a_gd, b, b_gd));
  } else {
    hyp.add("B^GD*B*A = A*B^GD*B", mul(b_gd, b, a), mul(a, b_gd, b));
  }
  return conclude(std::move(hyp), tol, [&] {
    const Tensor3 a_x = gdmp_inverse(a, m, tol);
    const Tensor3 b_x = gdmp_inverse(b, m, tol);
    const bool reverse = direction == ProductDirection::kReverse;
    const Tensor3 candidate = reverse ? mul(b_x, a_x) : mul(a_x, b_x);
    const Tensor3 ab_gd = reverse ? mul(b_gd, a_gd) : mul(a_gd, b_gd);
    const ToleranceConfig ab_tol = operand_scaled(tol, product_scale(a, b, m));
    ResidualReport r(tol.residual_tol);
    r.append(verify_gdmp(ab, candidate, m, ab_tol, &ab_gd), "(A*B)^GD,dag: ");
    return r;
  });
}

LawOutcome check_gdstar_product_laws(const Tensor3& a, const Tensor3& b,
                                     const TransformMatrix& m, const ToleranceConfig& tol,
                                     ProductDirection direction) {
  require_square_pair(a, b, "check_gdstar_product_laws");
  const Algebra mul(m);
  const Tensor3 a_gd = gd_inverse(a, m, tol);
  const Tensor3 b_gd = gd_inverse(b, m, tol);
  const Tensor3 ab = mul(a, b);

  ResidualReport hyp(tol.residual_tol);
  hyp.add("A*B = B*A", ab, mul(b, a));
  if (direction == ProductDirection::kReverse) {
    const Tensor3 bb = mul(b, mul.star(b));
    hyp.add("B*B^GD*A^GD = A^GD", mul(b, b_gd, a_gd), a_gd);
    hyp.add("A^GD*A*B*B^* = B*B^**A^GD*A", mul(a_gd, a, bb), mul(bb, a_gd, a));
  } else {
    const Tensor3 aa = mul(a, mul.star(a));
    hyp.add("A*A^GD*B^GD = B^GD", mul(a, a_gd, b_gd), b_gd);
    hyp.add("B^GD*B*A*A^* = A*A^**B^GD*B", mul(b_gd, b, aa), mul(aa, b_gd, b));
  }
  return conclude(std::move(hyp), tol, [&] {
    const Tensor3 a_x = gdstar_inverse(a, m, tol);
    const Tensor3 b_x = gdstar_inverse(b, m, tol);
    const bool reverse = direction == ProductDirection::kReverse;
    const Tensor3 candidate = reverse ? mul(b_x, a_x) : mul(a_x, b_x);
    const Tensor3 ab_gd = reverse ? mul(b_gd, a_gd) : mul(a_gd, b_gd);
    const ToleranceConfig ab_tol = operand_scaled(tol, product_scale(a, b, m));
    ResidualReport r(tol.residual_tol);
    r.append(verify_gdstar(ab, candidate, m, ab_tol, &ab_gd), "(A*B)^GD,*: ");
    return r;
  });
}

}  // namespace mginv
