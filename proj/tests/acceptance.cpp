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

// Acceptance run: one PASS/FAIL line per criterion, detail lines beneath.
// Exits nonzero when any criterion fails.

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mginv/ginv.hpp"
#include "mginv/laws.hpp"
#include "mginv/solver.hpp"
#include "support.hpp"

namespace mginv {
namespace {

using testing::load_fixture_matrix;
using testing::load_fixture_tensor;
using testing::random_tensor;
using testing::Rng;
using testing::tensor_with_index;

// Collects sub-checks of one criterion.
class Criterion {
 public:
  void check(const std::string& what, bool ok) {
    ok_ = ok_ && ok;
    lines_.push_back(std::string(ok ? "    ok    " : "    FAIL  ") + what);
  }
  void bound(const std::string& what, double value, double limit) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ": %.3e (limit %.0e)", value, limit);
    check(what + buf, value <= limit);
  }
  void info(const std::string& what) { lines_.push_back("    info  " + what); }
  bool ok() const { return ok_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool ok_ = true;
  std::vector<std::string> lines_;
};

ToleranceConfig at(double residual_tol) {
  ToleranceConfig tol;
  tol.residual_tol = residual_tol;
  return tol;
}

TransformMatrix example_m() { return TransformMatrix(load_fixture_matrix("transform_m")); }

double worst(const ResidualReport& r) { return r.max_residual(); }

void c1_gd_golden(Criterion& c) {
  const Tensor3 a = load_fixture_tensor("example1_a");
  const TransformMatrix m = example_m();
  const int k = tensor_index(a, m);
  c.check("computed tensor index = 2 (got " + std::to_string(k) + ")", k == 2);
  c.bound("computed GD inverse, verify_gd", worst(verify_gd(a, gd_inverse(a, m), m, at(1e-10))),
          1e-10);
  c.bound("printed X, verify_gd", worst(verify_gd(a, load_fixture_tensor("example1_x_printed"), m,
                                                  at(5e-3))),
          5e-3);
}

void c2_gdmp_golden(Criterion& c) {
  const Tensor3 a = load_fixture_tensor("gdmp_a");
  const TransformMatrix m = example_m();
  c.bound("computed GDMP inverse, both systems", worst(verify_gdmp(a, gdmp_inverse(a, m), m,
                                                                   at(1e-8))),
          1e-8);
  const ResidualReport printed =
      verify_gdmp(a, load_fixture_tensor("gdmp_x_printed"), m, at(5e-3));
  c.bound("printed X, both systems", worst(printed), 5e-3);
}

void c3_gdstar_golden(Criterion& c) {
  const Tensor3 a = load_fixture_tensor("gdstar_a");
  const TransformMatrix m = example_m();
  c.bound("computed GD-Star inverse, system and properties (a)-(f)",
          worst(verify_gdstar(a, gdstar_inverse(a, m), m, at(1e-8))), 1e-8);
  const ResidualReport printed =
      verify_gdstar(a, load_fixture_tensor("gdstar_x_printed"), m, at(5e-3));
  c.bound("printed X, system and properties (a)-(f)", worst(printed), 5e-3);
}

void c4_solver_golden(Criterion& c) {
  const TransformMatrix m = example_m();
  SolveRequest req{load_fixture_tensor("solver_a"), load_fixture_tensor("solver_b"), std::nullopt,
                   SolveKind::kGdstar};
  const SolveInverses printed{load_fixture_tensor("solver_a_gdstar_printed"),
                              load_fixture_tensor("solver_a_gd_printed")};
  const Tensor3 x = assemble_solution(req, printed, m).x;
  const double expected[3][3] = {{15, 6.75, 3}, {7, 2.25, 1}, {5, 0.75, -1}};
  double deviation = 0.0;
  for (Index k = 0; k < 3; ++k) {
    for (Index i = 0; i < 3; ++i) {
      deviation = std::max(deviation, std::abs(x(i, 0, k) - Complex(expected[k][i], 0.0)));
    }
  }
  c.bound("printed inverses, Z = 0, max entry deviation", deviation, 5e-3);
  const ResidualReport family = solution_family_check(req, m, at(1e-8), 10);
  c.bound("canonical pipeline, Z = 0 and 10 random Z", worst(family), 1e-8);
}

void c5_algebra(Criterion& c) {
  Rng rng(20261014);
  double round_trip = 0, matt = 0, oracle = 0, assoc = 0, ident = 0, anti = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index p = 1 + rng() % 4, q = 1 + rng() % 4, r = 1 + rng() % 4, t = 1 + rng() % 3;
    const Matrix mm = t == 1 ? testing::random_matrix(1, 1, rng) : testing::well_conditioned(t, rng);
    const TransformMatrix m(mm);
    const Tensor3 a = random_tensor(p, q, t, rng);
    const Tensor3 b = random_tensor(q, r, t, rng);
    const Tensor3 d = random_tensor(r, p, t, rng);
    round_trip = std::max(round_trip, relative_residual(inverse_transform(transform(a, m), m), a));
    const Tensor3 ab = m_product(a, b, m);
    const TransformedTensor ab_hat = transform(ab, m);
    const TransformedTensor a_hat = transform(a, m);
    const TransformedTensor b_hat = transform(b, m);
    const Matrix lhs = ab_hat.matt();
    const Matrix rhs = a_hat.matt() * b_hat.matt();
    matt = std::max(matt, relative_residual(lhs, rhs));
    oracle = std::max(oracle, relative_residual(ab, testing::naive_m_product(a, b, mm)));
    const Tensor3 bd = m_product(b, d, m);
    assoc = std::max(assoc, relative_residual(m_product(ab, d, m), m_product(a, bd, m)));
    const Tensor3 left = identity_tensor(p, t, m);
    const Tensor3 right = identity_tensor(q, t, m);
    ident = std::max({ident, relative_residual(m_product(left, a, m), a),
                      relative_residual(m_product(a, right, m), a)});
    const Tensor3 bh = conj_transpose(b, m);
    const Tensor3 ah = conj_transpose(a, m);
    anti = std::max(anti, relative_residual(conj_transpose(ab, m), m_product(bh, ah, m)));
  }
  c.bound("transform round trip", round_trip, 1e-12);
  c.bound("matt homomorphism", matt, 1e-12);
  c.bound("M-product against loop oracle", oracle, 1e-10);
  c.bound("associativity", assoc, 1e-10);
  c.bound("identity", ident, 1e-10);
  c.bound("conjugate-transpose anti-homomorphism", anti, 1e-10);
}

void c6_inverses(Criterion& c) {
  Rng rng(6);
  const ToleranceConfig tol = at(1e-8);
  double penrose = 0, drazin = 0, limit = 0, gdmp_props = 0, gdstar_props = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Index t = 1 + trial % 3;
    const Matrix mm = testing::well_conditioned(t, rng);
    const TransformMatrix m(mm);
    const Index n = 2 + trial % 3;
    const Tensor3 rect = random_tensor(n, 4 - trial % 2, t, rng);
    penrose = std::max(penrose, worst(verify_mp(rect, mp_inverse(rect, m), m, tol)));
    const auto known = tensor_with_index(n + 1, t, trial % 3, mm, rng);
    penrose = std::max(penrose, worst(verify_mp(known.a, mp_inverse(known.a, m), m, tol)));
    const Tensor3 d = drazin_inverse(known.a, m);
    drazin = std::max(drazin, worst(verify_drazin(known.a, d, m, tol)));
    limit = std::max(limit, relative_residual(d, testing::drazin_limit(known.a, mm, known.index)));
    gdmp_props = std::max(gdmp_props, worst(gdmp_properties(known.a, gdmp_inverse(known.a, m), m, tol)));
    gdstar_props = std::max(gdstar_props, worst(verify_gdstar(known.a, gdstar_inverse(known.a, m), m, tol)));
  }
  c.bound("Penrose equations", penrose, 1e-8);
  c.bound("Drazin equations", drazin, 1e-8);
  c.bound("Drazin against limit formula", limit, 1e-6);
  c.bound("GDMP properties (a)-(g)", gdmp_props, 1e-8);
  c.bound("GD-Star system and properties (a)-(f)", gdstar_props, 1e-8);

  const ToleranceConfig loose = at(1e-6);
  int agree = 0, valid = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index t = 1 + trial % 3;
    const Matrix mm = testing::well_conditioned(t, rng);
    const TransformMatrix m(mm);
    const auto known = tensor_with_index(3 + trial % 2, t, trial % 3, mm, rng);
    Tensor3 x = testing::random_gd_candidate(known, mm, rng);
    if (trial % 4 == 1) x += 1e-2 * random_tensor(x.rows(), x.cols(), x.tubes(), rng);
    if (trial % 4 == 3) x = random_tensor(x.rows(), x.cols(), x.tubes(), rng);
    const auto reports = characterize_gd(known.a, x, m, loose);
    const bool first = reports.front().second.pass();
    bool same = true;
    for (const auto& entry : reports) same = same && entry.second.pass() == first;
    agree += same;
    valid += first;
  }
  c.check("four GD characterizations agree on " + std::to_string(agree) + "/200 pairs (" +
              std::to_string(valid) + " valid)",
          agree == 200);
}

void c7_reductions(Criterion& c) {
  Rng rng(7);
  const TransformMatrix one = TransformMatrix::identity(1);
  bool exact = true;
  for (int index = 0; index <= 2; ++index) {
    const auto s = testing::matrix_with_index(4, index, rng);
    const Tensor3 a = Tensor3::from_slices({s.a});
    const Tensor3 b = Tensor3::from_slices({testing::random_matrix(4, 2, rng)});
    exact = exact && m_product(a, b, one).slice(0) == Matrix(s.a * b.slice(0));
    exact = exact && gd_inverse(a, one).slice(0) == matrix_gd_inverse(s.a);
    exact = exact && drazin_inverse(a, one).slice(0) == matrix_drazin_inverse(s.a);
    exact = exact && mp_inverse(a, one).slice(0) == mp_inverse_matrix(s.a);
    exact = exact && tensor_index(a, one) == matrix_index(s.a);
  }
  c.check("single tube with M = [1] reproduces matrix kernels bit-for-bit", exact);

  double product = 0, inverse = 0;
  for (Index n = 2; n <= 5; ++n) {
    const TransformMatrix f = TransformMatrix::normalized_dft(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const auto tprod = [&](const Tensor3& x, const Tensor3& y) {
      return scale * testing::circular_tproduct(x, y);
    };
    const Tensor3 a = random_tensor(3, 4, n, rng);
    const Tensor3 b = random_tensor(4, 2, n, rng);
    product = std::max(product, relative_residual(m_product(a, b, f), tprod(a, b)));
    const auto known = tensor_with_index(3, n, 2, f.matrix(), rng);
    const Tensor3 x = gd_inverse(known.a, f);
    const Tensor3 a2 = tprod(known.a, known.a);
    const Tensor3 a3 = tprod(a2, known.a);
    inverse = std::max({inverse, relative_residual(tprod(tprod(known.a, x), known.a), known.a),
                        relative_residual(tprod(x, a3), a2), relative_residual(tprod(a3, x), a2)});
  }
  c.bound("normalized DFT product against circular convolution", product, 1e-8);
  c.bound("DFT GD inverse equations under circular convolution", inverse, 1e-8);
}

struct LawTally {
  int runs = 0;
  int applicable = 0;
  int violations = 0;
  std::map<std::string, int> failing_families;
};

void run_laws(const std::string& family, const Tensor3& a, const Tensor3& b,
              const TransformMatrix& m, std::map<std::string, LawTally>& tally) {
  const ToleranceConfig tol = at(1e-8);
  std::vector<std::pair<std::string, std::function<LawOutcome()>>> laws = {
      {"gd reverse T5", [&] { return check_gd_reverse_order(a, b, m, tol, ReverseOrderVariant::kT5); }},
      {"gd reverse T6", [&] { return check_gd_reverse_order(a, b, m, tol, ReverseOrderVariant::kT6); }},
      {"gd forward tt7", [&] { return check_gd_reverse_order(a, b, m, tol, ReverseOrderVariant::kTt7); }},
      {"gd additive", [&] { return check_additive_law(a, b, m, tol, InverseKind::kGd); }},
      {"gdmp additive", [&] { return check_additive_law(a, b, m, tol, InverseKind::kGdmp); }},
      {"gdstar additive", [&] { return check_additive_law(a, b, m, tol, InverseKind::kGdstar); }},
      {"gdmp reverse", [&] { return check_gdmp_product_laws(a, b, m, tol, ProductDirection::kReverse); }},
      {"gdmp forward", [&] { return check_gdmp_product_laws(a, b, m, tol, ProductDirection::kForward); }},
      {"gdstar reverse", [&] { return check_gdstar_product_laws(a, b, m, tol, ProductDirection::kReverse); }},
      {"gdstar forward", [&] { return check_gdstar_product_laws(a, b, m, tol, ProductDirection::kForward); }},
  };
  for (const auto& [name, law] : laws) {
    const LawOutcome out = law();
    LawTally& entry = tally[name];
    ++entry.runs;
    entry.applicable += out.applicable;
    if (!out.consistent()) {
      ++entry.violations;
      ++entry.failing_families[family];
    }
  }
}

void c8_laws(Criterion& c) {
  Rng rng(8);
  std::map<std::string, LawTally> tally;
  const TransformMatrix em = example_m();
  for (const char* name : {"example1_a", "gdmp_a", "gdstar_a", "solver_a"}) {
    const Tensor3 a = load_fixture_tensor(name);
    const Tensor3 a2 = tensor_power(a, 2, em);
    run_laws("b = a", a, a, em, tally);
    run_laws("b = a^2", a, a2, em, tally);
  }
  for (int trial = 0; trial < 12; ++trial) {
    const Matrix mm = testing::well_conditioned(3, rng);
    const TransformMatrix m(mm);
    const Index n = 3 + trial % 2;
    const Tensor3 a = tensor_with_index(n, 3, trial % 3, mm, rng).a;
    const Tensor3 a2 = tensor_power(a, 2, m);
    const Tensor3 pa = testing::polynomial(a, {0.5, -1.0, 0.25}, m);
    const Tensor3 zero(a.dims());
    run_laws("b = a", a, a, m, tally);
    run_laws("b = a^2", a, a2, m, tally);
    run_laws("b = p(a)", a, pa, m, tally);
    run_laws("b = 0", a, zero, m, tally);
    const auto [c1, d1] = testing::block_disjoint_pair(n, 3, mm, trial % 3, false, rng);
    run_laws("block-disjoint", c1, d1, m, tally);
    const auto [c2, d2] = testing::block_disjoint_pair(n, 3, mm, 0, true, rng);
    run_laws("block-disjoint hermitian", c2, d2, m, tally);
    const auto [s1, t1] = testing::commuting_hermitian_pair(n, 3, mm, false, rng);
    run_laws("commuting hermitian", s1, t1, m, tally);
    const auto [s2, t2] = testing::commuting_hermitian_pair(n, 3, mm, true, rng);
    run_laws("commuting involutions", s2, t2, m, tally);
    run_laws("involution self-pair", s2, s2, m, tally);
  }
  int violations = 0;
  for (const auto& [name, entry] : tally) {
    violations += entry.violations;
    c.check(name + ": " + std::to_string(entry.applicable) + "/" + std::to_string(entry.runs) +
                " applicable, " + std::to_string(entry.violations) + " applicable-but-failing",
            entry.violations == 0 && entry.applicable > 0);
    for (const auto& [family, count] : entry.failing_families) {
      c.info("  " + name + " fails on " + std::to_string(count) + " x " + family);
    }
  }
  c.check("applicable-but-failing instances across the suite: " + std::to_string(violations),
          violations == 0);
}

}  // namespace
}  // namespace mginv

int main() {
  using mginv::Criterion;
  const std::vector<std::pair<const char*, void (*)(Criterion&)>> criteria = {
      {"GD golden example", mginv::c1_gd_golden},
      {"GDMP golden example", mginv::c2_gdmp_golden},
      {"GD-Star golden example", mginv::c3_gdstar_golden},
      {"solver golden example", mginv::c4_solver_golden},
      {"algebra property suite", mginv::c5_algebra},
      {"inverse property suite", mginv::c6_inverses},
      {"reduction cross-checks", mginv::c7_reductions},
      {"law implication suite", mginv::c8_laws},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.check(std::string("unexpected exception: ") + e.what(), false);
    }
    std::printf("%s criterion %zu: %s\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first);
    for (const auto& line : c.lines()) std::printf("%s\n", line.c_str());
    failed += !c.ok();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
